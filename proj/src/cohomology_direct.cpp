// Direct computation of M(G) = Z^2(G, Z/n) / (B^2 + transgressions), n = |G|.
//
// A normalized cocycle is determined by its values f(g, s) for g != 1 and s in
// a generating set S, so those values are the unknowns. The cocycle identity
// only needs to be imposed for third arguments in S.

#include <random>

#include "tgr/cohomology.hpp"
#include "tgr/modular.hpp"

namespace tgr {

namespace {

struct Layout {
  FiniteGroup G;
  std::vector<Elem> gens;
  std::size_t n = 0, k = 0, w = 0;
  std::uint64_t m = 0;
  // Spanning tree by right multiplication: h = parent[h] * gens[via[h]].
  std::vector<Elem> bfs;
  std::vector<Elem> parent;
  std::vector<std::size_t> via;

  explicit Layout(const FiniteGroup& g) : G(g), gens(generating_set(g)) {
    n = G.order();
    k = gens.size();
    w = (n - 1) * k;
    m = n;
    parent.assign(n, 0);
    via.assign(n, 0);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    bfs.push_back(0);
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      Elem p = bfs[i];
      for (std::size_t s = 0; s < k; ++s) {
        Elem h = G.mul(p, gens[s]);
        if (seen[h]) continue;
        seen[h] = 1;
        parent[h] = p;
        via[h] = s;
        bfs.push_back(h);
      }
    }
  }

  // Variable index of f(g, gens[s]); -1 when g is the identity.
  long var(Elem g, std::size_t s) const { return g == 0 ? -1 : static_cast<long>((g - 1) * k + s); }

  std::vector<u64> restrict(const CocycleTable& a) const {
    std::vector<u64> x(w);
    for (Elem g = 1; g < n; ++g)
      for (std::size_t s = 0; s < k; ++s) x[static_cast<std::size_t>(var(g, s))] = a(g, gens[s]);
    return x;
  }

  // Rebuilds the full table of the cochain determined by the unknowns x.
  CocycleTable expand(const std::vector<u64>& x) const {
    CocycleTable t = CocycleTable::zero(G, static_cast<std::uint32_t>(m));
    auto val = [&](Elem g, std::size_t s) -> u64 {
      long v = var(g, s);
      return v < 0 ? 0 : x[static_cast<std::size_t>(v)];
    };
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      Elem h = bfs[i], p = parent[h];
      std::size_t s = via[h];
      for (Elem g = 0; g < n; ++g) {
        if (g == 0) continue;
        u64 v = t(g, p) + val(G.mul(g, p), s) + m - val(p, s);
        t.at(g, h) = static_cast<std::uint32_t>(v % m);
      }
    }
    return t;
  }

  // Cocycle identity with third argument in S (sufficient for all triples).
  bool satisfies_identity(const CocycleTable& t) const {
    for (Elem g = 1; g < n; ++g)
      for (Elem h = 1; h < n; ++h) {
        Elem gh = G.mul(g, h);
        for (Elem s : gens) {
          u64 lhs = static_cast<u64>(t(g, h)) + t(gh, s);
          u64 rhs = static_cast<u64>(t(h, s)) + t(g, G.mul(h, s));
          if (lhs % m != rhs % m) return false;
        }
      }
    return true;
  }
};

// Linear forms for every f(g, h) in terms of the unknowns.
std::vector<std::uint32_t> expressions(const Layout& L) {
  const std::size_t n = L.n, w = L.w;
  std::vector<std::uint32_t> E(n * n * w, 0);
  auto row = [&](Elem g, Elem h) { return E.data() + (static_cast<std::size_t>(g) * n + h) * w; };
  for (std::size_t i = 1; i < L.bfs.size(); ++i) {
    Elem h = L.bfs[i], p = L.parent[h];
    std::size_t s = L.via[h];
    long vp = L.var(p, s);
    for (Elem g = 1; g < n; ++g) {
      std::uint32_t* dst = row(g, h);
      const std::uint32_t* src = row(g, p);
      std::copy(src, src + w, dst);
      long vg = L.var(L.G.mul(g, p), s);
      if (vg >= 0) dst[vg] = static_cast<std::uint32_t>((dst[vg] + 1) % L.m);
      if (vp >= 0) dst[vp] = static_cast<std::uint32_t>((dst[vp] + L.m - 1) % L.m);
    }
  }
  return E;
}

std::vector<std::vector<u64>> cocycle_space(const Layout& L, std::uint64_t seed) {
  const std::size_t n = L.n, w = L.w;
  const u64 m = L.m;
  const auto E = expressions(L);
  auto row = [&](Elem g, Elem h) { return E.data() + (static_cast<std::size_t>(g) * n + h) * w; };
  std::size_t buckets = w + 32;
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + n * 131 + static_cast<unsigned>(attempt));
    ModMatrix B(buckets, w, m);
    std::vector<u64> eq(w);
    for (Elem g = 1; g < n; ++g)
      for (Elem h = 1; h < n; ++h) {
        Elem gh = L.G.mul(g, h);
        const std::uint32_t* fgh = row(g, h);
        for (std::size_t s = 0; s < L.k; ++s) {
          Elem hs = L.G.mul(h, L.gens[s]);
          const std::uint32_t* fghs = row(g, hs);
          bool zero = true;
          for (std::size_t j = 0; j < w; ++j) {
            eq[j] = (static_cast<u64>(fgh[j]) + m - fghs[j]) % m;
            zero &= eq[j] == 0;
          }
          long a = L.var(gh, s), b = L.var(h, s);
          if (a >= 0) eq[static_cast<std::size_t>(a)] = (eq[static_cast<std::size_t>(a)] + 1) % m, zero = false;
          if (b >= 0) eq[static_cast<std::size_t>(b)] = (eq[static_cast<std::size_t>(b)] + m - 1) % m, zero = false;
          if (zero) continue;
          for (int rep = 0; rep < 2; ++rep) {
            auto dst = B.row(rng() % buckets);
            u64 c = rng() % m;
            if (c == 0) c = 1;
            for (std::size_t j = 0; j < w; ++j)
              if (eq[j]) dst[j] = (dst[j] + mul_mod(c, eq[j], m)) % m;
          }
        }
      }
    SmithOptions o;
    o.want_Q = true;
    auto sf = smith_form(std::move(B), std::move(o));
    auto kernel = right_kernel(sf);
    bool ok = true;
    for (const auto& x : kernel)
      if (!L.satisfies_identity(L.expand(x))) {
        ok = false;
        break;
      }
    if (ok) return kernel;
    buckets *= 2;
  }
  throw Error(ErrorKind::InvariantViolation, "cocycle space could not be certified");
}

class DirectReducer : public ClassReducer {
 public:
  DirectReducer(std::shared_ptr<const Layout> L, SmithForm tot, std::size_t r, ModMatrix q2,
                std::vector<std::size_t> keep, std::vector<std::uint64_t> orders)
      : L_(std::move(L)), tot_(std::move(tot)), r_(r), q2_(std::move(q2)), keep_(std::move(keep)),
        orders_(std::move(orders)) {}

  std::vector<std::uint64_t> reduce(const CocycleTable& alpha) const override {
    CocycleTable a = to_modulus(alpha, L_->m);
    auto y = solve_right(tot_, L_->restrict(a));
    check_invariant(y.has_value(), "cocycle is outside the computed cocycle space");
    std::vector<u64> c(y->begin(), y->begin() + static_cast<std::ptrdiff_t>(r_));
    auto z = q2_.vec_mul(c);
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < keep_.size(); ++i) out.push_back(z[keep_[i]] % orders_[i]);
    return out;
  }

 private:
  std::shared_ptr<const Layout> L_;
  SmithForm tot_;
  std::size_t r_;
  ModMatrix q2_;
  std::vector<std::size_t> keep_;
  std::vector<std::uint64_t> orders_;
};

// Transgression cocycles of a basis of Hom(G, Z/n).
std::vector<CocycleTable> transgressions(const FiniteGroup& G) {
  const std::uint64_t m = G.order();
  auto [Q, proj] = quotient(G, G.structure().derived);
  auto D = abelian_decomposition(Q);
  std::vector<CocycleTable> out;
  for (std::size_t j = 0; j < D.invariants.size(); ++j) {
    std::vector<u64> a(G.order());
    for (Elem g = 0; g < G.order(); ++g) a[g] = (m / D.invariants[j]) * D.coords[proj(g)][j] % m;
    out.push_back(cocycle_from(G, static_cast<std::uint32_t>(m), [&](Elem g, Elem h) {
      return static_cast<long long>((a[g] + a[h] - a[G.mul(g, h)]) / m);
    }));
  }
  return out;
}

}  // namespace

CohomologyGroup schur_multiplier(const FiniteGroup& G, MultiplierOptions opts) {
  if (G.order() > opts.direct_bound)
    throw Error(ErrorKind::SizeBound, "order " + std::to_string(G.order()) +
                                          " exceeds the direct-method bound " +
                                          std::to_string(opts.direct_bound));
  CohomologyGroup M;
  M.group = G;
  M.method = "direct";
  if (G.order() == 1) return M;

  auto L = std::make_shared<Layout>(G);
  const std::size_t n = L->n, w = L->w;
  const u64 m = L->m;

  auto K = cocycle_space(*L, opts.seed);
  const std::size_t r = K.size();

  // Coboundaries of point masses, then transgressions.
  std::vector<std::vector<u64>> R;
  for (Elem g = 1; g < n; ++g) {
    std::vector<u64> v(w, 0);
    for (Elem x = 1; x < n; ++x)
      for (std::size_t s = 0; s < L->k; ++s) {
        Elem xs = G.mul(x, L->gens[s]);
        long val = (x == g) + (L->gens[s] == g) - (xs == g);
        v[static_cast<std::size_t>(L->var(x, s))] = reduce_mod(val, m);
      }
    R.push_back(std::move(v));
  }
  auto trans = transgressions(G);
  for (const auto& t : trans) R.push_back(L->restrict(t));

  // Columns of Mt: the cocycle generators followed by the relation cocycles.
  ModMatrix Mt(w, r + R.size(), m);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < w; ++i) Mt.at(i, j) = K[j][i];
  for (std::size_t j = 0; j < R.size(); ++j)
    for (std::size_t i = 0; i < w; ++i) Mt.at(i, r + j) = R[j][i];
  SmithOptions o;
  o.want_P = o.want_Q = true;
  SmithForm tot = smith_form(std::move(Mt), std::move(o));

  // Relations among the cocycle generators modulo the relation cocycles.
  ModMatrix Rel(0, r, m);
  for (const auto& y : right_kernel(tot)) Rel.append_row(std::span<const u64>(y.data(), r));
  if (Rel.rows() == 0) Rel = ModMatrix(1, r, m);
  SmithOptions o2;
  o2.want_Q = o2.want_Qinv = true;
  SmithForm rel = smith_form(std::move(Rel), std::move(o2));

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < r; ++i)
    if (rel.diag[i] > 1) keep.push_back(i);

  std::vector<std::vector<u64>> gens;
  for (std::size_t i : keep) {
    M.orders.push_back(rel.diag[i]);
    std::vector<u64> x(w, 0);
    for (std::size_t j = 0; j < r; ++j) {
      u64 c = rel.Qinv->at(i, j);
      if (!c) continue;
      for (std::size_t t = 0; t < w; ++t) x[t] = (x[t] + mul_mod(c, K[j][t], m)) % m;
    }
    gens.push_back(std::move(x));
  }
  M.reducer = std::make_shared<DirectReducer>(L, std::move(tot), r, std::move(*rel.Q), keep, M.orders);

  // Minimize: find a, t with gen + delta(a) + sum t_j T_j = 0 mod n/d on the unknowns.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const u64 d = M.orders[i], q = m / d;
    CocycleTable full = L->expand(gens[i]);
    if (q > 1) {
      ModMatrix A(w, R.size(), q);
      for (std::size_t j = 0; j < R.size(); ++j)
        for (std::size_t t = 0; t < w; ++t) A.at(t, j) = R[j][t] % q;
      std::vector<u64> rhs(w);
      for (std::size_t t = 0; t < w; ++t) rhs[t] = (q - gens[i][t] % q) % q;
      SmithOptions o3;
      o3.want_P = o3.want_Q = true;
      auto sol = solve_right(smith_form(std::move(A), std::move(o3)), rhs);
      check_invariant(sol.has_value(), "class has no representative of its own order");
      std::vector<u64> a(n, 0);
      for (Elem g = 1; g < n; ++g) a[g] = (*sol)[g - 1];
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          u64 v = full(x, y) + a[x] + a[y] + m - a[G.mul(x, y)];
          for (std::size_t j = 0; j < trans.size(); ++j) v += (*sol)[n - 1 + j] * trans[j](x, y);
          full.at(x, y) = static_cast<std::uint32_t>(v % m);
        }
      for (auto v : full.values) check_invariant(v % q == 0, "minimized representative has wrong values");
    }
    M.generators.push_back(std::move(full));
  }

  for (std::size_t i = 0; i < M.generators.size(); ++i) {
    check_invariant(L->satisfies_identity(M.generators[i]), "generator is not a cocycle");
    CohClass want = M.identity();
    want.coeffs[i] = 1;
    check_invariant(M.reduce(M.generators[i]) == want, "generator does not reduce to its basis vector");
  }
  return M;
}

}  // namespace tgr
