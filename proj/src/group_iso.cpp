#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "tgr/group.hpp"
#include "tgr/modular.hpp"

namespace tgr {

AbelianDecomposition abelian_decomposition(const FiniteGroup& A) {
  if (!A.is_abelian()) throw Error(ErrorKind::NotAbelian, "group is not abelian");
  const std::size_t n = A.order();
  AbelianDecomposition out;
  out.coords.assign(n, {});
  if (n == 1) return out;

  const auto gens = generating_set(A);
  const std::size_t k = gens.size();
  const u64 e = A.structure().exponent;

  // Word coordinates over the generators, from a breadth-first spanning tree.
  std::vector<std::vector<u64>> word(n);
  word[0].assign(k, 0);
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem h = queue[i];
    for (std::size_t s = 0; s < k; ++s) {
      Elem hs = A.mul(h, gens[s]);
      if (!word[hs].empty()) continue;
      word[hs] = word[h];
      word[hs][s] = (word[hs][s] + 1) % e;
      queue.push_back(hs);
    }
  }

  ModMatrix R(0, k, e);
  std::vector<u64> row(k);
  for (Elem h = 0; h < n; ++h)
    for (std::size_t s = 0; s < k; ++s) {
      Elem hs = A.mul(h, gens[s]);
      bool zero = true;
      for (std::size_t j = 0; j < k; ++j) {
        u64 v = (word[h][j] + (j == s ? 1 : 0) + e - word[hs][j]) % e;
        row[j] = v;
        zero &= v == 0;
      }
      if (!zero) R.append_row(row);
    }
  if (R.rows() == 0) R = ModMatrix(1, k, e);

  SmithOptions opts;
  opts.want_Q = true;
  opts.want_Qinv = true;
  SmithForm sf = smith_form(std::move(R), std::move(opts));

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i)
    if (sf.diag[i] > 1) keep.push_back(i);
  for (std::size_t i : keep) {
    out.invariants.push_back(sf.diag[i]);
    Elem b = 0;
    for (std::size_t j = 0; j < k; ++j) b = A.mul(b, A.pow(gens[j], static_cast<i64>(sf.Qinv->at(i, j))));
    out.basis.push_back(b);
  }
  for (Elem g = 0; g < n; ++g) {
    auto c = sf.Q->vec_mul(word[g]);
    out.coords[g].resize(keep.size());
    for (std::size_t t = 0; t < keep.size(); ++t)
      out.coords[g][t] = static_cast<std::uint32_t>(c[keep[t]] % out.invariants[t]);
  }

  // Self-check: coordinates must be a bijective homomorphism onto the product.
  std::map<std::vector<std::uint32_t>, Elem> seen;
  for (Elem g = 0; g < n; ++g) seen.emplace(out.coords[g], g);
  check_invariant(seen.size() == n, "abelian decomposition is not injective");
  for (std::size_t t = 0; t < keep.size(); ++t)
    check_invariant(A.elem_order(out.basis[t]) == out.invariants[t], "basis element has wrong order");
  return out;
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& A) {
  return abelian_decomposition(A).invariants;
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& G, const Subgroup& H) {
  return abelian_invariants(subgroup_as_group(G, H).first);
}

namespace {

struct MixedRadix {
  std::vector<std::uint64_t> radix;
  std::size_t size() const {
    std::size_t s = 1;
    for (auto r : radix) s *= r;
    return s;
  }
  std::vector<std::uint32_t> decode(std::size_t idx) const {
    std::vector<std::uint32_t> c(radix.size());
    for (std::size_t i = 0; i < radix.size(); ++i) {
      c[i] = static_cast<std::uint32_t>(idx % radix[i]);
      idx /= radix[i];
    }
    return c;
  }
  std::size_t encode(const std::vector<std::uint32_t>& c) const {
    std::size_t idx = 0;
    for (std::size_t i = radix.size(); i-- > 0;) idx = idx * radix[i] + c[i];
    return idx;
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < radix.size(); ++i) x[i] = static_cast<std::uint32_t>((x[i] + y[i]) % radix[i]);
    return encode(x);
  }
  std::uint64_t order_of(std::size_t a) const {
    auto x = decode(a);
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < radix.size(); ++i) o = std::lcm(o, radix[i] / std::gcd<std::uint64_t>(radix[i], x[i]));
    return o;
  }
};

}  // namespace

void for_each_abelian_iso(std::span<const std::uint64_t> src, std::span<const std::uint64_t> dst,
                          const std::function<bool(const std::vector<std::vector<std::uint32_t>>&)>& visit) {
  if (!std::equal(src.begin(), src.end(), dst.begin(), dst.end())) return;
  MixedRadix M{std::vector<std::uint64_t>(dst.begin(), dst.end())};
  const std::size_t total = M.size();
  const std::size_t k = src.size();
  if (k == 0) {
    visit({});
    return;
  }
  std::vector<std::vector<std::size_t>> by_order(k);
  for (std::size_t y = 0; y < total; ++y) {
    auto o = M.order_of(y);
    for (std::size_t i = 0; i < k; ++i)
      if (o == src[i]) by_order[i].push_back(y);
  }
  std::vector<std::vector<std::uint32_t>> images(k);
  // spans[i] = members of the subgroup generated by the first i images.
  std::vector<std::vector<std::size_t>> spans(k + 1);
  spans[0] = {0};
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == k) {
      if (!visit(images)) stop = true;
      return;
    }
    for (std::size_t y : by_order[i]) {
      // New span = span + <y>; independence means the sizes multiply.
      std::vector<char> in(total, 0);
      std::vector<std::size_t> next;
      next.reserve(spans[i].size() * src[i]);
      std::size_t mult = 0;
      bool ok = true;
      for (std::uint64_t t = 0; t < src[i] && ok; ++t) {
        for (std::size_t x : spans[i]) {
          std::size_t z = x;
          if (t) z = M.add(x, mult);
          if (in[z]) {
            ok = false;
            break;
          }
          in[z] = 1;
          next.push_back(z);
        }
        mult = t == 0 ? y : M.add(mult, y);
      }
      if (!ok) continue;
      spans[i + 1] = std::move(next);
      images[i] = M.decode(y);
      rec(i + 1);
      if (stop) return;
    }
  };
  rec(0);
}

std::vector<GroupHom> abelian_isomorphisms(const FiniteGroup& A, const FiniteGroup& B) {
  auto da = abelian_decomposition(A);
  auto db = abelian_decomposition(B);
  std::vector<GroupHom> out;
  MixedRadix MB{db.invariants};
  std::vector<Elem> by_index(B.order());
  for (Elem b = 0; b < B.order(); ++b) by_index[MB.encode(db.coords[b])] = b;
  for_each_abelian_iso(da.invariants, db.invariants, [&](const auto& imgs) {
    GroupHom h{A, B, std::vector<Elem>(A.order())};
    for (Elem a = 0; a < A.order(); ++a) {
      std::vector<std::uint32_t> c(db.invariants.size(), 0);
      for (std::size_t i = 0; i < imgs.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
          c[j] = static_cast<std::uint32_t>((c[j] + static_cast<std::uint64_t>(da.coords[a][i]) * imgs[i][j]) %
                                            db.invariants[j]);
      h.images[a] = by_index[MB.encode(c)];
    }
    out.push_back(std::move(h));
    return true;
  });
  return out;
}

namespace {

using Signature = std::tuple<std::uint32_t, std::size_t>;

Signature signature(const FiniteGroup& G, Elem x) {
  const auto& st = G.structure();
  return {st.element_order[x], st.classes[st.class_of[x]].size()};
}

std::vector<std::pair<Signature, std::size_t>> histogram(const FiniteGroup& G) {
  std::map<Signature, std::size_t> h;
  for (Elem x = 0; x < G.order(); ++x) ++h[signature(G, x)];
  return {h.begin(), h.end()};
}

}  // namespace

std::optional<GroupHom> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H, IsoOptions opts) {
  if (G.order() != H.order()) return std::nullopt;
  if (G.is_abelian() != H.is_abelian()) return std::nullopt;
  const auto& sg = G.structure();
  const auto& sh = H.structure();
  if (sg.classes.size() != sh.classes.size() || sg.center.size() != sh.center.size() ||
      sg.derived.size() != sh.derived.size() || sg.exponent != sh.exponent)
    return std::nullopt;
  if (histogram(G) != histogram(H)) return std::nullopt;
  if (G.is_abelian()) {
    if (abelian_invariants(G) != abelian_invariants(H)) return std::nullopt;
  }

  const std::size_t n = G.order();
  const auto gens = generating_set(G);
  const std::size_t k = gens.size();
  std::vector<std::vector<Elem>> cands(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto sig = signature(G, gens[i]);
    for (Elem y = 0; y < n; ++y)
      if (signature(H, y) == sig) cands[i].push_back(y);
  }

  std::vector<Elem> img(k);
  std::vector<Elem> phi(n);
  std::vector<char> used(n);
  std::uint64_t nodes = 0;

  // Extends the map over <gens[0..i]> and checks consistency.
  auto consistent = [&](std::size_t i) {
    std::fill(phi.begin(), phi.end(), UINT32_MAX);
    std::fill(used.begin(), used.end(), 0);
    phi[0] = 0;
    used[0] = 1;
    std::vector<Elem> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Elem x = queue[q];
      for (std::size_t j = 0; j <= i; ++j) {
        Elem xg = G.mul(x, gens[j]);
        Elem y = H.mul(phi[x], img[j]);
        if (phi[xg] == UINT32_MAX) {
          if (used[y] || signature(G, xg) != signature(H, y)) return false;
          phi[xg] = y;
          used[y] = 1;
          queue.push_back(xg);
        } else if (phi[xg] != y) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == k) return true;
    for (Elem y : cands[i]) {
      if (++nodes > opts.node_budget)
        throw Error(ErrorKind::Timeout, "isomorphism search exceeded its node budget");
      img[i] = y;
      if (!consistent(i)) continue;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  if (k == 0)
    phi.assign(1, 0);
  else
    consistent(k - 1);
  GroupHom h{G, H, phi};
  check_invariant(h.is_bijective(), "isomorphism search produced a non-bijection");
  return h;
}

bool is_isomorphic(const FiniteGroup& G, const FiniteGroup& H, IsoOptions opts) {
  return find_isomorphism(G, H, opts).has_value();
}

}  // namespace tgr
