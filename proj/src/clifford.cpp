#include "tgr/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "tgr/modular.hpp"

namespace tgr {

namespace {

using Vec = std::vector<std::uint64_t>;

IntMatrix identity_matrix(std::size_t r) {
  IntMatrix I(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) I[i][i] = 1;
  return I;
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B, std::uint64_t m) {
  const std::size_t r = A.size();
  IntMatrix C(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l < r; ++l) {
      if (A[i][l] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) C[i][j] = (C[i][j] + mul_mod(A[i][l], B[l][j], m)) % m;
    }
  return C;
}

IntMatrix mat_pow(IntMatrix A, std::uint64_t e, std::uint64_t m) {
  IntMatrix R = identity_matrix(A.size());
  for (auto& row : R)
    for (auto& v : row) v %= m;
  while (e) {
    if (e & 1) R = mat_mul(R, A, m);
    A = mat_mul(A, A, m);
    e >>= 1;
  }
  return R;
}

IntMatrix reduce(const IntMatrix& A, std::uint64_t m) {
  IntMatrix B = A;
  for (auto& row : B)
    for (auto& v : row) v %= m;
  return B;
}

// A x
Vec mat_vec(const IntMatrix& A, const Vec& x, std::uint64_t m) {
  Vec y(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] = (y[i] + mul_mod(A[i][j], x[j], m)) % m;
  return y;
}

// A^T c
Vec mat_t_vec(const IntMatrix& A, const Vec& c, std::uint64_t m) {
  Vec y(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) y[i] = (y[i] + mul_mod(A[j][i], c[j], m)) % m;
  return y;
}

std::uint64_t det_mod(const IntMatrix& A, std::uint64_t m) {
  const std::size_t r = A.size();
  if (r == 0) return 1 % m;
  if (r == 1) return A[0][0] % m;
  std::uint64_t d = 0;
  for (std::size_t j = 0; j < r; ++j) {
    IntMatrix minor;
    for (std::size_t i = 1; i < r; ++i) {
      Vec row;
      for (std::size_t l = 0; l < r; ++l)
        if (l != j) row.push_back(A[i][l]);
      minor.push_back(row);
    }
    std::uint64_t term = mul_mod(A[0][j] % m, det_mod(minor, m), m);
    d = (j % 2 == 0) ? (d + term) % m : (d + m - term) % m;
  }
  return d;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Vec decode(std::uint64_t idx, std::uint64_t m, std::size_t r) {
  Vec x(r);
  for (std::size_t i = 0; i < r; ++i) {
    x[i] = idx % m;
    idx /= m;
  }
  return x;
}

std::uint64_t encode(const Vec& x, std::uint64_t m) {
  std::uint64_t idx = 0;
  for (std::size_t i = x.size(); i-- > 0;) idx = idx * m + x[i];
  return idx;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> f;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      std::uint64_t q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      f.emplace_back(p, q);
    }
  if (n > 1) f.emplace_back(n, n);
  return f;
}

}  // namespace

std::uint64_t StructuredGroup::n_order() const { return ipow(m, rank); }

std::uint64_t StructuredGroup::k_order() const {
  std::uint64_t s = 1;
  for (auto d : k) s *= d;
  return s;
}

void StructuredGroup::validate() const {
  auto fail = [&](const std::string& what) { throw Error(ErrorKind::InvalidGroup, name + ": " + what); };
  if (m == 0 || action.size() != k.size()) fail("one action matrix per factor of K is required");
  for (auto d : k)
    if (d == 0) fail("cyclic factor of order 0");
  if (std::gcd(n_order(), k_order()) != 1) throw Error(ErrorKind::NotCoprime, name + ": |N| and |K| are not coprime");
  for (std::size_t i = 0; i < action.size(); ++i) {
    const auto& A = action[i];
    if (A.size() != rank) fail("action matrix has the wrong size");
    for (const auto& row : A)
      if (row.size() != rank) fail("action matrix has the wrong size");
    if (std::gcd(det_mod(A, m), m) != 1 && m > 1) fail("action matrix is not invertible");
    if (reduce(mat_pow(A, k[i], m), m) != reduce(identity_matrix(rank), m))
      throw Error(ErrorKind::ActionNotHomomorphism, name + ": generator order does not match its matrix");
    for (std::size_t j = 0; j < i; ++j)
      if (mat_mul(A, action[j], m) != mat_mul(action[j], A, m))
        throw Error(ErrorKind::ActionNotHomomorphism, name + ": action matrices do not commute");
  }
}

std::vector<std::uint64_t> StructuredGroup::k_element(std::size_t idx) const {
  Vec e(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    e[i] = idx % k[i];
    idx /= k[i];
  }
  return e;
}

IntMatrix StructuredGroup::k_matrix(const std::vector<std::uint64_t>& exps) const {
  IntMatrix R = reduce(identity_matrix(rank), m);
  for (std::size_t i = 0; i < k.size(); ++i) R = mat_mul(R, mat_pow(action[i], exps[i], m), m);
  return R;
}

FiniteGroup StructuredGroup::materialize(std::size_t bound) const {
  validate();
  if (order() > bound) throw Error(ErrorKind::SizeBound, name + ": order " + std::to_string(order()) + " exceeds the bound");
  FiniteGroup N, K;
  for (std::size_t i = 0; i < rank; ++i) N = direct_product(N, make_cyclic(m));
  for (auto d : k) K = direct_product(K, make_cyclic(d));
  Action act;
  std::uint64_t stride = 1;
  for (std::size_t i = 0; i < k.size(); ++i) {
    act.t_generators.push_back(static_cast<Elem>(stride));
    stride *= k[i];
    std::vector<Elem> img(N.order());
    for (std::uint64_t x = 0; x < N.order(); ++x)
      img[x] = static_cast<Elem>(encode(mat_vec(action[i], decode(x, m, rank), m), m));
    act.automorphisms.push_back(std::move(img));
  }
  return semidirect_product(N, K, act).renamed(name);
}

namespace {

// Commutator pairing of a K-twist, valued in Z/exp(K).
struct KPairing {
  const StructuredGroup& G;
  const IntMatrix& beta;
  std::uint64_t L = 1;

  KPairing(const StructuredGroup& g, const IntMatrix& b) : G(g), beta(b) {
    for (auto d : G.k) L = std::lcm(L, d);
  }
  bool trivial() const {
    for (const auto& row : beta)
      for (auto v : row)
        if (v) return false;
    return true;
  }
  std::uint64_t operator()(const Vec& x, const Vec& y) const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < G.k.size(); ++i)
      for (std::size_t j = i + 1; j < G.k.size(); ++j) {
        if (beta.empty() || beta[i][j] == 0) continue;
        const std::uint64_t g = std::gcd(G.k[i], G.k[j]);
        const std::uint64_t step = L / g;
        const std::uint64_t t = beta[i][j] % g;
        std::uint64_t a = mul_mod(x[i], y[j], L), b = mul_mod(x[j], y[i], L);
        s = (s + mul_mod(mul_mod(t, step, L), (a + L - b) % L, L)) % L;
      }
    return s;
  }
};

struct KElements {
  std::vector<Vec> exps;
  std::vector<IntMatrix> mats;
};

KElements k_elements(const StructuredGroup& G) {
  KElements E;
  for (std::size_t i = 0; i < G.k_order(); ++i) {
    E.exps.push_back(G.k_element(i));
    E.mats.push_back(G.k_matrix(E.exps.back()));
  }
  return E;
}

// Degrees of C^beta S for a subgroup S of K given by member indices.
std::vector<std::uint64_t> k_twisted_degrees(const KElements& E, const KPairing& b,
                                             const std::vector<std::size_t>& members) {
  if (b.trivial()) return std::vector<std::uint64_t>(members.size(), 1);
  std::uint64_t rad = 0;
  for (auto s : members) {
    bool in = true;
    for (auto t : members)
      if (b(E.exps[s], E.exps[t]) != 0) {
        in = false;
        break;
      }
    rad += in;
  }
  const std::uint64_t q = members.size() / rad;
  auto f = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
  check_invariant(f * f == q && rad * q == members.size(), "twisted abelian algebra has a non-square block");
  return std::vector<std::uint64_t>(rad, f);
}

struct OrbitData {
  std::uint64_t block_degree = 1;  // e
  std::vector<std::uint64_t> lengths;
  std::vector<Vec> reps;           // a character c of N per orbit
  std::vector<Vec> radical_gens;
};

std::uint64_t restriction_key(const OrbitData& O, const Vec& c, std::uint64_t m) {
  std::uint64_t k = 0;
  for (const auto& g : O.radical_gens) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) v = (v + mul_mod(c[i], g[i], m)) % m;
    k = k * m + v;
  }
  return k;
}

// K-orbits on characters of the radical of the commutator form `omega`.
OrbitData radical_orbits(const StructuredGroup& G, const IntMatrix& omega) {
  const std::uint64_t m = G.m, nN = G.n_order();
  const std::size_t r = G.rank;
  OrbitData out;
  bool zero_form = true;
  for (const auto& row : omega)
    for (auto v : row) zero_form &= (v % m) == 0;
  std::uint64_t radical_size = 0;
  if (zero_form || omega.empty()) {
    for (std::size_t i = 0; i < r; ++i) {
      Vec e(r, 0);
      e[i] = 1;
      out.radical_gens.push_back(e);
    }
    radical_size = nN;
  } else {
    std::unordered_map<std::uint64_t, bool> span{{0, true}};
    for (std::uint64_t idx = 0; idx < nN; ++idx) {
      Vec x = decode(idx, m, r);
      Vec y = mat_vec(omega, x, m);
      if (std::any_of(y.begin(), y.end(), [](auto v) { return v != 0; })) continue;
      ++radical_size;
      if (span.count(idx)) continue;
      out.radical_gens.push_back(x);
      std::vector<Vec> frontier;
      for (auto& [key, unused] : span) frontier.push_back(decode(key, m, r));
      for (const auto& base : frontier) {
        Vec z = base;
        for (std::uint64_t t = 1; t < m; ++t) {
          for (std::size_t i = 0; i < r; ++i) z[i] = (z[i] + x[i]) % m;
          span.emplace(encode(z, m), true);
        }
      }
    }
  }
  const std::uint64_t q = nN / radical_size;
  out.block_degree = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
  check_invariant(out.block_degree * out.block_degree == q, "commutator form has a non-square quotient");

  auto key = [&](const Vec& c) { return restriction_key(out, c, m); };
  std::unordered_map<std::uint64_t, std::uint32_t> id;
  std::vector<Vec> rep;
  for (std::uint64_t idx = 0; idx < nN && rep.size() < radical_size; ++idx) {
    Vec c = decode(idx, m, r);
    if (id.emplace(key(c), static_cast<std::uint32_t>(rep.size())).second) rep.push_back(c);
  }
  check_invariant(rep.size() == radical_size, "radical characters were not all found");
  std::vector<std::vector<std::uint32_t>> perm(G.k.size(), std::vector<std::uint32_t>(rep.size()));
  for (std::size_t g = 0; g < G.k.size(); ++g)
    for (std::size_t i = 0; i < rep.size(); ++i) perm[g][i] = id.at(key(mat_t_vec(G.action[g], rep[i], m)));
  std::vector<bool> seen(rep.size(), false);
  for (std::size_t i = 0; i < rep.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(i)};
    seen[i] = true;
    std::uint64_t len = 0;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      ++len;
      for (const auto& p : perm)
        if (!seen[p[x]]) {
          seen[p[x]] = true;
          stack.push_back(p[x]);
        }
    }
    out.lengths.push_back(len);
    out.reps.push_back(rep[i]);
  }
  return out;
}


}  // namespace

OrbitCensus orbit_census(const StructuredGroup& G) {
  G.validate();
  auto O = radical_orbits(G, {});
  OrbitCensus census;
  for (auto l : O.lengths) ++census[l];
  std::uint64_t total = 0;
  for (auto [l, c] : census) {
    check_invariant(G.k_order() % l == 0, "orbit length does not divide |K|");
    total += l * c;
  }
  check_invariant(total == G.n_order(), "orbits do not cover N*");
  return census;
}

WedderburnType structured_twisted_degrees(const StructuredGroup& G, const StructuredClass& c) {
  G.validate();
  const KPairing b(G, c.beta);
  auto O = radical_orbits(G, c.omega);
  KElements E;
  if (!b.trivial()) E = k_elements(G);
  std::map<std::vector<std::size_t>, std::vector<std::uint64_t>> cache;
  std::vector<std::uint64_t> degrees;
  for (std::size_t o = 0; o < O.lengths.size(); ++o) {
    const std::uint64_t len = O.lengths[o];
    const std::uint64_t scale = O.block_degree * len;
    if (b.trivial()) {
      degrees.insert(degrees.end(), G.k_order() / len, scale);
      continue;
    }
    const std::uint64_t key = restriction_key(O, O.reps[o], G.m);
    std::vector<std::size_t> stab;
    for (std::size_t i = 0; i < E.mats.size(); ++i)
      if (restriction_key(O, mat_t_vec(E.mats[i], O.reps[o], G.m), G.m) == key) stab.push_back(i);
    check_invariant(stab.size() * len == G.k_order(), "orbit-stabilizer count failed");
    auto it = cache.find(stab);
    if (it == cache.end()) it = cache.emplace(stab, k_twisted_degrees(E, b, stab)).first;
    for (auto f : it->second) degrees.push_back(scale * f);
  }
  auto w = WedderburnType::from_degrees(std::move(degrees));
  check_invariant(w.dimension() == G.order(), "structured degrees do not fill the algebra");
  return w;
}

WedderburnType degrees_abelian_normal(const StructuredGroup& G) {
  auto census = orbit_census(G);
  std::vector<std::uint64_t> degrees;
  for (auto [len, count] : census) degrees.insert(degrees.end(), count * (G.k_order() / len), len);
  auto w = WedderburnType::from_degrees(std::move(degrees));
  check_invariant(w.dimension() == G.order(), "orbit degrees do not fill the group algebra");
  return w;
}

std::size_t StructuredMultiplier::index_of(const std::vector<std::uint64_t>& c) const {
  std::size_t idx = 0;
  for (std::size_t i = orders.size(); i-- > 0;) idx = idx * orders[i] + c[i];
  return idx;
}

namespace {

FiniteGroup cyclic_product(const std::vector<std::uint64_t>& k) {
  FiniteGroup K;
  for (auto d : k) K = direct_product(K, make_cyclic(d));
  return K;
}

std::uint64_t class_order_of(const std::vector<std::uint64_t>& orders, const std::vector<std::uint64_t>& c) {
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) o = std::lcm(o, orders[i] / std::gcd(orders[i], c[i]));
  return o;
}

}  // namespace

StructuredMultiplier structured_multiplier(const StructuredGroup& G, std::size_t bound) {
  G.validate();
  const std::uint64_t m = G.m;
  const std::size_t r = G.rank, s = G.k.size();
  std::vector<std::pair<std::size_t, std::size_t>> npairs, kpairs;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) npairs.emplace_back(i, j);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (std::gcd(G.k[i], G.k[j]) > 1) kpairs.emplace_back(i, j);

  auto form = [&](const Vec& v) {
    IntMatrix C(r, Vec(r, 0));
    for (std::size_t p = 0; p < npairs.size(); ++p) {
      auto [i, j] = npairs[p];
      C[i][j] = v[p] % m;
      C[j][i] = (m - v[p] % m) % m;
    }
    return C;
  };
  const std::uint64_t candidates = ipow(m, npairs.size());
  if (candidates > bound) throw Error(ErrorKind::SizeBound, G.name + ": too many alternating forms on N");
  std::vector<Vec> fixed;
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    Vec v = decode(idx, m, npairs.size());
    IntMatrix C = form(v);
    bool inv = true;
    for (const auto& A : G.action) {
      IntMatrix T(r, Vec(r, 0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) T[i][j] = mat_t_vec(A, mat_vec(C, [&] {
                                                       Vec e(r, 0);
                                                       for (std::size_t l = 0; l < r; ++l) e[l] = A[l][j] % m;
                                                       return e;
                                                     }(), m), m)[i];
      if (T != C) {
        inv = false;
        break;
      }
    }
    if (inv) fixed.push_back(v);
  }
  std::vector<std::uint64_t> kradix;
  for (auto [i, j] : kpairs) kradix.push_back(std::gcd(G.k[i], G.k[j]));
  FiniteGroup KM = cyclic_product(kradix);
  if (fixed.size() * KM.order() > bound) throw Error(ErrorKind::SizeBound, G.name + ": multiplier too large");

  std::unordered_map<std::uint64_t, Elem> pos;
  for (std::size_t i = 0; i < fixed.size(); ++i) pos[encode(fixed[i], m)] = static_cast<Elem>(i);
  const std::size_t f = fixed.size();
  std::vector<Elem> table(f * f);
  for (std::size_t a = 0; a < f; ++a)
    for (std::size_t b = 0; b < f; ++b) {
      Vec v(npairs.size());
      for (std::size_t p = 0; p < v.size(); ++p) v[p] = (fixed[a][p] + fixed[b][p]) % m;
      table[a * f + b] = pos.at(encode(v, m));
    }
  FiniteGroup F = FiniteGroup::from_table(f, std::move(table));
  FiniteGroup P = direct_product(F, KM);
  auto D = abelian_decomposition(P);

  StructuredMultiplier out;
  out.orders = D.invariants;
  out.classes.resize(P.order());
  out.coords.resize(P.order());
  for (Elem e = 0; e < P.order(); ++e) {
    Vec c(D.coords[e].begin(), D.coords[e].end());
    const std::size_t idx = out.index_of(c);
    StructuredClass sc;
    sc.omega = form(fixed[e % f]);
    sc.beta.assign(s, Vec(s, 0));
    std::size_t rest = e / f;
    for (std::size_t p = 0; p < kpairs.size(); ++p) {
      sc.beta[kpairs[p].first][kpairs[p].second] = rest % kradix[p];
      rest /= kradix[p];
    }
    out.classes[idx] = std::move(sc);
    out.coords[idx] = std::move(c);
  }
  return out;
}

StructuredProfile structured_profile(const StructuredGroup& G) {
  StructuredProfile P;
  P.multiplier = structured_multiplier(G);
  for (std::size_t i = 0; i < P.multiplier.classes.size(); ++i) {
    auto w = structured_twisted_degrees(G, P.multiplier.classes[i]);
    const auto d = class_order_of(P.multiplier.orders, P.multiplier.coords[i]);
    for (auto [deg, mult] : w.parts) check_invariant(deg % d == 0, "class order does not divide a projective degree");
    P.types.push_back(std::move(w));
  }
  return P;
}

WedderburnType twisted_degrees_structured(const StructuredGroup& G, std::uint64_t d, std::uint64_t twist) {
  G.validate();
  if (G.rank != 2) throw Error(ErrorKind::ShapeMismatch, G.name + ": N must have rank 2");
  if (d == 0 || G.m % d != 0) throw Error(ErrorKind::ShapeMismatch, G.name + ": d must divide m");
  for (const auto& A : G.action)
    if (det_mod(A, d) != 1 % d)
      throw Error(ErrorKind::ShapeMismatch, G.name + ": no invariant class of order " + std::to_string(d) + " on N");
  StructuredGroup H = G;
  H.name = G.name + "/" + std::to_string(d);
  H.m = G.m / d;
  for (auto& A : H.action) A = reduce(A, H.m);
  WedderburnType base = degrees_abelian_normal(H);
  std::vector<std::uint64_t> degrees;
  for (auto [deg, mult] : base.parts) degrees.insert(degrees.end(), mult, deg);
  if (twist != 0) {
    if (G.k.size() != 2 || G.k[0] != G.k[1] || factor(G.k[0]).size() != 1 || factor(G.k[0])[0].second != G.k[0])
      throw Error(ErrorKind::ShapeMismatch, G.name + ": K must be C_p x C_p for a twisted K-part");
    const std::uint64_t p = G.k[0];
    if (twist % p != 0) {
      if (base.multiplicity(1) != p * p)
        throw Error(ErrorKind::ShapeMismatch, G.name + ": expected exactly p^2 linear characters");
      degrees.erase(std::remove(degrees.begin(), degrees.end(), 1), degrees.end());
      degrees.push_back(p);
    }
  }
  for (auto& x : degrees) x *= d;
  auto w = WedderburnType::from_degrees(std::move(degrees));
  check_invariant(w.dimension() == G.order(), "scaled degrees do not fill the algebra");
  return w;
}

namespace {

// Size of the subgroup of (Z/m)^r generated by `gens`.
std::uint64_t span_size(const std::vector<Vec>& gens, std::uint64_t m, std::size_t r) {
  const std::uint64_t n = ipow(m, r);
  std::vector<bool> in(n, false);
  in[0] = true;
  std::vector<std::uint64_t> stack{0};
  std::uint64_t count = 1;
  while (!stack.empty()) {
    Vec x = decode(stack.back(), m, r);
    stack.pop_back();
    for (const auto& g : gens) {
      Vec y(r);
      for (std::size_t i = 0; i < r; ++i) y[i] = (x[i] + g[i]) % m;
      auto e = encode(y, m);
      if (!in[e]) {
        in[e] = true;
        ++count;
        stack.push_back(e);
      }
    }
  }
  return count;
}

}  // namespace

SquarefreeInvariants squarefree_invariants(const StructuredGroup& G) {
  G.validate();
  const auto order = G.order();
  const auto n = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(order))));
  bool squarefree = n * n == order;
  for (auto [p, q] : factor(n)) squarefree &= p == q;
  if (!squarefree) throw Error(ErrorKind::ShapeMismatch, G.name + ": order is not a square of a square-free number");
  if (G.rank != 2 || G.k.size() != 2 || G.k[0] != G.k[1])
    throw Error(ErrorKind::ShapeMismatch, G.name + ": expected (C_m x C_m) : (C_k x C_k)");
  SquarefreeInvariants S;
  S.m = G.m;
  S.k = G.k[0];
  auto E = k_elements(G);
  for (auto [p, q] : factor(G.m)) {
    auto& ker = S.kernels[p];
    for (std::size_t i = 0; i < E.mats.size(); ++i)
      if (reduce(E.mats[i], q) == reduce(identity_matrix(G.rank), q)) ker.push_back(E.exps[i]);
  }
  std::uint64_t trivial = 0, fixed = 0;
  for (std::size_t i = 0; i < E.mats.size(); ++i) trivial += E.mats[i] == reduce(identity_matrix(G.rank), G.m);
  for (std::uint64_t idx = 0; idx < G.n_order(); ++idx) {
    Vec x = decode(idx, G.m, G.rank);
    bool f = true;
    for (const auto& A : G.action) f &= mat_vec(A, x, G.m) == x;
    fixed += f;
  }
  S.center_order = trivial * fixed;
  std::vector<Vec> gens;
  for (const auto& A : G.action)
    for (std::size_t j = 0; j < G.rank; ++j) {
      Vec col(G.rank);
      for (std::size_t i = 0; i < G.rank; ++i) col[i] = (A[i][j] + G.m - (i == j ? 1 : 0)) % G.m;
      gens.push_back(col);
    }
  S.derived_order = span_size(gens, G.m, G.rank);
  return S;
}

namespace {

// Some invertible P over Z/Q with P A_i = B_i P for all i.
std::optional<IntMatrix> intertwiner(const std::vector<IntMatrix>& A, const std::vector<IntMatrix>& B, std::uint64_t Q,
                                     std::uint64_t prime, std::size_t budget) {
  const std::size_t r = A.empty() ? 0 : A[0].size();
  if (r == 0) return IntMatrix{};
  ModMatrix sys(0, r * r, Q);
  for (std::size_t g = 0; g < A.size(); ++g)
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) {
        Vec row(r * r, 0);
        for (std::size_t l = 0; l < r; ++l) {
          row[a * r + l] = (row[a * r + l] + A[g][l][b]) % Q;
          row[l * r + b] = (row[l * r + b] + Q - B[g][a][l] % Q) % Q;
        }
        sys.append_row(row);
      }
  std::vector<Vec> gens;
  std::vector<std::uint64_t> orders;
  if (sys.rows() == 0) {
    for (std::size_t i = 0; i < r * r; ++i) {
      Vec e(r * r, 0);
      e[i] = 1;
      gens.push_back(e);
      orders.push_back(Q);
    }
  } else {
    auto sf = smith_form(sys, SmithOptions{.want_Q = true, .rhs = {}});
    gens = right_kernel(sf);
    for (const auto& g : gens) {
      std::uint64_t c = Q;
      for (auto v : g) c = std::gcd(c, v);
      orders.push_back(Q / c);
    }
  }
  std::uint64_t total = 1;
  for (auto o : orders) {
    total *= o;
    if (total > budget) throw Error(ErrorKind::SearchBudgetExceeded, "intertwiner space too large to enumerate");
  }
  Vec coef(gens.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      coef[i] = rest % orders[i];
      rest /= orders[i];
    }
    IntMatrix P(r, Vec(r, 0));
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (coef[i])
        for (std::size_t e = 0; e < r * r; ++e) P[e / r][e % r] = (P[e / r][e % r] + mul_mod(coef[i], gens[i][e], Q)) % Q;
    if (det_mod(P, Q) % prime != 0) return P;
  }
  return std::nullopt;
}

}  // namespace

StructuredIso structured_isomorphism(const StructuredGroup& G, const StructuredGroup& H, std::size_t budget) {
  G.validate();
  H.validate();
  StructuredIso out;
  if (G.m != H.m || G.rank != H.rank) {
    out.reason = "normal Hall subgroups differ";
    return out;
  }
  FiniteGroup KG = cyclic_product(G.k), KH = cyclic_product(H.k);
  if (abelian_invariants(KG) != abelian_invariants(KH)) {
    out.reason = "complements differ";
    return out;
  }
  if (degrees_abelian_normal(G) != degrees_abelian_normal(H)) {
    out.reason = "group algebras differ";
    return out;
  }
  const auto primes = factor(G.m);
  for (const auto& tau : abelian_isomorphisms(KG, KH)) {
    std::vector<Vec> images;
    std::vector<IntMatrix> B;
    std::uint64_t stride = 1;
    for (std::size_t i = 0; i < G.k.size(); ++i) {
      images.push_back(H.k_element(tau(static_cast<Elem>(stride))));
      B.push_back(H.k_matrix(images.back()));
      stride *= G.k[i];
    }
    std::map<std::uint64_t, IntMatrix> changes;
    bool ok = true;
    for (auto [p, q] : primes) {
      std::vector<IntMatrix> Aq, Bq;
      for (const auto& A : G.action) Aq.push_back(reduce(A, q));
      for (const auto& M : B) Bq.push_back(reduce(M, q));
      auto P = intertwiner(Aq, Bq, q, p, budget);
      if (!P) {
        ok = false;
        break;
      }
      changes[p] = *P;
    }
    if (ok) {
      out.isomorphic = true;
      out.k_images = std::move(images);
      out.base_change = std::move(changes);
      out.reason = "actions conjugate after an automorphism of K";
      return out;
    }
  }
  out.reason = "no automorphism of K makes the actions conjugate";
  return out;
}

}  // namespace tgr
