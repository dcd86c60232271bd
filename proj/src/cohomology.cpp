#include "tgr/cohomology.hpp"

#include <numeric>

#include "tgr/modular.hpp"

namespace tgr {

std::uint64_t CohomologyGroup::size() const {
  std::uint64_t s = 1;
  for (auto d : orders) s *= d;
  return s;
}

std::uint64_t CohomologyGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto d : orders) e = std::lcm(e, d);
  return e;
}

CohClass CohomologyGroup::reduce(const CocycleTable& alpha) const {
  if (orders.empty()) return identity();
  auto c = reducer->reduce(alpha);
  for (std::size_t i = 0; i < orders.size(); ++i) c[i] %= orders[i];
  return CohClass{std::move(c)};
}

std::vector<CohClass> CohomologyGroup::all_classes() const {
  std::vector<CohClass> out;
  const std::uint64_t total = size();
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    CohClass c{std::vector<std::uint64_t>(orders.size())};
    std::uint64_t r = idx;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      c.coeffs[i] = r % orders[i];
      r /= orders[i];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t CohomologyGroup::index_of(const CohClass& c) const {
  std::size_t idx = 0;
  for (std::size_t i = orders.size(); i-- > 0;) idx = idx * orders[i] + c.coeffs[i];
  return idx;
}

CohClass CohomologyGroup::add(const CohClass& a, const CohClass& b) const {
  CohClass c = a;
  for (std::size_t i = 0; i < orders.size(); ++i) c.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % orders[i];
  return c;
}

CohClass CohomologyGroup::scale(const CohClass& a, std::uint64_t k) const {
  CohClass c = a;
  for (std::size_t i = 0; i < orders.size(); ++i) c.coeffs[i] = (a.coeffs[i] * (k % orders[i])) % orders[i];
  return c;
}

std::uint64_t CohomologyGroup::class_order(const CohClass& c) const {
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < orders.size(); ++i)
    o = std::lcm(o, orders[i] / std::gcd(orders[i], c.coeffs[i]));
  return o;
}

CocycleTable CohomologyGroup::representative(const CohClass& c) const {
  const std::uint32_t m = static_cast<std::uint32_t>(group.order());
  CocycleTable out = CocycleTable::zero(group, m);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (c.coeffs[i] == 0) continue;
    const auto& g = generators[i];
    for (std::size_t x = 0; x < out.values.size(); ++x)
      out.values[x] = static_cast<std::uint32_t>((out.values[x] + c.coeffs[i] * g.values[x]) % m);
  }
  return out;
}

CocycleTable CohomologyGroup::minimized(const CohClass& c) const {
  const std::uint64_t o = class_order(c);
  CocycleTable rep = representative(c);
  const std::uint64_t q = group.order() / o;
  CocycleTable out = CocycleTable::zero(group, static_cast<std::uint32_t>(o));
  for (std::size_t x = 0; x < rep.values.size(); ++x) {
    check_invariant(rep.values[x] % q == 0, "representative is not minimized");
    out.values[x] = static_cast<std::uint32_t>(rep.values[x] / q);
  }
  return out;
}

ClassOps class_ops(const CohomologyGroup& M, const CohClass& c) {
  return ClassOps{M.class_order(c), M.representative(c), M.minimized(c)};
}

CocycleTable pull_back(const CocycleTable& alpha, const FiniteGroup& H, std::span<const Elem> f) {
  CocycleTable out = CocycleTable::zero(H, alpha.modulus);
  for (Elem a = 0; a < H.order(); ++a)
    for (Elem b = 0; b < H.order(); ++b) out.at(a, b) = alpha(f[a], f[b]);
  return out;
}

CocycleTable rescale(const CocycleTable& alpha, std::uint64_t scale, std::uint32_t modulus) {
  CocycleTable out = CocycleTable::zero(alpha.group, modulus);
  for (std::size_t x = 0; x < alpha.values.size(); ++x)
    out.values[x] = static_cast<std::uint32_t>((alpha.values[x] * scale) % modulus);
  return out;
}

// Brings a cocycle to modulus m (its modulus must divide m).
CocycleTable to_modulus(const CocycleTable& alpha, std::uint64_t m) {
  if (alpha.modulus == m) return alpha;
  if (m % alpha.modulus != 0)
    throw Error(ErrorKind::InvariantViolation,
                "cocycle modulus " + std::to_string(alpha.modulus) + " does not divide " + std::to_string(m));
  return rescale(alpha, m / alpha.modulus, static_cast<std::uint32_t>(m));
}

std::vector<std::vector<std::uint64_t>> abelian_pairing(const FiniteGroup& A, const CocycleTable& alpha) {
  auto D = abelian_decomposition(A);
  const std::size_t k = D.basis.size();
  const std::uint64_t m = alpha.modulus;
  std::vector<std::vector<std::uint64_t>> P(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      P[i][j] = (alpha(D.basis[i], D.basis[j]) + m - alpha(D.basis[j], D.basis[i])) % m;
  return P;
}

namespace {

class PairingReducer : public ClassReducer {
 public:
  PairingReducer(FiniteGroup A, AbelianDecomposition D, std::vector<std::pair<std::size_t, std::size_t>> pairs)
      : A_(std::move(A)), D_(std::move(D)), pairs_(std::move(pairs)) {}

  std::vector<std::uint64_t> reduce(const CocycleTable& alpha) const override {
    const std::uint64_t m = std::lcm<std::uint64_t>(A_.order(), alpha.modulus);
    CocycleTable a = to_modulus(alpha, m);
    std::vector<std::uint64_t> c;
    for (auto [i, j] : pairs_) {
      Elem x = D_.basis[i], y = D_.basis[j];
      std::uint64_t p = (a(x, y) + m - a(y, x)) % m;
      std::uint64_t step = m / D_.invariants[i];
      check_invariant(p % step == 0, "pairing value outside the expected subgroup");
      c.push_back(p / step);
    }
    return c;
  }

 private:
  FiniteGroup A_;
  AbelianDecomposition D_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

}  // namespace

CohomologyGroup abelian_multiplier(const FiniteGroup& A) {
  auto D = abelian_decomposition(A);
  const std::size_t k = D.invariants.size();
  const std::uint64_t m = A.order();
  CohomologyGroup M;
  M.group = A;
  M.method = "abelian";
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      pairs.emplace_back(i, j);
      const std::uint64_t ni = D.invariants[i];
      M.orders.push_back(ni);
      M.generators.push_back(cocycle_from(A, static_cast<std::uint32_t>(m), [&](Elem x, Elem y) {
        return static_cast<long long>((m / ni) * ((D.coords[x][i] * D.coords[y][j]) % ni));
      }));
    }
  M.reducer = std::make_shared<PairingReducer>(A, std::move(D), std::move(pairs));
  return M;
}

CohomologyGroup multiplier(const FiniteGroup& G, MultiplierOptions opts) {
  if (G.is_abelian()) return abelian_multiplier(G);
  return schur_multiplier(G, opts);
}

}  // namespace tgr
