#pragma once

// Schur multipliers M(G) = H^2(G, C*) with explicit cocycle representatives.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tgr/group.hpp"

namespace tgr {

// Coordinates of a class in the generator presentation of its multiplier.
struct CohClass {
  std::vector<std::uint64_t> coeffs;
  auto operator<=>(const CohClass&) const = default;
};

// Maps a normalized cocycle to class coordinates.
class ClassReducer {
 public:
  virtual ~ClassReducer() = default;
  virtual std::vector<std::uint64_t> reduce(const CocycleTable& alpha) const = 0;
};

struct CohomologyGroup {
  FiniteGroup group;
  std::vector<std::uint64_t> orders;      // invariant factors d_1 | d_2 | ...
  std::vector<CocycleTable> generators;   // modulus |G|, values multiples of |G|/d_i
  std::shared_ptr<const ClassReducer> reducer;
  std::string method;

  std::uint64_t size() const;
  std::uint64_t exponent() const;
  CohClass reduce(const CocycleTable& alpha) const;
  CohClass identity() const { return CohClass{std::vector<std::uint64_t>(orders.size(), 0)}; }
  // All classes in mixed-radix order of the coordinates (first coordinate fastest).
  std::vector<CohClass> all_classes() const;
  std::size_t index_of(const CohClass& c) const;
  CohClass add(const CohClass& a, const CohClass& b) const;
  CohClass scale(const CohClass& a, std::uint64_t k) const;
  std::uint64_t class_order(const CohClass& c) const;
  // Sum of generator tables, modulus |G|.
  CocycleTable representative(const CohClass& c) const;
  // Cohomologous cocycle with values in Z/order.
  CocycleTable minimized(const CohClass& c) const;
};

struct MultiplierOptions {
  std::size_t direct_bound = 96;
  std::uint64_t seed = 0;
};

// Direct linear algebra over Z/|G|.
CohomologyGroup schur_multiplier(const FiniteGroup& G, MultiplierOptions opts = {});
// Bilinear pairing cocycles on an invariant-factor basis.
CohomologyGroup abelian_multiplier(const FiniteGroup& A);
// Abelian fast path, else the direct method.
CohomologyGroup multiplier(const FiniteGroup& G, MultiplierOptions opts = {});

// P[i][j] = alpha(x_i, x_j) - alpha(x_j, x_i) mod alpha.modulus on the basis
// of abelian_decomposition(A).
std::vector<std::vector<std::uint64_t>> abelian_pairing(const FiniteGroup& A,
                                                        const CocycleTable& alpha);

// Pulls a cocycle back along a homomorphism f: H -> alpha.group.
CocycleTable pull_back(const CocycleTable& alpha, const FiniteGroup& H, std::span<const Elem> f);
// Values multiplied by `scale`, reduced modulo `modulus`.
CocycleTable rescale(const CocycleTable& alpha, std::uint64_t scale, std::uint32_t modulus);
// The same cocycle over Z/m; alpha.modulus must divide m.
CocycleTable to_modulus(const CocycleTable& alpha, std::uint64_t m);

// Cocycle defined by a function of indices; convenience for fixtures.
template <class F>
CocycleTable cocycle_from(const FiniteGroup& G, std::uint32_t modulus, F f) {
  CocycleTable c = CocycleTable::zero(G, modulus);
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < G.order(); ++h) {
      long long v = f(g, h) % static_cast<long long>(modulus);
      c.at(g, h) = static_cast<std::uint32_t>(v < 0 ? v + modulus : v);
    }
  return c;
}

struct ClassOps {
  std::uint64_t order = 1;
  CocycleTable representative;
  CocycleTable minimized;
};
ClassOps class_ops(const CohomologyGroup& M, const CohClass& c);

// Split extension N : T where T acts through `act` (closed table over T,
// act[t] an automorphism of N) and the extension is G itself with the given
// embeddings of N and T.
struct SplitExtension {
  FiniteGroup G;
  FiniteGroup N;
  FiniteGroup T;
  std::vector<Elem> n_embed;  // index in N -> index in G
  std::vector<Elem> t_embed;  // index in T -> index in G
  std::vector<std::vector<Elem>> act;  // act[t][n] = t n t^-1 (in N indices)
};
// Builds N : T from a closed action, with the standard embeddings.
SplitExtension split_extension(const FiniteGroup& N, const FiniteGroup& T, const Action& act);
// Reads off N and T as subgroups of G (N normal, N T = G, N and T meeting trivially).
SplitExtension split_from_subgroups(const FiniteGroup& G, const Subgroup& N, const Subgroup& T);

struct MultiplierAction {
  // Per generator of T: images of the basis classes of M(N).
  std::vector<std::vector<CohClass>> basis_images;
  // Invariant factors of M(N)^T and generating classes in M(N) coordinates.
  std::vector<std::uint64_t> fixed_orders;
  std::vector<CohClass> fixed_generators;
};
MultiplierAction multiplier_action(const SplitExtension& S, const CohomologyGroup& MN);

// Coprime split extension: M(G) = M(N)^T x M(T), with lifted representatives.
CohomologyGroup semidirect_multiplier_coprime(const SplitExtension& S, MultiplierOptions opts = {});

// Linear characters of N (for non-abelian N those of N/N'), values in Z/exponent.
struct DualGroup {
  FiniteGroup base;
  std::uint64_t exponent = 1;
  std::vector<std::uint64_t> invariants;              // of N/N'
  std::vector<std::vector<std::uint32_t>> characters; // characters[k][n]
  // With an action: perm[t][k] = index of chi_k^t.
  FiniteGroup acting;
  std::vector<std::vector<std::uint32_t>> perm;

  std::size_t index_of(const std::vector<std::uint32_t>& values) const;
  // The characters as an abelian group table (pointwise addition).
  FiniteGroup as_group() const;
};
DualGroup dual_group(const FiniteGroup& N);
DualGroup dual_group(const SplitExtension& S);

// |H^1(T, N*)| as the number of conjugacy classes of complements of N* in N* : T.
std::uint64_t h1_complements(const DualGroup& D, std::size_t size_bound = 1u << 16);
// H^2(T, N*) for cyclic T as (N*)^T / Im(Tr).
std::vector<std::uint64_t> h2_cyclic_trace(const DualGroup& D);

}  // namespace tgr
