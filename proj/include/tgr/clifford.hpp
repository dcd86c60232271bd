#pragma once

// Degree counting for N : K with N = (Z/m)^r abelian, K abelian of coprime
// order, without materializing the group.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tgr/group.hpp"
#include "tgr/wedderburn.hpp"

namespace tgr {

using IntMatrix = std::vector<std::vector<std::uint64_t>>;

struct StructuredGroup {
  std::string name;
  std::uint64_t m = 1;
  std::size_t rank = 0;
  // K = Z/k[0] x Z/k[1] x ...
  std::vector<std::uint64_t> k;
  // action[i] is the matrix of the i-th generator of K on N; columns are
  // images of the standard basis.
  std::vector<IntMatrix> action;

  std::uint64_t n_order() const;
  std::uint64_t k_order() const;
  std::uint64_t order() const { return n_order() * k_order(); }
  // Checks shape, coprimality, invertibility, commutation and generator orders.
  void validate() const;
  // Exponent vector of the K element with mixed-radix index `idx` (first factor fastest).
  std::vector<std::uint64_t> k_element(std::size_t idx) const;
  IntMatrix k_matrix(const std::vector<std::uint64_t>& exps) const;
  // N : K as a Cayley table; element (n, t) is n + |N| t with n mixed radix over (Z/m)^r.
  FiniteGroup materialize(std::size_t bound = 4096) const;
};

// Twist data: alternating commutator form on N (r x r over Z/m, invariant
// under K) and an alternating pairing on K (beta[i][j] in Z/gcd(k_i, k_j), i < j).
struct StructuredClass {
  IntMatrix omega;
  IntMatrix beta;
};

// Orbit length -> number of K-orbits on N*.
using OrbitCensus = std::map<std::uint64_t, std::uint64_t>;
OrbitCensus orbit_census(const StructuredGroup& G);

WedderburnType degrees_abelian_normal(const StructuredGroup& G);
// Clifford rule for C^alpha G with alpha = (omega, beta).
WedderburnType structured_twisted_degrees(const StructuredGroup& G, const StructuredClass& c);

struct StructuredMultiplier {
  std::vector<std::uint64_t> orders;
  // classes[i] has coordinates all_coordinates()[i] in the invariant basis.
  std::vector<StructuredClass> classes;
  std::vector<std::vector<std::uint64_t>> coords;
  std::size_t index_of(const std::vector<std::uint64_t>& c) const;
};
// M(G) = M(N)^K x M(K).
StructuredMultiplier structured_multiplier(const StructuredGroup& G, std::size_t bound = 1u << 14);

struct StructuredProfile {
  StructuredMultiplier multiplier;
  // Indexed by mixed-radix class index over multiplier.orders.
  std::vector<WedderburnType> types;
};
StructuredProfile structured_profile(const StructuredGroup& G);

// Tensor-scaling route for rank 2: class with N-part of order d (form (m/d) J)
// and K-twist flag. Requires K = C_p x C_p when the twist is nontrivial.
WedderburnType twisted_degrees_structured(const StructuredGroup& G, std::uint64_t d, std::uint64_t twist);

struct SquarefreeInvariants {
  std::uint64_t m = 1, k = 1;
  // Prime of m -> elements of K (exponent vectors) acting trivially on that Sylow subgroup.
  std::map<std::uint64_t, std::vector<std::vector<std::uint64_t>>> kernels;
  std::uint64_t center_order = 1;
  std::uint64_t derived_order = 1;
};
SquarefreeInvariants squarefree_invariants(const StructuredGroup& G);

struct StructuredIso {
  bool isomorphic = false;
  // Images of the K generators (exponent vectors) and one base change per prime of m.
  std::vector<std::vector<std::uint64_t>> k_images;
  std::map<std::uint64_t, IntMatrix> base_change;
  std::string reason;
};
StructuredIso structured_isomorphism(const StructuredGroup& G, const StructuredGroup& H,
                                     std::size_t budget = 1u << 22);

}  // namespace tgr
