#pragma once

// Finite groups as Cayley tables over element indices 0..n-1 (0 = identity).

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tgr/error.hpp"

namespace tgr {

using Elem = std::uint32_t;

// Sorted member list of a subgroup. The parent group is implied by context.
struct Subgroup {
  std::vector<Elem> members;

  std::size_t size() const { return members.size(); }
  bool contains(Elem g) const;
  bool operator==(const Subgroup&) const = default;
};

struct GroupStructure {
  // Conjugacy classes, each sorted, ordered by smallest member.
  std::vector<std::vector<Elem>> classes;
  std::vector<std::uint32_t> class_of;
  Subgroup center;
  Subgroup derived;
  // Centralizer of classes[i].front().
  std::vector<Subgroup> centralizers;
  std::vector<std::uint32_t> element_order;
  std::uint32_t exponent = 1;
};

class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup();

  // Validates identity/inverse laws, Latin-square shape and associativity.
  static FiniteGroup from_table(std::size_t n, std::vector<Elem> table,
                                std::vector<std::string> labels = {},
                                std::string name = {});

  std::size_t order() const;
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  std::span<const Elem> table() const { return {table_, n_ * n_}; }

  std::string label(Elem g) const;
  bool has_labels() const;
  const std::string& name() const;
  FiniteGroup renamed(std::string name) const;

  const GroupStructure& structure() const;
  bool is_abelian() const;
  std::uint32_t elem_order(Elem g) const { return structure().element_order[g]; }

  Elem pow(Elem g, std::int64_t k) const;
  // x^-1 y^-1 x y
  Elem commutator(Elem x, Elem y) const;
  // y^-1 x y
  Elem conj(Elem x, Elem y) const;

  // Identity of the shared representation (cheap equality of handles).
  const void* handle() const { return impl_.get(); }

  struct Impl;

 private:
  explicit FiniteGroup(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
  std::size_t n_ = 1;
  const Elem* table_ = nullptr;
  const Elem* inverse_ = nullptr;
};

struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Elem> images;

  Elem operator()(Elem g) const { return images[g]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
};

// Subgroup algebra.
Subgroup generate_subgroup(const FiniteGroup& G, std::span<const Elem> gens);
Subgroup whole_group(const FiniteGroup& G);
bool is_normal(const FiniteGroup& G, const Subgroup& N);
// The subgroup as a group in its own right plus the embedding into G
// (embedding[i] = element of G that is element i of the new group).
std::pair<FiniteGroup, std::vector<Elem>> subgroup_as_group(const FiniteGroup& G,
                                                            const Subgroup& H);
// Short generating set, greedy by descending element order then index.
std::vector<Elem> generating_set(const FiniteGroup& G);
std::vector<Elem> generating_set(const FiniteGroup& G, const Subgroup& H);

// Constructions.
FiniteGroup make_cyclic(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H);
// Element (g, h) of G x H has index g + |G| * h.
inline Elem product_index(const FiniteGroup& G, Elem g, Elem h) {
  return g + static_cast<Elem>(G.order()) * h;
}

// Automorphisms of N assigned to generators of T. The action is closed over
// T and verified to be a homomorphism T -> Aut(N).
struct Action {
  std::vector<Elem> t_generators;
  std::vector<std::vector<Elem>> automorphisms;
};
// Full table act[t][n] of the closed action; throws ActionNotHomomorphism.
std::vector<std::vector<Elem>> close_action(const FiniteGroup& N, const FiniteGroup& T,
                                            const Action& act);
// Element (n, t) has index n + |N| * t; (n1,t1)(n2,t2) = (n1 * t1(n2), t1 t2).
FiniteGroup semidirect_product(const FiniteGroup& N, const FiniteGroup& T, const Action& act);

// Normalized 2-cocycle with values in Z/modulus, stored row-major.
struct CocycleTable {
  FiniteGroup group;
  std::uint32_t modulus = 1;
  std::vector<std::uint32_t> values;

  static CocycleTable zero(const FiniteGroup& G, std::uint32_t modulus);
  std::uint32_t operator()(Elem g, Elem h) const {
    return values[static_cast<std::size_t>(g) * group.order() + h];
  }
  std::uint32_t& at(Elem g, Elem h) { return values[static_cast<std::size_t>(g) * group.order() + h]; }
  bool is_normalized() const;
  bool is_cocycle() const;
};

struct CentralExtension {
  FiniteGroup group;
  // {(a, 1)} ~ C_d, with element (a, g) at index a + d * g.
  Subgroup central;
  // Index of (1, 1).
  Elem z0 = 0;
};
CentralExtension central_extension(const CocycleTable& alpha);

std::pair<FiniteGroup, GroupHom> quotient(const FiniteGroup& G, const Subgroup& N);

// Abelian structure.
struct AbelianDecomposition {
  std::vector<std::uint64_t> invariants;  // d_1 | d_2 | ... , each >= 2
  std::vector<Elem> basis;                 // basis[i] has order invariants[i]
  // coords[g][i] in Z/d_i with g = prod basis[i]^coords[g][i]
  std::vector<std::vector<std::uint32_t>> coords;
};
AbelianDecomposition abelian_decomposition(const FiniteGroup& A);
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& A);
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& G, const Subgroup& H);

// Isomorphisms between finite abelian groups given by invariant factors.
// Each isomorphism is reported as the images of the basis vectors e_i of the
// source, as coordinate vectors in the target. Return false from `visit` to stop.
void for_each_abelian_iso(std::span<const std::uint64_t> src, std::span<const std::uint64_t> dst,
                          const std::function<bool(const std::vector<std::vector<std::uint32_t>>&)>& visit);
std::vector<GroupHom> abelian_isomorphisms(const FiniteGroup& A, const FiniteGroup& B);

struct IsoOptions {
  std::uint64_t node_budget = 10'000'000;
};
std::optional<GroupHom> find_isomorphism(const FiniteGroup& G, const FiniteGroup& H,
                                         IsoOptions opts = {});
bool is_isomorphic(const FiniteGroup& G, const FiniteGroup& H, IsoOptions opts = {});

}  // namespace tgr
