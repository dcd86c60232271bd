#pragma once

// Named groups and their expected facts.
//
// Ids:
//   C<n>, C<a>xC<b>x...           abelian groups
//   order16-i .. order16-xiv      groups of order 16
//   p4-i@p .. p4-xv@p             groups of order p^4, p in {3, 5}
//   ex3.2-G, ex3.2-H, ex3.3-S/G/H, ex3.4-S/G/H/K, ex3.5-S/G/H
//   ex4.5-G1 .. ex4.5-G21         order 3249, structured
//   ex5.7-G, ex5.7-H              order 44100, structured

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgr/clifford.hpp"
#include "tgr/equivalence.hpp"
#include "tgr/group.hpp"
#include "tgr/presentation.hpp"
#include "tgr/wedderburn.hpp"

namespace tgr {

struct CatalogEntry {
  std::string id;
  std::string description;
  std::size_t order = 0;
  // Presentation (empty for abelian and structured entries).
  std::string generators;
  std::vector<std::string> relations;
  CommutatorConvention convention = CommutatorConvention::InverseFirst;
  // Invariant factors when the entry is a direct product of cyclic groups.
  std::vector<std::uint64_t> abelian;
  std::optional<StructuredGroup> structured;
  // Quotient of another entry: words in its generators spanning the kernel.
  std::string quotient_of;
  std::vector<std::string> kernel;
};

std::vector<std::string> catalog_ids();
// Ids of a family: "order16", "p4@3", "p4@5", "ex4.5", "ex5.7", "section3".
std::vector<std::string> catalog_family(const std::string& family);
bool is_catalog_id(const std::string& id);
CatalogEntry catalog_entry(const std::string& id);

// Table of the group; relations are checked on the table.
FiniteGroup paper_group(const std::string& id, std::size_t bound = 4096);
// Table together with generator elements (presented entries only).
PresentedGroup presented_group(const std::string& id);
StructuredGroup structured_group(const std::string& id);
// Structured path when available, otherwise the Cayley table.
ProfileData catalog_profile(const std::string& id, const WedderburnOptions& opts = {});

struct ExpectedFacts {
  std::string id;
  std::optional<std::vector<std::uint64_t>> multiplier;
  std::optional<WedderburnType> ordinary;
  // Types that must occur among the twisted algebras.
  std::vector<WedderburnType> twisted_contains;
  std::optional<bool> central_type;
  std::optional<std::uint64_t> center_order;
};

struct ExpectedPartition {
  std::string id;
  std::vector<std::string> members;
  // Non-singleton classes; everything else is a singleton.
  std::vector<std::vector<std::string>> classes;
};

struct ExpectedPattern {
  std::string label;
  std::string first, second;
  bool A, B, C, D;
};

// Facts for a group id, or a partition id ("omega16-partition",
// "omega81-partition", "ex4.5-partition").
ExpectedFacts expected(const std::string& id);
ExpectedPartition expected_partition(const std::string& id);
std::vector<ExpectedPattern> expected_patterns();

}  // namespace tgr
