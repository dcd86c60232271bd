#pragma once

// Conditions A-D, the twisted group ring equivalence and classification.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgr/clifford.hpp"
#include "tgr/group.hpp"
#include "tgr/wedderburn.hpp"

namespace tgr {

// Everything the equivalence tests look at, from either the Cayley-table or
// the structured path.
struct ProfileData {
  std::string name;
  std::uint64_t order = 0;
  bool abelian = false;
  WedderburnType ordinary;
  std::vector<std::uint64_t> multiplier;
  // Indexed by mixed-radix class coordinates over `multiplier`, first fastest.
  std::vector<WedderburnType> types;
  std::string route;

  std::vector<std::uint64_t> coords(std::size_t idx) const;
  std::size_t index_of(const std::vector<std::uint64_t>& c) const;
  std::uint64_t class_order(std::size_t idx) const;
  WedderburnType cover() const;
  std::vector<WedderburnType> type_multiset() const;
  bool central_type() const;
};

ProfileData profile_data(const FiniteGroup& G, std::string name, const WedderburnOptions& opts = {});
ProfileData profile_data(const StructuredGroup& G);

struct ConditionEvidence {
  char condition = 'A';
  bool holds = false;
  std::string detail;
};

struct ConditionMatrix {
  bool A = false, B = false, C = false, D = false;
  std::vector<ConditionEvidence> evidence;
  // "A B !C !D" style.
  std::string pattern() const;
};

ConditionMatrix conditions(const ProfileData& G, const ProfileData& H);

struct EquivOptions {
  std::uint64_t budget = 1u << 24;
};

struct EquivResult {
  bool equivalent = false;
  // Images of the invariant generators of M(G) in coordinates of M(H).
  std::vector<std::vector<std::uint64_t>> psi;
  std::string reason;
};

EquivResult twisted_equivalent(const ProfileData& G, const ProfileData& H, const EquivOptions& opts = {});

struct PairRecord {
  std::size_t first = 0, second = 0;
  EquivResult result;
};

struct EquivPartition {
  std::vector<std::string> names;
  // class_of[i] is the index of the class containing group i; classes are
  // ordered by their first member.
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<PairRecord> certificates;
};

struct ClassifyOptions {
  EquivOptions equiv;
  unsigned jobs = 1;
};

EquivPartition classify(const std::vector<ProfileData>& groups, const ClassifyOptions& opts = {});

struct AuditRow {
  std::string label;
  std::string first, second;
  ConditionMatrix matrix;
};

struct AuditReport {
  std::vector<AuditRow> rows;
  std::size_t pairs_checked = 0;
  // Pairs where D holds but A or C fails.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

// `fixtures` are (label, G, H); `all` is scanned pairwise for D => A and C.
AuditReport implication_audit(const std::vector<std::tuple<std::string, ProfileData, ProfileData>>& fixtures,
                              const std::vector<ProfileData>& all);

struct CentralTypeSurvey {
  std::vector<std::size_t> members;
  // Pairs of central-type members (indices into the input) satisfying A and B,
  // and those satisfying C.
  std::vector<std::pair<std::size_t, std::size_t>> pairs_ab, pairs_c;
};

CentralTypeSurvey central_type_survey(const std::vector<ProfileData>& groups);

}  // namespace tgr
