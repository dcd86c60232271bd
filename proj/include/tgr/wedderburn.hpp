#pragma once

// Artin-Wedderburn data of CG and of twisted group algebras C^alpha G.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgr/cohomology.hpp"
#include "tgr/group.hpp"

namespace tgr {

// Multiset of matrix-block degrees; parts are (degree, multiplicity), ascending degree.
struct WedderburnType {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;

  static WedderburnType from_degrees(std::vector<std::uint64_t> degrees);
  std::uint64_t dimension() const;
  std::uint64_t blocks() const;
  std::uint64_t multiplicity(std::uint64_t degree) const;
  std::uint64_t max_degree() const;
  // "k1 x d1 + k2 x d2 + ..."
  std::string to_string() const;
  auto operator<=>(const WedderburnType&) const = default;
};

struct RegularityReport {
  std::vector<Elem> representatives;
  std::vector<bool> regular;
  std::size_t count = 0;
};

struct WedderburnOptions {
  std::uint64_t seed = 0;
  double tolerance = 1e-6;
  int max_reseeds = 8;
  std::size_t direct_bound = 512;
  // Largest central extension G_alpha built by twisted_degrees.
  std::size_t extension_bound = 2048;
  std::size_t numeric_bound = 128;
};

RegularityReport alpha_regular(const FiniteGroup& G, const CocycleTable& alpha);

WedderburnType ordinary_degrees(const FiniteGroup& G, const WedderburnOptions& opts = {});

// Degrees of characters of G whose central character sends `central` to
// exp(2 pi i * k / d), for each k in 0..d-1. `central` must generate a central
// cyclic subgroup of order d.
std::vector<WedderburnType> degrees_by_central_root(const FiniteGroup& G, Elem central, std::uint64_t d,
                                                    const WedderburnOptions& opts = {});

// Through the central extension G_alpha of the minimized representative.
WedderburnType twisted_degrees(const CohomologyGroup& M, const CohClass& c,
                               const WedderburnOptions& opts = {});
// Eigenspaces of a random central element acting on C^alpha G.
WedderburnType twisted_degrees_numeric(const CocycleTable& alpha, const WedderburnOptions& opts = {});

struct TwistProfile {
  CohomologyGroup multiplier;
  // Indexed like multiplier.all_classes().
  std::vector<WedderburnType> types;
};
TwistProfile twist_profile(const CohomologyGroup& M, const WedderburnOptions& opts = {});
TwistProfile twist_profile(const FiniteGroup& G, const WedderburnOptions& opts = {});

// Union over all classes: the algebra of a Schur cover.
WedderburnType schur_cover_profile(const TwistProfile& P);

struct CentralTypeResult {
  bool central_type = false;
  std::optional<CohClass> witness;
  std::string reason;
};
CentralTypeResult is_central_type(const TwistProfile& P);
CentralTypeResult is_central_type(const FiniteGroup& G, const WedderburnOptions& opts = {});

}  // namespace tgr
