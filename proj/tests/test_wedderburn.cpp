#include "doctest.h"
#include "tgr/presentation.hpp"
#include "tgr/wedderburn.hpp"

using namespace tgr;

namespace {
using WT = WedderburnType;
FiniteGroup Q8() { return from_presentation("ab", {"a^4", "b^2 = a^2", "a^b = a^-1"}, 8).group; }
FiniteGroup D8() { return from_presentation("ab", {"a^4", "b^2", "a^b = a^-1"}, 8).group; }
FiniteGroup S3() { return from_presentation("ab", {"a^3", "b^2", "a^b = a^-1"}, 6).group; }
}  // namespace

TEST_CASE("type formatting") {
  auto w = WT::from_degrees({2, 1, 1, 2, 1});
  CHECK(w.to_string() == "3 x 1 + 2 x 2");
  CHECK(w.dimension() == 11);
  CHECK(w.blocks() == 5);
}

TEST_CASE("ordinary degrees") {
  CHECK(ordinary_degrees(make_cyclic(4)).to_string() == "4 x 1");
  CHECK(ordinary_degrees(S3()).to_string() == "2 x 1 + 1 x 2");
  CHECK(ordinary_degrees(D8()).to_string() == "4 x 1 + 1 x 2");
  CHECK(ordinary_degrees(direct_product(Q8(), make_cyclic(2))).to_string() == "8 x 1 + 2 x 2");
  auto A4 = from_presentation("ab", {"a^2", "b^3", "(ab)^3"}, 12).group;
  CHECK(ordinary_degrees(A4).to_string() == "3 x 1 + 1 x 3");
  auto S4 = from_presentation("ab", {"a^2", "b^3", "(ab)^4"}, 24).group;
  CHECK(ordinary_degrees(S4).to_string() == "2 x 1 + 1 x 2 + 2 x 3");
}

TEST_CASE("twisted degrees on the Klein four group") {
  auto V = direct_product(make_cyclic(2), make_cyclic(2));
  auto M = multiplier(V);
  REQUIRE(M.orders.size() == 1);
  CohClass c{{1}};
  CHECK(twisted_degrees(M, c).to_string() == "1 x 2");
  CHECK(twisted_degrees_numeric(M.representative(c)).to_string() == "1 x 2");
  CHECK(twisted_degrees_numeric(M.representative(M.identity())).to_string() == "4 x 1");
  auto reg = alpha_regular(V, M.representative(c));
  CHECK(reg.count == 1);
  CHECK(is_central_type(V).central_type);
  CHECK_FALSE(is_central_type(D8()).central_type);
}

TEST_CASE("twisted routes agree and extensions decompose") {
  std::vector<FiniteGroup> groups = {D8(), direct_product(Q8(), make_cyclic(2)),
                                     direct_product(make_cyclic(6), make_cyclic(6)),
                                     direct_product(direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2))};
  for (const auto& G : groups) {
    auto P = twist_profile(G);
    const auto& M = P.multiplier;
    auto classes = M.all_classes();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      auto alpha = M.representative(classes[i]);
      CHECK(P.types[i] == twisted_degrees_numeric(alpha));
      CHECK(alpha_regular(G, alpha).count == P.types[i].blocks());
      const auto d = M.class_order(classes[i]);
      if (d > 1) {
        auto E = central_extension(M.minimized(classes[i]));
        std::vector<std::uint64_t> all;
        for (std::uint64_t k = 0; k < d; ++k)
          for (auto [deg, mult] : P.types[M.index_of(M.scale(classes[i], k))].parts) all.insert(all.end(), mult, deg);
        CHECK(ordinary_degrees(E.group) == WT::from_degrees(all));
      }
    }
    CHECK(schur_cover_profile(P).dimension() == M.size() * G.order());
  }
}
