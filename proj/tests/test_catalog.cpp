#include <algorithm>
#include <set>

#include "doctest.h"
#include "tgr/catalog.hpp"
#include "tgr/error.hpp"

using namespace tgr;

TEST_CASE("catalog ids") {
  CHECK(catalog_family("order16").size() == 14);
  CHECK(catalog_family("p4@3").size() == 15);
  CHECK(catalog_family("p4@5").size() == 15);
  CHECK(catalog_family("ex4.5").size() == 21);
  CHECK(catalog_entry("C4xC2").order == 8);
  CHECK(paper_group("C6xC6").order() == 36);
  CHECK_FALSE(is_catalog_id("Cx"));
  CHECK_FALSE(is_catalog_id("C4x"));
  CHECK_THROWS_AS(catalog_entry("order16-xv"), Error);
  CHECK_THROWS_AS(expected("nonsense"), Error);
  CHECK_THROWS_AS(catalog_family("order17"), Error);
  try {
    catalog_entry("p4-xvi@3");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownId);
  }
}

TEST_CASE("presented groups build with their relations") {
  for (const auto& fam : {"order16", "p4@3", "section3"})
    for (const auto& id : catalog_family(fam)) {
      CAPTURE(id);
      CHECK(paper_group(id).order() == catalog_entry(id).order);
    }
  CHECK_THROWS(paper_group("ex5.7-G"));
}

TEST_CASE("small catalog families are pairwise non-isomorphic") {
  for (const auto& fam : {"order16", "p4@3"}) {
    std::vector<FiniteGroup> gs;
    for (const auto& id : catalog_family(fam)) gs.push_back(paper_group(id));
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        CAPTURE(i);
        CAPTURE(j);
        CHECK_FALSE(is_isomorphic(gs[i], gs[j]));
      }
  }
}

TEST_CASE("order16-vi satisfies its defining relation") {
  auto P = presented_group("order16-vi");
  const auto& G = P.group;
  Elem a = P.generators[0], b = P.generators[1];
  Elem a4 = G.pow(a, 4);
  CHECK(G.mul(G.mul(a, b), G.inv(a)) == G.mul(b, a4));
}

TEST_CASE("section 3 quotients") {
  for (const auto& id : catalog_family("section3")) {
    auto e = catalog_entry(id);
    if (e.quotient_of.empty() || e.generators.empty()) continue;
    CAPTURE(id);
    auto parent = catalog_entry(e.quotient_of);
    auto S = presented_group(e.quotient_of);
    std::vector<Elem> gens;
    for (const auto& w : e.kernel)
      gens.push_back(evaluate_word(S.group, S.generators, parse_word(parent.generators, w, parent.convention)));
    auto N = generate_subgroup(S.group, gens);
    auto Q = quotient(S.group, N).first;
    CHECK(is_isomorphic(Q, paper_group(id)));
  }
  CHECK(paper_group("ex3.4-K").order() == 128);
  for (const char* id : {"ex3.3-S", "ex3.4-S", "ex3.5-S"}) {
    CAPTURE(id);
    CHECK(paper_group(id).structure().center.size() == *expected(id).center_order);
  }
}

TEST_CASE("order 3249 family matches its fixtures") {
  for (const auto& id : catalog_family("ex4.5")) {
    CAPTURE(id);
    auto S = structured_group(id);
    auto f = expected(id);
    CHECK(structured_multiplier(S).orders == *f.multiplier);
    CHECK(degrees_abelian_normal(S) == *f.ordinary);
  }
}

TEST_CASE("order 3249 family does not depend on the choice of zeta") {
  // zeta -> zeta^2 is another generator of the order-9 subgroup of F_19^*.
  for (const auto& id : catalog_family("ex4.5")) {
    auto S = structured_group(id);
    if (S.m != 19) continue;
    CAPTURE(id);
    auto T = S;
    for (auto& A : T.action)
      for (std::size_t i = 0; i < 2; ++i) A[i][i] = A[i][i] * A[i][i] % 19;
    CHECK(structured_isomorphism(S, T).isomorphic);
  }
}
