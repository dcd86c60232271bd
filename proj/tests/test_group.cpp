#include "doctest.h"
#include "tgr/group.hpp"

using namespace tgr;

TEST_CASE("cyclic groups") {
  auto C1 = make_cyclic(1);
  CHECK(C1.order() == 1);
  auto C4 = make_cyclic(4);
  CHECK(C4.elem_order(2) == 2);
  CHECK(C4.structure().classes.size() == 4);
  CHECK(C4.structure().derived.size() == 1);
  CHECK(abelian_invariants(make_cyclic(6)) == std::vector<std::uint64_t>{6});
}

TEST_CASE("direct products and abelian invariants") {
  auto V = direct_product(make_cyclic(2), make_cyclic(2));
  CHECK(V.structure().exponent == 2);
  CHECK(abelian_invariants(direct_product(make_cyclic(2), make_cyclic(4))) ==
        std::vector<std::uint64_t>{2, 4});
  CHECK(abelian_invariants(direct_product(make_cyclic(6), make_cyclic(4))) ==
        std::vector<std::uint64_t>{2, 12});
  CHECK(abelian_isomorphisms(make_cyclic(2), make_cyclic(2)).size() == 1);
  CHECK(abelian_isomorphisms(V, V).size() == 6);
  CHECK(abelian_isomorphisms(make_cyclic(4), V).empty());
  CHECK(abelian_isomorphisms(make_cyclic(8), make_cyclic(8)).size() == 4);
}

#include "tgr/presentation.hpp"

TEST_CASE("presentations compile to verified tables") {
  auto D8 = from_presentation("ab", {"a^4", "b^2", "a^b = a^-1"}, 8).group;
  CHECK(D8.structure().classes.size() == 5);
  CHECK(D8.structure().center.size() == 2);
  auto Q8 = from_presentation("ab", {"a^4", "b^2 = a^2", "a^b = a^-1"}, 8).group;
  int involutions = 0;
  for (Elem g = 1; g < 8; ++g) involutions += Q8.elem_order(g) == 2;
  CHECK(involutions == 1);
  CHECK_FALSE(is_isomorphic(D8, Q8));
  auto V = from_presentation("ab", {"a^2", "b^2", "[a,b]"}, 4).group;
  CHECK(is_isomorphic(V, direct_product(make_cyclic(2), make_cyclic(2))));
  CHECK_THROWS_AS(from_presentation("ab", {"a^4", "b^2"}, 8), Error);
  CHECK_THROWS_AS(parse_word("ab", "a^c"), Error);
}

TEST_CASE("semidirect, central extension and quotient") {
  auto C4 = make_cyclic(4), C2 = make_cyclic(2);
  Action inv{{1}, {{0, 3, 2, 1}}};
  auto D8 = semidirect_product(C4, C2, inv);
  CHECK(D8.structure().center.size() == 2);
  CHECK(is_isomorphic(D8, from_presentation("ab", {"a^4", "b^2", "a^b = a^-1"}, 8).group));
  Action bad{{1}, {{0, 2, 1, 3}}};
  CHECK_THROWS_AS(semidirect_product(C4, C2, bad), Error);

  auto V = direct_product(C2, C2);
  auto alpha = CocycleTable::zero(V, 2);
  // alpha(x^i y^j, x^k y^l) = j k
  for (Elem g = 0; g < 4; ++g)
    for (Elem h = 0; h < 4; ++h) alpha.at(g, h) = ((g >> 1) & 1) * (h & 1);
  auto ext = central_extension(alpha);
  CHECK(ext.group.order() == 8);
  CHECK_FALSE(ext.group.is_abelian());
  auto [Q, proj] = quotient(ext.group, ext.central);
  CHECK(is_isomorphic(Q, V));
  CHECK(proj.is_homomorphism());
  auto bad_alpha = alpha;
  bad_alpha.at(1, 1) = 1;
  bad_alpha.at(3, 3) = 1;
  bad_alpha.at(1, 2) = 1;
  CHECK_THROWS_AS(central_extension(bad_alpha), Error);
  CHECK_THROWS_AS(quotient(D8, Subgroup{{0, 4}}), Error);
}
