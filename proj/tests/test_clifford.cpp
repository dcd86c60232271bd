#include <algorithm>

#include "doctest.h"
#include "tgr/clifford.hpp"

using namespace tgr;

namespace {
using WT = WedderburnType;

StructuredGroup sg(std::string name, std::uint64_t m, std::size_t r, std::vector<std::uint64_t> k,
                   std::vector<IntMatrix> act) {
  return StructuredGroup{std::move(name), m, r, std::move(k), std::move(act)};
}

StructuredGroup A4() { return sg("A4", 2, 2, {3}, {{{0, 1}, {1, 1}}}); }
StructuredGroup A4xC3() { return sg("A4xC3", 2, 2, {3, 3}, {{{0, 1}, {1, 1}}, {{1, 0}, {0, 1}}}); }
StructuredGroup C5sqC3() { return sg("C5^2:C3", 5, 2, {3}, {{{0, 4}, {1, 4}}}); }
StructuredGroup C3sqC2sq() { return sg("C3^2:C2^2", 3, 2, {2, 2}, {{{2, 0}, {0, 1}}, {{1, 0}, {0, 2}}}); }
StructuredGroup C3sqInv() { return sg("C3^2:C2", 3, 2, {2}, {{{2, 0}, {0, 2}}}); }
StructuredGroup C3sqRot() { return sg("C3^2:C4", 3, 2, {4}, {{{0, 2}, {1, 0}}}); }
StructuredGroup F21() { return sg("C7:C3", 7, 1, {3}, {{{2}}}); }

std::vector<WT> sorted(std::vector<WT> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void check_against_table(const StructuredGroup& S) {
  CAPTURE(S.name);
  auto G = S.materialize();
  REQUIRE(G.order() == S.order());
  CHECK(degrees_abelian_normal(S) == ordinary_degrees(G));
  auto P = structured_profile(S);
  WedderburnOptions opts;
  opts.extension_bound = 1u << 13;
  auto T = twist_profile(G, opts);
  CHECK(P.multiplier.orders == T.multiplier.orders);
  CHECK(sorted(P.types) == sorted(T.types));
}
}  // namespace

TEST_CASE("structured groups validate") {
  CHECK_NOTHROW(A4().validate());
  CHECK_THROWS(sg("bad", 3, 1, {3}, {{{1}}}).validate());
  CHECK_THROWS(sg("bad", 5, 1, {2}, {{{2}}}).validate());
  CHECK(C5sqC3().order() == 75);
}

TEST_CASE("orbit census") {
  auto c = orbit_census(A4());
  CHECK(c == OrbitCensus{{1, 1}, {3, 1}});
  auto d = orbit_census(C5sqC3());
  CHECK(d == OrbitCensus{{1, 1}, {3, 8}});
}

TEST_CASE("Clifford counting agrees with the Cayley table") {
  check_against_table(A4());
  check_against_table(F21());
  check_against_table(C3sqInv());
  check_against_table(C3sqRot());
  check_against_table(C3sqC2sq());
  check_against_table(A4xC3());
  check_against_table(C5sqC3());
}

TEST_CASE("tensor-scaling route") {
  CHECK(twisted_degrees_structured(C3sqInv(), 3, 0) == WT::from_degrees({3, 3}));
  CHECK(twisted_degrees_structured(C3sqInv(), 1, 0) == degrees_abelian_normal(C3sqInv()));
  CHECK(twisted_degrees_structured(C3sqC2sq(), 1, 1) == WT::from_degrees({2, 2, 2, 2, 2, 4}));
  CHECK(twisted_degrees_structured(A4xC3(), 2, 0) == WT::from_degrees({2, 2, 2, 2, 2, 2, 2, 2, 2}));
  CHECK_THROWS(twisted_degrees_structured(C3sqC2sq(), 3, 0));
  CHECK_THROWS(twisted_degrees_structured(F21(), 1, 0));
  CHECK_THROWS(twisted_degrees_structured(C3sqRot(), 1, 1));

  auto P = structured_profile(C3sqC2sq());
  auto has = [&](const WT& w) { return std::find(P.types.begin(), P.types.end(), w) != P.types.end(); };
  CHECK(has(twisted_degrees_structured(C3sqC2sq(), 1, 1)));
}

TEST_CASE("square-free invariants") {
  auto S = squarefree_invariants(C3sqC2sq());
  CHECK(S.m == 3);
  CHECK(S.k == 2);
  CHECK(S.kernels.at(3).size() == 1);
  CHECK(S.center_order == 1);
  CHECK(S.derived_order == 9);
  CHECK_THROWS(squarefree_invariants(A4()));
}

TEST_CASE("structured isomorphism") {
  auto a = sg("x", 3, 2, {2, 2}, {{{2, 0}, {0, 1}}, {{1, 0}, {0, 2}}});
  auto b = sg("y", 3, 2, {2, 2}, {{{1, 0}, {0, 2}}, {{2, 0}, {0, 2}}});
  auto iso = structured_isomorphism(a, b);
  CHECK(iso.isomorphic);
  CHECK(iso.base_change.count(3) == 1);
  auto c = sg("z", 3, 2, {2, 2}, {{{2, 0}, {0, 2}}, {{1, 0}, {0, 1}}});
  CHECK_FALSE(structured_isomorphism(a, c).isomorphic);
  CHECK_FALSE(structured_isomorphism(a, C3sqRot()).isomorphic);
}
