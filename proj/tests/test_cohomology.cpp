#include "doctest.h"
#include "tgr/cohomology.hpp"
#include "tgr/presentation.hpp"

using namespace tgr;

namespace {
using Inv = std::vector<std::uint64_t>;
FiniteGroup cyc(std::size_t n) { return make_cyclic(n); }
FiniteGroup Q8() { return from_presentation("ab", {"a^4", "b^2 = a^2", "a^b = a^-1"}, 8).group; }
FiniteGroup D8() { return from_presentation("ab", {"a^4", "b^2", "a^b = a^-1"}, 8).group; }
}  // namespace

TEST_CASE("direct multipliers of small groups") {
  CHECK(schur_multiplier(cyc(4)).orders == Inv{});
  CHECK(schur_multiplier(direct_product(cyc(2), cyc(2))).orders == Inv{2});
  CHECK(schur_multiplier(direct_product(cyc(6), cyc(6))).orders == Inv{6});
  CHECK(schur_multiplier(Q8()).orders == Inv{});
  CHECK(schur_multiplier(D8()).orders == Inv{2});
  CHECK(schur_multiplier(direct_product(Q8(), cyc(2))).orders == Inv{2, 2});
  CHECK(schur_multiplier(direct_product(direct_product(cyc(2), cyc(2)), cyc(2))).orders == Inv{2, 2, 2});
}

namespace {
Action single(std::vector<Elem> img) { return Action{{1}, {std::move(img)}}; }

std::vector<Elem> power_map(std::size_t n, std::size_t k) {
  std::vector<Elem> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Elem>(i * k % n);
  return v;
}

// Automorphism of C_p x C_p (index x + p y) given by a 2x2 matrix acting on columns.
std::vector<Elem> matrix_map(std::size_t p, int a, int b, int c, int d) {
  std::vector<Elem> v(p * p);
  auto md = [&](long long x) { return static_cast<std::size_t>(((x % (long long)p) + p) % p); };
  for (std::size_t x = 0; x < p; ++x)
    for (std::size_t y = 0; y < p; ++y) v[x + p * y] = static_cast<Elem>(md(a * (long long)x + b * (long long)y) + p * md(c * (long long)x + d * (long long)y));
  return v;
}

void check_round_trip(const CohomologyGroup& M) {
  for (const auto& c : M.all_classes()) CHECK(M.reduce(M.representative(c)) == c);
}
}  // namespace

TEST_CASE("coprime split multipliers agree with the direct method") {
  struct Case {
    FiniteGroup N, T;
    Action act;
    Inv expected;
  };
  FiniteGroup C33 = direct_product(cyc(3), cyc(3));
  std::vector<Case> cases = {
      {cyc(3), cyc(2), single(power_map(3, 2)), {}},
      {cyc(3), cyc(4), single(power_map(3, 2)), {}},
      {C33, cyc(2), single(matrix_map(3, -1, 0, 0, -1)), {3}},
      {C33, cyc(4), single(matrix_map(3, 0, -1, 1, 0)), {3}},
      {C33, cyc(2), single(matrix_map(3, 0, 1, 1, 0)), {}},
      {cyc(5), cyc(4), single(power_map(5, 2)), {}},
      {cyc(3), direct_product(cyc(2), cyc(2)), Action{{1, 2}, {power_map(3, 2), power_map(3, 1)}}, {2}},
  };
  for (auto& cs : cases) {
    auto S = split_extension(cs.N, cs.T, cs.act);
    auto M = semidirect_multiplier_coprime(S);
    CHECK(M.orders == cs.expected);
    CHECK(schur_multiplier(S.G).orders == cs.expected);
    check_round_trip(M);
  }
}

TEST_CASE("split extension read off subgroups matches the construction") {
  auto S0 = split_extension(cyc(3), cyc(4), single(power_map(3, 2)));
  Subgroup N = generate_subgroup(S0.G, std::vector<Elem>{S0.n_embed[1]});
  Subgroup T = generate_subgroup(S0.G, std::vector<Elem>{S0.t_embed[1]});
  auto S = split_from_subgroups(S0.G, N, T);
  CHECK(S.act.size() == 4);
  CHECK(semidirect_multiplier_coprime(S).orders == Inv{});
  CHECK_THROWS_AS(split_from_subgroups(S0.G, T, N), Error);
}

TEST_CASE("dual group cohomology") {
  auto D1 = dual_group(split_extension(cyc(3), cyc(2), single(power_map(3, 2))));
  CHECK(h1_complements(D1) == 1);
  CHECK(h2_cyclic_trace(D1) == Inv{});
  auto D2 = dual_group(split_extension(cyc(4), cyc(2), single(power_map(4, 3))));
  CHECK(h1_complements(D2) == 2);
  CHECK(h2_cyclic_trace(D2) == Inv{2});
  auto D3 = dual_group(split_extension(cyc(4), cyc(2), single(power_map(4, 1))));
  CHECK(h1_complements(D3) == 2);
  CHECK(h2_cyclic_trace(D3) == Inv{2});
  auto Dq = dual_group(Q8());
  CHECK(Dq.invariants == Inv{2, 2});
  CHECK(Dq.characters.size() == 4);
}

TEST_CASE("multiplier action on an abelian normal subgroup") {
  auto S = split_extension(direct_product(cyc(3), cyc(3)), cyc(2), single(matrix_map(3, 0, 1, 1, 0)));
  auto MN = multiplier(S.N);
  auto MA = multiplier_action(S, MN);
  REQUIRE(MA.basis_images.size() == 1);
  CHECK(MA.basis_images[0][0] == CohClass{{2}});
  CHECK(MA.fixed_orders.empty());
}
