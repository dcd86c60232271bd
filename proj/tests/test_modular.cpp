#include <random>
#include <set>

#include "doctest.h"
#include "tgr/modular.hpp"

using namespace tgr;

namespace {

ModMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, u64 m) {
  ModMatrix A(r, c, m);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) A.at(i, j) = rng() % m;
  return A;
}

ModMatrix mul(const ModMatrix& A, const ModMatrix& B) {
  ModMatrix C(A.rows(), B.cols(), A.mod());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k)
      for (std::size_t j = 0; j < B.cols(); ++j)
        C.at(i, j) = (C.at(i, j) + mul_mod(A.at(i, k), B.at(k, j), A.mod())) % A.mod();
  return C;
}

// Enumerates all x in (Z/m)^c.
template <class F>
void for_all_vectors(std::size_t c, u64 m, F f) {
  std::vector<u64> x(c, 0);
  for (;;) {
    f(x);
    std::size_t i = 0;
    while (i < c && ++x[i] == m) x[i++] = 0;
    if (i == c) return;
  }
}

}  // namespace

TEST_CASE("smith form decomposes random matrices over composite moduli") {
  std::mt19937_64 rng(7);
  for (u64 m : {2ull, 4ull, 6ull, 12ull, 36ull, 64ull, 210ull}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      ModMatrix A = random_matrix(rng, r, c, m);
      if (trial % 3 == 0)
        for (std::size_t j = 0; j < c; ++j) A.at(0, j) = (A.at(0, j) * (m / 2)) % m;
      SmithOptions o;
      o.want_P = o.want_Q = o.want_Qinv = true;
      SmithForm sf = smith_form(A, o);
      ModMatrix D = mul(mul(*sf.P, A), *sf.Q);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
          u64 want = (i == j) ? sf.diag[j] % m : 0;
          CHECK(D.at(i, j) == want);
        }
      for (std::size_t i = 0; i + 1 < c; ++i) CHECK(sf.diag[i + 1] % sf.diag[i] == 0);
      CHECK(m % sf.diag.back() == 0);
      ModMatrix I = mul(*sf.Q, *sf.Qinv);
      for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) CHECK(I.at(i, j) == (i == j ? 1u : 0u));
    }
  }
}

TEST_CASE("kernel and solutions agree with brute-force enumeration") {
  std::mt19937_64 rng(11);
  for (u64 m : {4ull, 6ull, 8ull, 12ull}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
      ModMatrix A = random_matrix(rng, r, c, m);
      SmithOptions o;
      o.want_P = o.want_Q = true;
      SmithForm sf = smith_form(A, o);

      std::set<std::vector<u64>> brute, image;
      for_all_vectors(c, m, [&](const std::vector<u64>& x) {
        auto y = A.mul_vec(x);
        image.insert(y);
        if (std::all_of(y.begin(), y.end(), [](u64 v) { return v == 0; })) brute.insert(x);
      });
      u64 predicted = 1;
      for (u64 d : sf.diag) predicted *= d;
      CHECK(brute.size() == predicted);

      auto gens = right_kernel(sf);
      std::set<std::vector<u64>> span{std::vector<u64>(c, 0)};
      for (const auto& g : gens) {
        CHECK(brute.count(g) == 1);
        for (bool grew = true; grew;) {
          grew = false;
          for (auto v : std::vector<std::vector<u64>>(span.begin(), span.end())) {
            for (std::size_t i = 0; i < c; ++i) v[i] = (v[i] + g[i]) % m;
            grew |= span.insert(v).second;
          }
        }
      }
      CHECK(span == brute);

      for_all_vectors(r, m, [&](const std::vector<u64>& b) {
        auto x = solve_right(sf, b);
        CHECK(x.has_value() == (image.count(b) == 1));
        if (x) CHECK(A.mul_vec(*x) == b);
      });
    }
  }
}

TEST_CASE("quotient invariants of small presentations") {
  ModMatrix A(1, 2, 12);
  A.at(0, 0) = 2;
  A.at(0, 1) = 4;
  auto inv = quotient_invariants(smith_form(A));
  CHECK(inv == std::vector<u64>{2, 12});
  CHECK(inv_mod(5, 12) == 5);
}
