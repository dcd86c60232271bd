#pragma once

// Dense linear algebra over the ring Z/m (m composite in general).
//
// Everything is built on a Smith normal form P*A*Q = D computed with
// unimodular 2x2 row/column combinations, so it works over any principal
// ideal ring Z/m, not just fields.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tgr {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);
// Inverse of a modulo m; a must be a unit.
u64 inv_mod(u64 a, u64 m);
// Reduces a signed value into [0, m).
inline u64 reduce_mod(i64 v, u64 m) {
  i64 r = v % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}
inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols, u64 mod);
  static ModMatrix identity(std::size_t n, u64 mod);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  u64 mod() const { return mod_; }

  u64& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  u64 at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<u64> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const u64> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const u64> values);
  ModMatrix transposed() const;
  std::vector<u64> mul_vec(std::span<const u64> x) const;       // A x
  std::vector<u64> vec_mul(std::span<const u64> x) const;       // x^T A

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  u64 mod_ = 1;
  std::vector<u64> data_;
};

// P * A * Q = D with D diagonal, diag[i] | diag[i+1] | m. Diagonal entries are
// stored as divisors of m; a value equal to m denotes a zero entry. `diag`
// has length cols(); positions past rows() are zero (= m).
struct SmithForm {
  u64 mod = 1;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<u64> diag;
  std::optional<ModMatrix> P;
  std::optional<ModMatrix> Q;
  std::optional<ModMatrix> Qinv;
  // Right-hand sides that received the same row operations as A (P * B).
  std::optional<ModMatrix> transformed_rhs;
};

struct SmithOptions {
  bool want_P = false;
  bool want_Q = false;
  bool want_Qinv = false;
  // Extra columns to carry through the row operations.
  std::optional<ModMatrix> rhs;
};

SmithForm smith_form(ModMatrix A, SmithOptions opts = {});

// Generators of {x : A x = 0}; requires Q.
std::vector<std::vector<u64>> right_kernel(const SmithForm& sf);

// Some x with A x = b, given c = P b (or the transformed rhs column); requires Q.
std::optional<std::vector<u64>> solve_from_transformed(const SmithForm& sf,
                                                       std::span<const u64> pb);
// Some x with A x = b; requires P and Q.
std::optional<std::vector<u64>> solve_right(const SmithForm& sf,
                                            std::span<const u64> b);

// Invariant factors (each >= 2, ascending divisibility chain) of the quotient
// (Z/m)^cols / rowspace(A).
std::vector<u64> quotient_invariants(const SmithForm& sf);

}  // namespace tgr
