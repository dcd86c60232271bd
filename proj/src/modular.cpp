#include "tgr/modular.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace tgr {

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }
u64 lcm_u64(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

namespace {

struct Egcd {
  i64 g, s, t;  // s*a + t*b = g
};

Egcd egcd(i64 a, i64 b) {
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

}  // namespace

u64 inv_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  auto e = egcd(static_cast<i64>(a % m), static_cast<i64>(m));
  if (e.g != 1) throw std::invalid_argument("inv_mod: not a unit");
  return reduce_mod(e.s, m);
}

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, u64 mod)
    : rows_(rows), cols_(cols), mod_(mod), data_(rows * cols, 0) {}

ModMatrix ModMatrix::identity(std::size_t n, u64 mod) {
  ModMatrix I(n, n, mod);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1 % mod;
  return I;
}

void ModMatrix::append_row(std::span<const u64> values) {
  assert(values.size() == cols_);
  for (u64 v : values) data_.push_back(v % mod_);
  ++rows_;
}

ModMatrix ModMatrix::transposed() const {
  ModMatrix T(cols_, rows_, mod_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) T.at(c, r) = at(r, c);
  return T;
}

std::vector<u64> ModMatrix::mul_vec(std::span<const u64> x) const {
  std::vector<u64> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    unsigned __int128 acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += static_cast<unsigned __int128>(at(r, c)) * x[c];
    y[r] = static_cast<u64>(acc % mod_);
  }
  return y;
}

std::vector<u64> ModMatrix::vec_mul(std::span<const u64> x) const {
  std::vector<u64> y(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) y[c] = (y[c] + mul_mod(x[r], at(r, c), mod_)) % mod_;
  }
  return y;
}

namespace {

// Working state of the Smith elimination. Row operations are mirrored onto P
// and the rhs block; column operations onto Q and (inversely) onto Qinv.
class SmithWorker {
 public:
  SmithWorker(ModMatrix A, SmithOptions& opts) : A_(std::move(A)), m_(A_.mod()) {
    if (opts.want_P) P_ = ModMatrix::identity(A_.rows(), m_);
    if (opts.want_Q) Q_ = ModMatrix::identity(A_.cols(), m_);
    if (opts.want_Qinv) Qinv_ = ModMatrix::identity(A_.cols(), m_);
    if (opts.rhs) rhs_ = std::move(*opts.rhs);
  }

  SmithForm run() {
    const std::size_t R = A_.rows(), C = A_.cols();
    const std::size_t steps = std::min(R, C);
    SmithForm out;
    out.mod = m_;
    out.rows = R;
    out.cols = C;
    out.diag.assign(C, m_);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        clear_column(t);
        clear_row(t);
        if (!column_clear(t)) continue;
        if (!fix_divisibility(t)) break;
      }
      out.diag[t] = A_.at(t, t) == 0 ? m_ : A_.at(t, t);
    }
    if (m_ == 1) std::fill(out.diag.begin(), out.diag.end(), 1);
    out.P = std::move(P_);
    out.Q = std::move(Q_);
    out.Qinv = std::move(Qinv_);
    out.transformed_rhs = std::move(rhs_);
    return out;
  }

 private:
  u64 g_of(u64 a) const { return std::gcd(a, m_); }

  bool place_pivot(std::size_t t) {
    const std::size_t R = A_.rows(), C = A_.cols();
    u64 best = m_;
    std::size_t bi = R, bj = C;
    for (std::size_t i = t; i < R && best > 1; ++i) {
      auto row = A_.row(i);
      for (std::size_t j = t; j < C; ++j) {
        if (row[j] == 0) continue;
        u64 g = g_of(row[j]);
        if (g < best) {
          best = g;
          bi = i;
          bj = j;
          if (g == 1) break;
        }
      }
    }
    if (bi == R) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    normalize_pivot(t);
    return true;
  }

  // Scale row t by a unit so that the pivot equals gcd(pivot, m).
  void normalize_pivot(std::size_t t) {
    u64 a = A_.at(t, t);
    if (a == 0) return;
    u64 g = g_of(a);
    if (a == g) return;
    u64 mg = m_ / g;
    u64 base = (a / g) % mg;
    // Find a unit u with u*g == a (mod m): u = base + k*mg coprime to m.
    u64 u = 0;
    for (u64 k = 0; k < g + 1; ++k) {
      u64 cand = (base + k * mg) % m_;
      if (std::gcd(cand, m_) == 1) {
        u = cand;
        break;
      }
    }
    scale_row(t, inv_mod(u, m_));
  }

  void clear_column(std::size_t t) {
    const std::size_t R = A_.rows();
    for (std::size_t i = t + 1; i < R; ++i) {
      u64 a = A_.at(i, t);
      if (a == 0) continue;
      u64 p = A_.at(t, t);
      if (p != 0 && a % p == 0) {
        add_row(i, t, m_ - (a / p) % m_);
      } else {
        auto e = egcd(static_cast<i64>(p), static_cast<i64>(a));
        i64 g = e.g;
        combine_rows(t, i, e.s, e.t, -static_cast<i64>(a) / g, static_cast<i64>(p) / g);
        normalize_pivot(t);
      }
    }
  }

  void clear_row(std::size_t t) {
    const std::size_t C = A_.cols();
    for (std::size_t j = t + 1; j < C; ++j) {
      u64 a = A_.at(t, j);
      if (a == 0) continue;
      u64 p = A_.at(t, t);
      if (p != 0 && a % p == 0) {
        add_col(j, t, m_ - (a / p) % m_);
      } else {
        auto e = egcd(static_cast<i64>(p), static_cast<i64>(a));
        i64 g = e.g;
        combine_cols(t, j, e.s, e.t, -static_cast<i64>(a) / g, static_cast<i64>(p) / g);
        normalize_pivot(t);
      }
    }
  }

  bool column_clear(std::size_t t) const {
    for (std::size_t i = t + 1; i < A_.rows(); ++i)
      if (A_.at(i, t) != 0) return false;
    return true;
  }

  // Returns true if a row had to be merged into row t (so elimination repeats).
  bool fix_divisibility(std::size_t t) {
    u64 p = A_.at(t, t);
    if (p == 0 || p == 1) return false;
    for (std::size_t i = t + 1; i < A_.rows(); ++i) {
      auto row = A_.row(i);
      for (std::size_t j = t + 1; j < A_.cols(); ++j) {
        if (row[j] % p != 0) {
          add_row(t, i, 1);
          return true;
        }
      }
    }
    return false;
  }

  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, u64 k) {
    auto apply = [&](ModMatrix& M) {
      auto d = M.row(dst);
      auto s = M.row(src);
      for (std::size_t c = 0; c < M.cols(); ++c)
        if (s[c]) d[c] = (d[c] + mul_mod(k, s[c], m_)) % m_;
    };
    apply(A_);
    if (P_) apply(*P_);
    if (rhs_) apply(*rhs_);
  }

  void scale_row(std::size_t r, u64 k) {
    auto apply = [&](ModMatrix& M) {
      for (auto& v : M.row(r)) v = mul_mod(v, k, m_);
    };
    apply(A_);
    if (P_) apply(*P_);
    if (rhs_) apply(*rhs_);
  }

  // (row_i, row_j) <- (x row_i + y row_j, u row_i + v row_j), det = 1.
  void combine_rows(std::size_t i, std::size_t j, i64 x, i64 y, i64 u, i64 v) {
    u64 X = reduce_mod(x, m_), Y = reduce_mod(y, m_), U = reduce_mod(u, m_), V = reduce_mod(v, m_);
    auto apply = [&](ModMatrix& M) {
      auto ri = M.row(i);
      auto rj = M.row(j);
      for (std::size_t c = 0; c < M.cols(); ++c) {
        u64 a = ri[c], b = rj[c];
        if (a == 0 && b == 0) continue;
        ri[c] = (mul_mod(X, a, m_) + mul_mod(Y, b, m_)) % m_;
        rj[c] = (mul_mod(U, a, m_) + mul_mod(V, b, m_)) % m_;
      }
    };
    apply(A_);
    if (P_) apply(*P_);
    if (rhs_) apply(*rhs_);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    auto apply = [&](ModMatrix& M) {
      auto ri = M.row(i);
      auto rj = M.row(j);
      std::swap_ranges(ri.begin(), ri.end(), rj.begin());
    };
    apply(A_);
    if (P_) apply(*P_);
    if (rhs_) apply(*rhs_);
  }

  // col_dst += k * col_src
  void add_col(std::size_t dst, std::size_t src, u64 k) {
    auto apply = [&](ModMatrix& M) {
      for (std::size_t r = 0; r < M.rows(); ++r) {
        u64 s = M.at(r, src);
        if (s) M.at(r, dst) = (M.at(r, dst) + mul_mod(k, s, m_)) % m_;
      }
    };
    apply(A_);
    if (Q_) apply(*Q_);
    if (Qinv_) {
      // Inverse operation on rows: row_src -= k * row_dst.
      auto d = Qinv_->row(dst);
      auto s = Qinv_->row(src);
      u64 nk = (m_ - k % m_) % m_;
      for (std::size_t c = 0; c < Qinv_->cols(); ++c)
        if (d[c]) s[c] = (s[c] + mul_mod(nk, d[c], m_)) % m_;
    }
  }

  // (col_i, col_j) <- (x col_i + y col_j, u col_i + v col_j), det = 1.
  void combine_cols(std::size_t i, std::size_t j, i64 x, i64 y, i64 u, i64 v) {
    u64 X = reduce_mod(x, m_), Y = reduce_mod(y, m_), U = reduce_mod(u, m_), V = reduce_mod(v, m_);
    auto apply = [&](ModMatrix& M) {
      for (std::size_t r = 0; r < M.rows(); ++r) {
        u64 a = M.at(r, i), b = M.at(r, j);
        if (a == 0 && b == 0) continue;
        M.at(r, i) = (mul_mod(X, a, m_) + mul_mod(Y, b, m_)) % m_;
        M.at(r, j) = (mul_mod(U, a, m_) + mul_mod(V, b, m_)) % m_;
      }
    };
    apply(A_);
    if (Q_) apply(*Q_);
    if (Qinv_) {
      // The column map is E with E_ii=x, E_ji=y, E_ij=u, E_jj=v; its inverse
      // acts on rows of Qinv: (row_i, row_j) <- (v row_i - u row_j, -y row_i + x row_j).
      auto ri = Qinv_->row(i);
      auto rj = Qinv_->row(j);
      u64 nU = (m_ - U) % m_, nY = (m_ - Y) % m_;
      for (std::size_t c = 0; c < Qinv_->cols(); ++c) {
        u64 a = ri[c], b = rj[c];
        if (a == 0 && b == 0) continue;
        ri[c] = (mul_mod(V, a, m_) + mul_mod(nU, b, m_)) % m_;
        rj[c] = (mul_mod(nY, a, m_) + mul_mod(X, b, m_)) % m_;
      }
    }
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    auto apply = [&](ModMatrix& M) {
      for (std::size_t r = 0; r < M.rows(); ++r) std::swap(M.at(r, i), M.at(r, j));
    };
    apply(A_);
    if (Q_) apply(*Q_);
    if (Qinv_) {
      auto ri = Qinv_->row(i);
      auto rj = Qinv_->row(j);
      std::swap_ranges(ri.begin(), ri.end(), rj.begin());
    }
  }

  ModMatrix A_;
  u64 m_;
  std::optional<ModMatrix> P_, Q_, Qinv_, rhs_;
};

}  // namespace

SmithForm smith_form(ModMatrix A, SmithOptions opts) {
  SmithWorker w(std::move(A), opts);
  return w.run();
}

std::vector<std::vector<u64>> right_kernel(const SmithForm& sf) {
  if (!sf.Q) throw std::logic_error("right_kernel: Q not tracked");
  const u64 m = sf.mod;
  std::vector<std::vector<u64>> gens;
  for (std::size_t i = 0; i < sf.cols; ++i) {
    u64 g = sf.diag[i];
    if (g == 1) continue;
    u64 scale = m / g;  // g == m (zero entry) gives a free coordinate
    std::vector<u64> v(sf.cols);
    bool nonzero = false;
    for (std::size_t r = 0; r < sf.cols; ++r) {
      v[r] = mul_mod(scale, sf.Q->at(r, i), m);
      nonzero |= v[r] != 0;
    }
    if (nonzero) gens.push_back(std::move(v));
  }
  return gens;
}

std::optional<std::vector<u64>> solve_from_transformed(const SmithForm& sf,
                                                       std::span<const u64> pb) {
  if (!sf.Q) throw std::logic_error("solve: Q not tracked");
  const u64 m = sf.mod;
  std::vector<u64> y(sf.cols, 0);
  for (std::size_t i = 0; i < pb.size(); ++i) {
    u64 c = pb[i] % m;
    if (i >= sf.cols) {
      if (c != 0) return std::nullopt;
      continue;
    }
    u64 g = sf.diag[i];
    if (g == m) {
      if (c != 0) return std::nullopt;
      continue;
    }
    if (c % g != 0) return std::nullopt;
    y[i] = c / g;
  }
  return sf.Q->mul_vec(y);
}

std::optional<std::vector<u64>> solve_right(const SmithForm& sf, std::span<const u64> b) {
  if (!sf.P) throw std::logic_error("solve_right: P not tracked");
  return solve_from_transformed(sf, sf.P->mul_vec(b));
}

std::vector<u64> quotient_invariants(const SmithForm& sf) {
  std::vector<u64> inv;
  for (u64 g : sf.diag)
    if (g > 1) inv.push_back(g);
  std::sort(inv.begin(), inv.end(), [](u64 a, u64 b) { return a < b; });
  return inv;
}

}  // namespace tgr
