// Smith normal form over the integers, templated on the scalar type.
//
// smith_normal_form(M) returns unimodular U, V with U * M * V = diag(d) where
// d_1 | d_2 | ... and every d_i >= 0. Pivot choice is deterministic: the entry
// of smallest absolute value in the active block, ties broken by lowest row
// and then lowest column.

#ifndef CIRCORD_SNF_HPP_
#define CIRCORD_SNF_HPP_

#include <algorithm>
#include <concepts>
#include <cstdlib>
#include <optional>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "circord/integer.hpp"

namespace circord {

namespace scalar {

template <std::integral T>
T abs(T a) { return a < 0 ? -a : a; }
template <std::integral T>
T div_trunc(T a, T b) { return a / b; }
template <std::integral T>
bool divides(T d, T a) { return d == 0 ? a == 0 : a % d == 0; }
template <std::integral T>
bool is_zero(T a) { return a == 0; }

inline Integer abs(const Integer& a) { return circord::abs(a); }
inline Integer div_trunc(const Integer& a, const Integer& b) { return circord::div_trunc(a, b); }
inline bool divides(const Integer& d, const Integer& a) { return circord::divides(d, a); }
inline bool is_zero(const Integer& a) { return a.is_zero(); }

}  // namespace scalar

struct SnfOptions {
  bool left = true;       // accumulate U
  bool right = true;      // accumulate V
  bool inverses = false;  // also accumulate U^-1 and V^-1 (for the requested sides)
};

template <typename Scalar>
struct SnfResult {
  Eigen::Index rows = 0, cols = 0;
  // Diagonal entries, length min(rows, cols); trailing entries are 0.
  std::vector<Scalar> factors;
  Eigen::Index rank = 0;
  Matrix<Scalar> U, V, U_inv, V_inv;  // empty unless requested

  Matrix<Scalar> diagonal() const {
    Matrix<Scalar> d = Matrix<Scalar>::Zero(rows, cols);
    for (std::size_t i = 0; i < factors.size(); ++i) d(i, i) = factors[i];
    return d;
  }
};

namespace detail {

template <typename Scalar>
class SnfWorker {
 public:
  SnfWorker(Matrix<Scalar> a, SnfOptions opts) : a_(std::move(a)), opts_(opts) {
    const auto r = a_.rows(), c = a_.cols();
    if (opts_.left) {
      u_ = Matrix<Scalar>::Identity(r, r);
      if (opts_.inverses) u_inv_ = Matrix<Scalar>::Identity(r, r);
    }
    if (opts_.right) {
      v_ = Matrix<Scalar>::Identity(c, c);
      if (opts_.inverses) v_inv_ = Matrix<Scalar>::Identity(c, c);
    }
  }

  SnfResult<Scalar> run() {
    const Eigen::Index r = a_.rows(), c = a_.cols(), k = std::min(r, c);
    SnfResult<Scalar> out;
    out.rows = r;
    out.cols = c;
    out.factors.assign(static_cast<std::size_t>(k), Scalar(0));
    for (Eigen::Index t = 0; t < k; ++t) {
      auto pivot = smallest_in_block(t, t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      reduce_pivot(t);
      if (a_(t, t) < Scalar(0)) negate_row(t);
      out.factors[static_cast<std::size_t>(t)] = a_(t, t);
      out.rank = t + 1;
    }
    out.U = std::move(u_);
    out.V = std::move(v_);
    out.U_inv = std::move(u_inv_);
    out.V_inv = std::move(v_inv_);
    return out;
  }

 private:
  using Pos = std::pair<Eigen::Index, Eigen::Index>;

  std::optional<Pos> smallest_in_block(Eigen::Index r0, Eigen::Index c0) const {
    std::optional<Pos> best;
    Scalar best_abs{};
    for (Eigen::Index i = r0; i < a_.rows(); ++i)
      for (Eigen::Index j = c0; j < a_.cols(); ++j) {
        const Scalar& x = a_(i, j);
        if (scalar::is_zero(x)) continue;
        Scalar ax = scalar::abs(x);
        if (!best || ax < best_abs) {
          best = Pos{i, j};
          best_abs = std::move(ax);
          if (best_abs == Scalar(1)) return best;
        }
      }
    return best;
  }

  void reduce_pivot(Eigen::Index t) {
    for (;;) {
      if (!clear_column(t)) continue;
      if (!clear_row(t)) continue;
      // Column and row are clear; enforce divisibility of the remaining block.
      bool fixed = false;
      for (Eigen::Index i = t + 1; i < a_.rows() && !fixed; ++i)
        for (Eigen::Index j = t + 1; j < a_.cols(); ++j)
          if (!scalar::divides(a_(t, t), a_(i, j))) {
            add_row(t, i);
            fixed = true;
            break;
          }
      if (!fixed) return;
    }
  }

  // Returns true when column t below the pivot is zero afterwards; otherwise a
  // smaller pivot has been swapped in and the caller loops.
  bool clear_column(Eigen::Index t) {
    for (Eigen::Index i = t + 1; i < a_.rows(); ++i) {
      if (scalar::is_zero(a_(i, t))) continue;
      const Scalar q = scalar::div_trunc(a_(i, t), a_(t, t));
      if (!scalar::is_zero(q)) sub_row(i, t, q);
    }
    std::optional<Eigen::Index> best;
    Scalar best_abs{};
    for (Eigen::Index i = t + 1; i < a_.rows(); ++i) {
      if (scalar::is_zero(a_(i, t))) continue;
      Scalar ax = scalar::abs(a_(i, t));
      if (!best || ax < best_abs) { best = i; best_abs = std::move(ax); }
    }
    if (!best) return true;
    swap_rows(t, *best);
    return false;
  }

  bool clear_row(Eigen::Index t) {
    for (Eigen::Index j = t + 1; j < a_.cols(); ++j) {
      if (scalar::is_zero(a_(t, j))) continue;
      const Scalar q = scalar::div_trunc(a_(t, j), a_(t, t));
      if (!scalar::is_zero(q)) sub_col(j, t, q);
    }
    std::optional<Eigen::Index> best;
    Scalar best_abs{};
    for (Eigen::Index j = t + 1; j < a_.cols(); ++j) {
      if (scalar::is_zero(a_(t, j))) continue;
      Scalar ax = scalar::abs(a_(t, j));
      if (!best || ax < best_abs) { best = j; best_abs = std::move(ax); }
    }
    if (!best) return true;
    swap_cols(t, *best);
    return false;
  }

  // row_i -= q * row_t
  void sub_row(Eigen::Index i, Eigen::Index t, const Scalar& q) {
    const Eigen::Index c = a_.cols();
    for (Eigen::Index j = t; j < c; ++j)
      if (!scalar::is_zero(a_(t, j))) a_(i, j) -= q * a_(t, j);
    if (opts_.left) {
      u_.row(i) -= q * u_.row(t);
      if (opts_.inverses) u_inv_.col(t) += q * u_inv_.col(i);
    }
  }

  // col_j -= q * col_t
  void sub_col(Eigen::Index j, Eigen::Index t, const Scalar& q) {
    const Eigen::Index r = a_.rows();
    for (Eigen::Index i = t; i < r; ++i)
      if (!scalar::is_zero(a_(i, t))) a_(i, j) -= q * a_(i, t);
    if (opts_.right) {
      v_.col(j) -= q * v_.col(t);
      if (opts_.inverses) v_inv_.row(t) += q * v_inv_.row(j);
    }
  }

  // row_t += row_i
  void add_row(Eigen::Index t, Eigen::Index i) {
    a_.row(t) += a_.row(i);
    if (opts_.left) {
      u_.row(t) += u_.row(i);
      if (opts_.inverses) u_inv_.col(i) -= u_inv_.col(t);
    }
  }

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a_.row(i).swap(a_.row(j));
    if (opts_.left) {
      u_.row(i).swap(u_.row(j));
      if (opts_.inverses) u_inv_.col(i).swap(u_inv_.col(j));
    }
  }

  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a_.col(i).swap(a_.col(j));
    if (opts_.right) {
      v_.col(i).swap(v_.col(j));
      if (opts_.inverses) v_inv_.row(i).swap(v_inv_.row(j));
    }
  }

  void negate_row(Eigen::Index t) {
    a_.row(t) = -a_.row(t);
    if (opts_.left) {
      u_.row(t) = -u_.row(t);
      if (opts_.inverses) u_inv_.col(t) = -u_inv_.col(t);
    }
  }

  Matrix<Scalar> a_;
  SnfOptions opts_;
  Matrix<Scalar> u_, v_, u_inv_, v_inv_;
};

}  // namespace detail

template <typename Derived>
SnfResult<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& m,
                                                      SnfOptions opts = {}) {
  using Scalar = typename Derived::Scalar;
  return detail::SnfWorker<Scalar>(Matrix<Scalar>(m), opts).run();
}

// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(m.rows() == m.cols());
  Matrix<Scalar> a(m);
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (scalar::is_zero(a(k, k))) {
      Eigen::Index p = k + 1;
      while (p < n && scalar::is_zero(a(p, k))) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = scalar::div_trunc(Scalar(a(i, j) * a(k, k) - a(i, k) * a(k, j)), prev);
    prev = a(k, k);
  }
  return sign > 0 ? Scalar(a(n - 1, n - 1)) : Scalar(-a(n - 1, n - 1));
}

// Checks every SNF postcondition that the result carries data for: exact
// diagonalization, unimodular transforms, correct inverses, divisibility chain.
template <typename Derived>
bool verify_snf(const Eigen::MatrixBase<Derived>& m, const SnfResult<typename Derived::Scalar>& s) {
  using Scalar = typename Derived::Scalar;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    if (s.factors[i] < Scalar(0)) return false;
    if (i + 1 < s.factors.size() && !scalar::divides(s.factors[i], s.factors[i + 1])) return false;
  }
  if (s.U.size() == 0 || s.V.size() == 0) return true;
  if (!(s.U * m * s.V == s.diagonal())) return false;
  for (const Matrix<Scalar>* t : {&s.U, &s.V}) {
    const Scalar d = bareiss_determinant(*t);
    if (!(d == Scalar(1) || d == Scalar(-1))) return false;
  }
  if (s.U_inv.size() != 0 && !(s.U * s.U_inv == Matrix<Scalar>::Identity(s.rows, s.rows))) return false;
  if (s.V_inv.size() != 0 && !(s.V * s.V_inv == Matrix<Scalar>::Identity(s.cols, s.cols))) return false;
  return true;
}

}  // namespace circord

#endif  // CIRCORD_SNF_HPP_
