#pragma once

// Exact determinants by fraction-free (Bareiss) elimination, and exact
// recovery of an integer polynomial from its values at 0, 1, ..., n.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace skew {

/// Determinant of a square matrix over an exact integral domain. Every
/// division performed is exact; a zero pivot triggers a row swap.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& matrix) {
  using Scalar = typename Derived::Scalar;
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = matrix;
  const Eigen::Index n = m.rows();
  Scalar sign(1);
  Scalar previous(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == Scalar(0)) ++swap_row;
      if (swap_row == n) return Scalar(0);
      m.row(k).swap(m.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  return n == 0 ? Scalar(1) : Scalar(sign * m(n - 1, n - 1));
}

/// Monomial coefficients c_0..c_n (lowest degree first) of the unique
/// polynomial of degree <= n taking values[k] at x = k, k = 0..n.
///
/// Uses the Newton forward-difference form. For a polynomial with integer
/// coefficients the k-th difference is divisible by k!, so everything stays
/// in the integers; a non-integral result throws std::domain_error.
template <typename Integer>
std::vector<Integer> interpolate_at_consecutive_integers(std::span<const Integer> values) {
  const std::size_t count = values.size();
  std::vector<Integer> diff(values.begin(), values.end());
  std::vector<Integer> newton(count);
  Integer factorial(1);
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) factorial *= Integer(static_cast<long>(k));
    if (diff[0] % factorial != 0) throw std::domain_error("values do not come from an integer polynomial");
    newton[k] = diff[0] / factorial;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  // sum_k newton[k] * x (x-1) ... (x-k+1), expanded.
  std::vector<Integer> result(count, Integer(0));
  std::vector<Integer> falling{Integer(1)};
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t j = 0; j < falling.size(); ++j) result[j] += newton[k] * falling[j];
    std::vector<Integer> next(falling.size() + 1, Integer(0));
    for (std::size_t j = 0; j < falling.size(); ++j) {
      next[j + 1] += falling[j];
      next[j] -= falling[j] * Integer(static_cast<long>(k));
    }
    falling = std::move(next);
  }
  return result;
}

}  // namespace skew
