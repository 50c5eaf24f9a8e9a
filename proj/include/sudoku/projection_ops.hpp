#ifndef SUDOKU_PROJECTION_OPS_HPP
#define SUDOKU_PROJECTION_OPS_HPP

// Euclidean projections onto a box, a hyperplane and the unit simplex. All operators are templated
// on the Eigen expression type so they accept fixed-size, dynamic, or mapped vectors.

#include <Eigen/Core>

#include <algorithm>
#include <stdexcept>

namespace sudoku {

template <typename Derived>
using PlainVector = Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, 1, 0,
                                  Derived::MaxRowsAtCompileTime, 1>;

/// x_i = min{max{lower_i, y_i}, upper_i}
template <typename DerivedY, typename DerivedL, typename DerivedU>
PlainVector<DerivedY> project_rectangle(const Eigen::MatrixBase<DerivedY>& point,
                                        const Eigen::MatrixBase<DerivedL>& lower,
                                        const Eigen::MatrixBase<DerivedU>& upper) {
  if (point.size() != lower.size() || point.size() != upper.size())
    throw std::invalid_argument("project_rectangle: dimension mismatch");
  if ((lower.array() > upper.array()).any())
    throw std::invalid_argument("project_rectangle: lower bound exceeds upper bound");
  return point.cwiseMax(lower).cwiseMin(upper);
}

/// x - ((v'x - c) / |v|^2) v
template <typename DerivedX, typename DerivedV>
PlainVector<DerivedX> project_hyperplane(const Eigen::MatrixBase<DerivedX>& point,
                                         const Eigen::MatrixBase<DerivedV>& normal,
                                         typename DerivedX::Scalar offset) {
  if (point.size() != normal.size()) throw std::invalid_argument("project_hyperplane: dimension mismatch");
  const auto norm2 = normal.squaredNorm();
  if (norm2 == 0) throw std::invalid_argument("project_hyperplane: zero normal");
  return point - ((normal.dot(point) - offset) / norm2) * normal;
}

/// Threshold lambda of the simplex projection, so that the projection is max{y_i - lambda, 0}.
/// Sort descending, take the largest k with w_k > (sum_{i<=k} w_i - 1) / k, and return that
/// right-hand side.
template <typename Derived>
typename Derived::Scalar simplex_threshold(const Eigen::MatrixBase<Derived>& point) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index d = point.size();
  if (d == 0) throw std::invalid_argument("project_simplex: empty vector");

  PlainVector<Derived> w = point;
  std::sort(w.data(), w.data() + d, [](Scalar a, Scalar b) { return a > b; });

  Scalar prefix = 0;
  Scalar lambda = 0;
  for (Eigen::Index j = 0; j < d; ++j) {
    prefix += w[j];
    const Scalar candidate = (prefix - Scalar(1)) / static_cast<Scalar>(j + 1);
    if (w[j] > candidate) lambda = candidate;
  }
  return lambda;
}

/// Euclidean projection onto {x : x_i >= 0, sum x_i = 1}.
template <typename Derived>
PlainVector<Derived> project_simplex(const Eigen::MatrixBase<Derived>& point) {
  const auto lambda = simplex_threshold(point);
  return (point.array() - lambda).cwiseMax(typename Derived::Scalar(0)).matrix();
}

}  // namespace sudoku

#endif  // SUDOKU_PROJECTION_OPS_HPP
