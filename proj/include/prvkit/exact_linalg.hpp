#pragma once

// Gaussian elimination over an exact field. Eigen's decompositions pivot on
// magnitude and assume an epsilon; here a pivot is any nonzero entry.

#include "prvkit/types.hpp"

#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <utility>

namespace prvkit::linalg {

/// Reduces `a` in place to reduced row echelon form and returns the pivot
/// columns.
template <class Scalar>
std::vector<Eigen::Index> rref_in_place(DenseMatrix<Scalar>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < a.rows(); ++r) {
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Scalar f = a(r, col);
      for (Eigen::Index c = col; c < a.cols(); ++c) {
        if (a(row, c) != 0) a(r, c) -= f * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Scalar>
Eigen::Index rank(DenseMatrix<Scalar> a) {
  return static_cast<Eigen::Index>(rref_in_place(a).size());
}

template <class Scalar>
Eigen::Index nullity(const DenseMatrix<Scalar>& a) {
  return a.cols() - rank(a);
}

/// Inverse of a square matrix, or nullopt when singular.
template <class Scalar>
std::optional<DenseMatrix<Scalar>> inverse(const DenseMatrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw Error("inverse of a non-square matrix");
  DenseMatrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = DenseMatrix<Scalar>::Identity(n, n);
  auto piv = rref_in_place(aug);
  if (static_cast<Eigen::Index>(piv.size()) < n || piv.back() >= n) return std::nullopt;
  return DenseMatrix<Scalar>(aug.rightCols(n));
}

/// Unique solution of a x = b for a with independent columns, if one exists.
template <class Scalar>
std::optional<DenseMatrix<Scalar>> solve_exact(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  const Eigen::Index n = a.cols();
  DenseMatrix<Scalar> aug(a.rows(), n + b.cols());
  aug.leftCols(n) = a;
  aug.rightCols(b.cols()) = b;
  auto piv = rref_in_place(aug);
  Eigen::Index k = 0;
  for (auto p : piv) {
    if (p >= n) return std::nullopt;  // inconsistent
    ++k;
  }
  if (k < n) throw Error("solve_exact: columns are dependent");
  return DenseMatrix<Scalar>(aug.topRightCorner(n, b.cols()));
}

inline DenseMatrix<Rational> to_rational(const IntMat& m) {
  return m.unaryExpr([](std::int64_t x) { return Rational(x); });
}

}  // namespace prvkit::linalg
