#pragma once

// Exact dense linear algebra over a field scalar.
//
// The routines are free functions over Eigen::MatrixBase<Derived>, so they
// accept blocks, transposes and other expressions. The scalar must provide
// ==, +, -, * and an ADL-visible `inverse(s)`; Scalar(0) is the additive
// identity. Elimination always takes the first nonzero entry of the column
// as pivot.

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rctrs/error.hpp"
#include "rctrs/field.hpp"

namespace rctrs {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using Matrix = MatrixX<Element>;
using RowVector = RowVectorX<Element>;

namespace detail {

/// In-place row reduction to reduced row echelon form. Returns the pivot
/// columns. `swaps` counts row exchanges.
template <typename Scalar>
std::vector<Eigen::Index> reduce(MatrixX<Scalar>& a, std::size_t* swaps = nullptr,
                                 bool full = true) {
  const Scalar zero(0);
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < a.rows() && a(piv, col) == zero) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      a.row(piv).swap(a.row(row));
      if (swaps) ++*swaps;
    }
    const Scalar inv = inverse(a(row, col));
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (Eigen::Index i = full ? 0 : row + 1; i < a.rows(); ++i) {
      if (i == row) continue;
      const Scalar factor = a(i, col);
      if (factor == zero) continue;
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) = a(i, j) - factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <typename Derived>
MatrixX<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& m,
                                                      std::vector<Eigen::Index>* pivots = nullptr) {
  MatrixX<typename Derived::Scalar> a = m;
  auto piv = detail::reduce(a);
  if (pivots) *pivots = std::move(piv);
  return a;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  MatrixX<typename Derived::Scalar> a = m;
  return static_cast<Eigen::Index>(detail::reduce(a, nullptr, false).size());
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
  MatrixX<Scalar> a = m;
  const Eigen::Index n = a.rows();
  const Scalar zero(0);
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && a(piv, col) == zero) ++piv;
    if (piv == n) return zero * a(0, 0);
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      det = -det;
    }
    det = det * a(col, col);
    const Scalar inv = inverse(a(col, col));
    for (Eigen::Index i = col + 1; i < n; ++i) {
      const Scalar factor = a(i, col) * inv;
      if (factor == zero) continue;
      for (Eigen::Index j = col; j < n; ++j) a(i, j) = a(i, j) - factor * a(col, j);
    }
  }
  return det;
}

/// Basis (as rows) of { x : m * x^T = 0 }.
template <typename Derived>
MatrixX<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  std::vector<Eigen::Index> pivots;
  MatrixX<Scalar> r = reduced_row_echelon(m, &pivots);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  // An entry of `m` fixes the field; every basis vector gets a bound one.
  Scalar one(1);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (m(i, j) != Scalar(0)) one = m(i, j) * inverse(m(i, j));

  MatrixX<Scalar> basis(cols - static_cast<Eigen::Index>(pivots.size()), cols);
  basis.setZero();
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(out, free) = one;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      basis(out, pivots[k]) = -r(static_cast<Eigen::Index>(k), free);
    ++out;
  }
  return basis;
}

/// True when both matrices have the same row space.
template <typename DerivedA, typename DerivedB>
bool same_row_space(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.cols() != b.cols()) return false;
  MatrixX<typename DerivedA::Scalar> stacked(a.rows() + b.rows(), a.cols());
  stacked << a, b;
  const auto ra = rank(a);
  return ra == rank(b) && ra == rank(stacked);
}

// --- Vandermonde identities and symmetric functions ------------------------

/// r-th elementary symmetric function; sigma_0 = 1 and sigma_r = 0 for r > N.
Element sigma_r(std::span<const Element> vals, std::size_t r);

/// Rows x^0 .. x^(rows-1) evaluated at each point.
Matrix vandermonde_matrix(std::span<const Element> alphas, std::size_t rows);
inline Matrix vandermonde_matrix(std::span<const Element> alphas) {
  return vandermonde_matrix(alphas, alphas.size());
}

/// prod_{i<j} (alpha_j - alpha_i)
Element vandermonde_det(std::span<const Element> alphas);

/// The n x n matrix with rows x^0 .. x^n except x^h.
Matrix deleted_row_vandermonde_matrix(std::span<const Element> alphas, std::size_t h);

/// sigma_{n-h}(alphas) * vandermonde_det(alphas), for 1 <= h <= n-1.
Element deleted_row_vandermonde_det(std::span<const Element> alphas, std::size_t h);

// --- Text export ----------------------------------------------------------

/// "p m rows cols" then one line of element indices per row.
void write_matrix(std::ostream& os, const Matrix& m, const Field& field);
/// Reads the format above. The header's (p, m) must match `field`.
Matrix read_matrix(std::istream& is, const Field& field);
/// Reads the format above using the default modulus for the header's (p, m).
std::pair<Field, Matrix> read_matrix(std::istream& is);

}  // namespace rctrs
