#pragma once

// Exact linear algebra over a field: row echelon forms, rank, kernels,
// linear solves, inverses and fraction-free determinants. Written against
// Eigen dense types so any exact scalar with field operations can be used;
// the library instantiates it with Rat.

#include <optional>
#include <utility>
#include <vector>

#include "hcaa/rational.hpp"

namespace hcaa {

template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;      ///< reduced row echelon form
  std::vector<Index> pivots;   ///< pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out;
  out.reduced = input;
  auto& m = out.reduced;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index i = row; i < m.rows(); ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Scalar f = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Basis of the null space {x : M x = 0}, one column per free variable.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto e = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(n, n - e.rank());
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    basis(free, k) = 1;
    for (Index r = 0; r < e.rank(); ++r) basis(e.pivots[static_cast<size_t>(r)], k) = -e.reduced(r, free);
    ++k;
  }
  return basis;
}

/// Columns of M forming a basis of its column space (pivot columns).
template <typename Derived>
Matrix<typename Derived::Scalar> column_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto e = rref(m);
  Matrix<Scalar> out(m.rows(), e.rank());
  for (Index r = 0; r < e.rank(); ++r) out.col(r) = m.col(e.pivots[static_cast<size_t>(r)]);
  return out;
}

/// One solution of M x = b, or nothing when b is not in the column space.
template <typename DerivedM, typename DerivedB>
std::optional<Vector<typename DerivedM::Scalar>> solve(const Eigen::MatrixBase<DerivedM>& m,
                                                        const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedM::Scalar;
  require(m.rows() == b.rows(), ErrorKind::InvalidInput, "solve: dimension mismatch");
  Matrix<Scalar> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(m.cols());
  for (Index r = 0; r < e.rank(); ++r) x(e.pivots[static_cast<size_t>(r)]) = e.reduced(r, m.cols());
  return x;
}

template <typename Derived>
std::optional<Matrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  require(m.rows() == m.cols(), ErrorKind::InvalidInput, "inverse: matrix not square");
  const Index n = m.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  const auto e = rref(aug);
  if (e.rank() < n || e.pivots[static_cast<size_t>(n - 1)] != n - 1) return std::nullopt;
  return Matrix<Scalar>(e.reduced.rightCols(n));
}

/// Bareiss fraction-free determinant; exact for integral domains.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  require(input.rows() == input.cols(), ErrorKind::InvalidInput, "determinant: matrix not square");
  const Index n = input.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> m = input;
  Scalar sign = 1;
  Scalar prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return Scalar(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// True when v lies in the column span of `basis`.
template <typename DerivedA, typename DerivedV>
bool in_span(const Eigen::MatrixBase<DerivedA>& basis, const Eigen::MatrixBase<DerivedV>& v) {
  if (basis.cols() == 0) return is_zero(v);
  return solve(basis, v).has_value();
}

/// Basis of U ∩ W for subspaces given by column bases.
template <typename DerivedU, typename DerivedW>
Matrix<typename DerivedU::Scalar> intersect(const Eigen::MatrixBase<DerivedU>& u,
                                            const Eigen::MatrixBase<DerivedW>& w) {
  using Scalar = typename DerivedU::Scalar;
  Matrix<Scalar> joint(u.rows(), u.cols() + w.cols());
  joint.leftCols(u.cols()) = u;
  joint.rightCols(w.cols()) = -w;
  const Matrix<Scalar> k = kernel(joint);
  return column_basis(Matrix<Scalar>(u * k.topRows(u.cols())));
}

}  // namespace hcaa
