#pragma once

// Chevalley–Eilenberg complex of a Lie algebra over the rationals.
//
// Conventions: k-forms use the lexicographic basis e^{i1} ∧ ... ∧ e^{ik}
// (i1 < ... < ik), with (e^I)(e_I) = 1, and
//   (dα)(x0, ..., xk) = Σ_{i<j} (-1)^{i+j} α([xi, xj], x0, ..^i..^j.., xk),
// so that dα(x, y) = -α([x, y]) on 1-forms.

#include <Eigen/SparseCore>

#include <vector>

#include "hcaa/liealg.hpp"

namespace hcaa {

using SparseRatMat = Eigen::SparseMatrix<Rat>;

/// Multi-indices of size k in lexicographic order.
std::vector<std::vector<Index>> exterior_basis(Index dim, Index k);

/// Position of a strictly increasing multi-index in exterior_basis(dim, size).
Index exterior_index(Index dim, const std::vector<Index>& multi);

Index binomial(Index n, Index k);

/// Matrix of d : Λ^k g* -> Λ^{k+1} g* (rows: degree k+1 basis, cols: degree k).
SparseRatMat ce_differential(const LieAlgebra& l, Index k);

/// Exact rank over Q of a sparse rational matrix.
Index sparse_rank(const SparseRatMat& m);

using BettiVector = std::vector<Int>;

BettiVector betti(const LieAlgebra& l);

/// Closed form for the 4(2n+1)-dimensional diagonal family with A = diag(0,0,0,1,-1,...).
BettiVector betti_closed_form(int n);

/// p b_{2p} = 2 Σ_{j=1}^{2p} (-1)^j (3j^2 - p) b_{2p-j}
bool salamon_check(const BettiVector& b, int p);

/// Every odd-degree entry divisible by 4.
bool wakakuwa_check(const BettiVector& b);

/// b_k = b_{dim-k} for all k.
bool poincare_dual(const BettiVector& b);

// ---------------------------------------------------------------------------
// Forms as dense tensors

/// Fully antisymmetric trilinear form, stored densely.
class ThreeForm {
 public:
  ThreeForm() = default;
  explicit ThreeForm(Index dim) : dim_(dim), data_(static_cast<size_t>(dim * dim * dim), Rat(0)) {}
  Index dim() const { return dim_; }
  Rat& operator()(Index i, Index j, Index k) { return data_[static_cast<size_t>((i * dim_ + j) * dim_ + k)]; }
  const Rat& operator()(Index i, Index j, Index k) const {
    return data_[static_cast<size_t>((i * dim_ + j) * dim_ + k)];
  }
  bool is_alternating() const;
  bool is_zero() const;
  /// Coefficients in the lexicographic basis of Λ^3.
  RatVec to_exterior() const;
  static ThreeForm from_exterior(Index dim, const RatVec& v);
  friend bool operator==(const ThreeForm& a, const ThreeForm& b) { return a.dim_ == b.dim_ && a.data_ == b.data_; }

 private:
  Index dim_ = 0;
  std::vector<Rat> data_;
};

/// Coefficients of the 2-form with ω(e_a, e_b) = m(a, b) (m antisymmetric).
RatVec two_form_to_exterior(const RatMat& m);

/// d applied to a k-form in lexicographic coordinates.
RatVec exterior_derivative(const LieAlgebra& l, Index k, const RatVec& form);

}  // namespace hcaa
