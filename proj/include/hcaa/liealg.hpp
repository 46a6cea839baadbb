#pragma once

// Lie algebras by structure constants, almost abelian algebras R e0 ⋉_A R^d,
// and the block family (n, mu, v0, X, Y, Z, W) of hypercomplex almost abelian
// algebras.

#include <array>
#include <optional>
#include <vector>

#include "hcaa/linalg.hpp"

namespace hcaa {

/// Real Lie algebra on a fixed basis e_0..e_{dim-1}. Stored as the adjoint
/// matrices: ad(i)(k, j) is the coefficient of e_k in [e_i, e_j].
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Throws InvalidInput if the data is not antisymmetric.
  explicit LieAlgebra(std::vector<RatMat> ad);

  static LieAlgebra abelian(Index dim);

  Index dim() const { return static_cast<Index>(ad_.size()); }
  const RatMat& ad(Index i) const { return ad_[static_cast<size_t>(i)]; }
  const std::vector<RatMat>& ad_matrices() const { return ad_; }
  /// Structure constant c^k_{ij}.
  const Rat& c(Index i, Index j, Index k) const { return ad_[static_cast<size_t>(i)](k, j); }

  RatMat ad_of(const RatVec& x) const;
  RatVec bracket(const RatVec& x, const RatVec& y) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.ad_ == b.ad_; }

 private:
  std::vector<RatMat> ad_;
};

struct JacobiViolation {
  Index i, j, k;
  RatVec value;  ///< [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& l);

/// R e_0 ⋉_A R^d with [e_0, e_i] = sum_j A(j-1, i-1) e_j.
LieAlgebra build_almost_abelian(const RatMat& a);

/// A basis change: the algebra written in the basis given by the columns of p.
LieAlgebra change_basis(const LieAlgebra& l, const RatMat& p);

bool unimodular(const LieAlgebra& l);

struct NilpotencyData {
  bool nilpotent = false;
  int step = 0;  ///< nilpotency step when nilpotent (abelian counts as 1)
  bool solvable = false;
  std::vector<Index> lower_central_dims;  ///< dim g^1, g^2, ... until stable
};

NilpotencyData nilpotency_data(const LieAlgebra& l);

/// Some rational c != 0 with c*A1 conjugate to A2, if one exists among the
/// scalars forced by the characteristic polynomials.
std::optional<Rat> isomorphic_aa(const RatMat& a1, const RatMat& a2);

// ---------------------------------------------------------------------------
// Hypercomplex almost abelian block data

struct HypercomplexTriple {
  RatMat J1, J2, J3;
  /// alpha in {1, 2, 3}
  const RatMat& operator[](int alpha) const;
  Index dim() const { return J1.rows(); }
};

/// Quaternionic block matrix [[X,-Y,-Z,-W],[Y,X,W,-Z],[Z,-W,X,Y],[W,Z,-Y,X]].
RatMat quaternionic_block(const RatMat& x, const RatMat& y, const RatMat& z, const RatMat& w);

/// The standard triple on R^{4k} in the block basis (f, J1 f, J2 f, J3 f).
HypercomplexTriple quaternionic_triple(Index k);

struct AlmostAbelianSpec {
  int n = 1;       ///< quaternionic dimension; the algebra has dimension 4n
  Rat mu = 0;
  RatVec v0;       ///< length 4(n-1)
  RatMat X, Y, Z, W;  ///< (n-1) x (n-1)

  /// All-zero data of quaternionic dimension n.
  static AlmostAbelianSpec zero(int n);

  Index h_dim() const { return 4 * (n - 1); }
  Index dim() const { return 4 * n; }
  RatMat B() const;
  /// v_alpha = J_alpha v0 for alpha = 1, 2, 3 (alpha = 0 returns v0).
  RatVec v(int alpha) const;
  /// ad_{e_0} on u = span(e_1, ..., e_{4n-1}).
  RatMat A() const;
  /// Throws InvalidSpec on inconsistent sizes.
  void validate() const;
};

/// Canonical triple on the full algebra: quaternionic action on
/// (e0, e1, e2, e3) with e_alpha = J_alpha e0, and the block form on h.
HypercomplexTriple canonical_triple(int n);

/// (algebra, canonical triple) for the spec.
std::pair<LieAlgebra, HypercomplexTriple> build_hypercomplex_aa(const AlmostAbelianSpec& spec);

}  // namespace hcaa
