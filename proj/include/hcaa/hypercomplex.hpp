#pragma once

// Complex and hypercomplex structures on Lie algebras: Nijenhuis tensors,
// quaternion relations, the sphere of complex structures, recovery of the
// block data from an almost abelian algebra, frame normalization and
// Clifford systems.

#include <optional>
#include <string>
#include <vector>

#include "hcaa/liealg.hpp"

namespace hcaa {

/// N_J(x, y) = [x,y] + J([Jx,y] + [x,Jy]) - [Jx,Jy]
RatVec nijenhuis(const LieAlgebra& l, const RatMat& j, const RatVec& x, const RatVec& y);

/// J^2 = -I and N_J vanishes on all basis pairs.
bool integrable(const LieAlgebra& l, const RatMat& j);

struct HypercomplexReport {
  bool squares = false;          ///< J_alpha^2 = -I for all alpha
  bool quaternion_relations = false;  ///< J1 J2 = -J2 J1 = J3
  std::array<bool, 3> integrable{};
  bool passed() const {
    return squares && quaternion_relations && integrable[0] && integrable[1] && integrable[2];
  }
};

HypercomplexReport verify_hypercomplex(const LieAlgebra& l, const HypercomplexTriple& t);

/// J_y = y1 J1 + y2 J2 + y3 J3 for a rational point of the unit sphere.
RatMat sphere_structure(const HypercomplexTriple& t, const RatVec& y);

struct DecompositionReport {
  RatMat q_basis;  ///< columns e0, e1, e2, e3
  RatMat h_basis;  ///< columns f_j, J1 f_j, J2 f_j, J3 f_j (j = 1..n-1)
  Rat mu;
  std::array<RatVec, 4> v;  ///< v0..v3 in h-coordinates; v_alpha = J_alpha v0
  RatMat B;        ///< ad_{e0} on h in h-coordinates
  /// The same data as a spec (X, Y, Z, W read off the blocks of B).
  AlmostAbelianSpec spec;
};

/// Recovers (h, q, mu, v, B) from an almost abelian algebra with hypercomplex
/// triple t and codimension-one abelian ideal u (given by a column basis).
DecompositionReport decompose(const LieAlgebra& l, const HypercomplexTriple& t, const RatMat& u_basis);

struct NormalizedFrame {
  AlmostAbelianSpec spec;  ///< same mu and B, v0 = 0
  RatVec x1;               ///< solution of (B - mu I) x1 = v1
  RatMat frame;            ///< columns e0', e1', e2', e3' in the original basis
};

/// Frame change removing v when v1 lies in the image of B - mu I.
std::optional<NormalizedFrame> normalize_v(const AlmostAbelianSpec& spec);

struct CliffordReport {
  Index order = 0;  ///< number of generators
  bool squares = false;
  bool anticommute = false;
  Index span_dim = 0;  ///< dimension of the generated associative algebra
  bool passed() const { return squares && anticommute && span_dim == (Index(1) << order); }
};

CliffordReport clifford_verify(const std::vector<RatMat>& generators);

}  // namespace hcaa
