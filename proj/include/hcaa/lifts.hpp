#pragma once

// Tangent algebras of a Lie algebra with a flat torsion-free connection,
//   T_∇ g = g ⋉_∇ g,   [(x,v), (y,w)] = ([x,y], ∇_x w - ∇_y v),
// their iterates with Clifford systems, and the tangent bundle algebra
//   T g = g ⋉_ad g.
// Basis order: (e_j, 0) first, then (0, e_j).

#include <optional>
#include <vector>

#include "hcaa/connections.hpp"

namespace hcaa {

struct LiftedAlgebra {
  int level = 0;             ///< number of tangent constructions applied
  LieAlgebra base;           ///< the algebra the chain started from
  LieAlgebra total;          ///< T^level
  Connection connection;     ///< ∇^level on total
  HypercomplexTriple triple; ///< (J1^-, J2^-, J1^- J2^-) iterated
  std::vector<RatMat> clifford;  ///< level + 2 anticommuting complex structures
};

/// Largest total dimension the lifts will build; 256 unless HCAA_MAX_DIM is set.
Index max_lift_dim();

/// One tangent construction. Throws LiftRequiresFlatTorsionFree when the
/// connection is not flat and torsion-free, InvalidInput when the triple is
/// not parallel.
LiftedAlgebra tangent_lift(const LieAlgebra& l, const Connection& c, const HypercomplexTriple& t);

/// Stages 1..levels. Throws DeskScaleExceeded before building anything past
/// max_lift_dim().
std::vector<LiftedAlgebra> iterate_lift(const LieAlgebra& l, const Connection& c, const HypercomplexTriple& t,
                                        int levels);

/// ad_{(e0,0)} = (0 ⊕ A) ⊕ Ã ⊕ ... ⊕ Ã (2^level - 1 copies), Ã = [[μ, 0], [v0, A]].
/// Throws InvalidInput when the base is not the almost abelian algebra of spec.
bool ad_matrix_check(const LiftedAlgebra& lift, const AlmostAbelianSpec& spec);

/// The expected ad_{(e0,0)} from the formula above.
RatMat expected_lift_ad(const AlmostAbelianSpec& spec, int level);

struct TangentBundle {
  LieAlgebra total;
  std::optional<HypercomplexTriple> triple;  ///< J_a^+ = J_a ⊕ J_a
};

TangentBundle tangent_bundle_algebra(const LieAlgebra& l, const std::optional<HypercomplexTriple>& t = std::nullopt);

}  // namespace hcaa
