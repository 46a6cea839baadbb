#pragma once

// Left-invariant connections on a Lie algebra with basis e_0..e_{d-1}.
//
// A connection is stored through the matrices of ∇_{e_i}:
//   gamma[i](k, j) = Γ^k_ij,  ∇_{e_i} e_j = Σ_k Γ^k_ij e_k.
// Curvature: R(x, y) = [∇_x, ∇_y] - ∇_{[x,y]}.
// Ricci: Ric(x, y) = tr(z ↦ R(z, x) y), and the Ricci operator r is its
// g-dual, g(r x, y) = Ric(x, y).

#include <array>
#include <optional>
#include <vector>

#include "hcaa/cohomology.hpp"
#include "hcaa/liealg.hpp"

namespace hcaa {

struct Metric {
  RatMat gram;

  static Metric standard(Index dim) { return {identity(dim)}; }
  Index dim() const { return gram.rows(); }
  /// Throws InvalidMetric unless symmetric and positive definite.
  void validate() const;
  Rat operator()(const RatVec& x, const RatVec& y) const { return x.dot(gram * y); }
};

struct Connection {
  std::vector<RatMat> gamma;

  Index dim() const { return static_cast<Index>(gamma.size()); }
  const RatMat& operator[](Index i) const { return gamma[static_cast<size_t>(i)]; }
  /// ∇_x as a matrix.
  RatMat along(const RatVec& x) const;
  friend bool operator==(const Connection& a, const Connection& b) { return a.gamma == b.gamma; }
};

/// Torsion-free connection with all three structures parallel.
Connection obata(const LieAlgebra& l, const HypercomplexTriple& t);

/// The same connection written through the cyclic permutation starting at alpha.
Connection obata_cyclic(const LieAlgebra& l, const HypercomplexTriple& t, int alpha);

/// torsion[i] has column j equal to T(e_i, e_j).
std::vector<RatMat> torsion(const Connection& c, const LieAlgebra& l);
bool torsion_free(const Connection& c, const LieAlgebra& l);

struct CurvatureReport {
  Index dim = 0;
  std::vector<RatMat> R;  ///< R[i * dim + j] = R(e_i, e_j)
  RatMat ricci;           ///< bilinear form Ric(e_a, e_b)
  bool flat = false;

  const RatMat& operator()(Index i, Index j) const { return R[static_cast<size_t>(i * dim + j)]; }
};

CurvatureReport curvature(const Connection& c, const LieAlgebra& l);

/// ∇M = 0 for an endomorphism M, i.e. [∇_{e_i}, M] = 0 for all i.
bool is_parallel(const Connection& c, const RatMat& m);

/// ∇g = 0.
bool is_metric(const Connection& c, const Metric& g);

Connection levi_civita(const LieAlgebra& l, const Metric& g);

/// Kähler form ω(x, y) = g(Jx, y) as a matrix.
RatMat kahler_form(const RatMat& j, const Metric& g);

struct BismutData {
  Connection connection;
  ThreeForm c;  ///< c(x, y, z) = dω(Jx, Jy, Jz)
};

BismutData bismut(const LieAlgebra& l, const RatMat& j, const Metric& g);

/// Ricci operator of a connection with respect to g.
RatMat ricci_operator(const Connection& c, const Metric& g, const LieAlgebra& l);

struct HKTReport {
  bool hkt = false;
  std::optional<std::array<Index, 3>> violation;  ///< basis triple where S_1, S_2, S_3 differ
};

/// S_a(x,y,z) = g([J_a x, J_a y], z) + g([J_a y, J_a z], x) + g([J_a z, J_a x], y)
/// must agree for a = 1, 2, 3.
HKTReport hkt_check(const LieAlgebra& l, const HypercomplexTriple& t, const Metric& g);

/// All three Kähler forms closed.
bool hyperkahler_check(const LieAlgebra& l, const HypercomplexTriple& t, const Metric& g);

/// dc = 0.
bool strong_hkt(const LieAlgebra& l, const ThreeForm& c);

struct CompletenessReport {
  bool complete = false;        ///< tr ρ(x) = 0 for every x
  bool basis_nilpotent = false; ///< every ρ(e_i) nilpotent
  std::vector<Rat> traces;      ///< tr ρ(e_i)
};

/// Right multiplications ρ(x) y = ∇_y x of the left-symmetric product of the
/// Obata connection; the product is complete iff every tr ρ(x) vanishes.
CompletenessReport obata_completeness(const LieAlgebra& l, const HypercomplexTriple& t);
bool geodesically_complete_obata(const AlmostAbelianSpec& spec);

}  // namespace hcaa
