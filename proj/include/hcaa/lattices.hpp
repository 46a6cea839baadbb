#pragma once

// Lattices in almost abelian groups R ⋉_{exp(tA)} R^d: certification that
// exp(t0 A) is conjugate to an integer matrix E, abelianizations of
// Z ⋉_E Z^d, holonomy orders, and the concrete lattice families.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcaa/liealg.hpp"
#include "hcaa/polynomial.hpp"

namespace hcaa {

/// Times t0 for which exp(t0 A) can be handled exactly.
struct SpecialTime {
  enum class Kind {
    TwoPiOver,      ///< t = 2π/m, m ∈ {1, 2, 3, 4, 6}
    HyperbolicLog,  ///< t = log((m + sqrt(m^2 - 4)) / 2), so e^t + e^-t = m, m >= 3
    Rational,       ///< t rational; A must be nilpotent
  };
  Kind kind = Kind::Rational;
  Int m = 0;
  Rat t = 0;

  static SpecialTime two_pi_over(long m);
  static SpecialTime hyperbolic_log(long m);
  static SpecialTime rational(const Rat& t);

  /// "2pi/3", "2pi", "hyperlog/3", or a plain rational such as "1/2".
  static SpecialTime parse(std::string_view text);
  std::string str() const;
  friend bool operator==(const SpecialTime&, const SpecialTime&) = default;
};

struct ElementaryDivisor {
  RatPoly irreducible;
  int exponent = 1;
};

struct WitnessCertificate {
  bool conjugate = false;
  std::vector<ElementaryDivisor> exp_divisors;  ///< elementary divisors of exp(t0 A)
  std::vector<RatPoly> expected;                ///< invariant factors of exp(t0 A)
  std::vector<RatPoly> witness;                 ///< invariant factors of E
  RatPoly char_poly;                            ///< of E
  Int det;                                      ///< of E
};

/// Decides whether exp(t0 A) is conjugate over R to the integer matrix E by
/// comparing rational invariant factors. Throws UnsupportedSpectrum when the
/// spectrum of A does not give rational invariant factors at this time, and
/// InvalidInput when E is not in GL(d, Z).
WitnessCertificate verify_lattice_witness(const RatMat& a, const SpecialTime& t0, const RatMat& e);

/// Elementary divisors of A over Q. Throws UnsupportedSpectrum when an
/// invariant factor has an irreducible factor of degree above two.
std::vector<ElementaryDivisor> elementary_divisors(const RatMat& a);

/// Invariant factors f1 | f2 | ... assembled from elementary divisors.
std::vector<RatPoly> invariant_factors_from(const std::vector<ElementaryDivisor>& divisors);

/// First homology of Z ⋉_E Z^d: Z ⊕ coker(I - E).
struct AbelianizationResult {
  Index free_rank = 0;
  std::vector<Int> torsion;  ///< entries > 1, each dividing the next

  /// "Z^4 + (Z_2)^4"
  std::string str() const;
  friend bool operator==(const AbelianizationResult&, const AbelianizationResult&) = default;
};

AbelianizationResult abelianization(const RatMat& e);

/// Multiplicative order of E, or nullopt when E has infinite order.
std::optional<Int> holonomy_order(const RatMat& e);

struct FlatHKRecord {
  std::string name;  ///< "M1", "M2,0", ..., "M6"
  int m = 1;         ///< t0 = 2π/m
  RatMat E;
  Int holonomy = 1;
  AbelianizationResult h1;
  WitnessCertificate certificate;
};

/// The 7×7 matrix 0_3 ⊕ [[0,-1],[1,0]] ⊕ [[0,1],[-1,0]].
RatMat flat_hk_matrix();

/// The twelve lattices of the flat hyper-Kähler group in dimension 8, each
/// certified, with holonomy and first homology checked against the known
/// values. Throws CensusFailure on any mismatch.
std::vector<FlatHKRecord> flat_hk_census();

struct LatticeData {
  RatMat E;
  AbelianizationResult h1;
};

/// The 7×7 nilpotent matrix of the 2-step example (e_a -> f_a).
RatMat g3_matrix();
/// E_k = exp(kA) for that matrix.
LatticeData g3_lattice(long k);

/// Diagonal family in dimension 8n+4 (v = 0, B = diag(X, X, X, X), X = diag(1, -1, ...)).
AlmostAbelianSpec diagonal_family_spec(int n);
/// E_m = I_3 ⊕ 4n copies of [[0,-1],[1,m]]; certified against HyperbolicLog(m).
LatticeData diagonal_family_lattice(int n, long m);

/// Pairs (k, j) with 0 <= k <= kmax, 0 <= j <= jmax, k + j > 0 and 4k = 3j.
std::vector<std::pair<int, int>> nonexistence_exponent_check(int kmax = 3, int jmax = 4);

}  // namespace hcaa
