#pragma once

// Integer and polynomial normal forms: Smith normal form over Z, invariant
// factors over Q[x], characteristic and minimal polynomials, conjugacy over
// the rationals, nilpotent exponentials and small-degree factorization.

#include <optional>
#include <utility>
#include <vector>

#include "hcaa/linalg.hpp"
#include "hcaa/polynomial.hpp"

namespace hcaa {

/// U * M * V = D with U, V unimodular and D = diag(d1, d2, ...) where
/// d1 | d2 | ... and every d_i >= 0; zero entries come last.
struct SmithForm {
  RatMat U, D, V;
  /// Diagonal of D (min(rows, cols) entries).
  std::vector<Int> diagonal() const;
};

/// Throws InvalidInput when M has a non-integer entry.
SmithForm smith_normal_form(const RatMat& m);

/// Monic characteristic polynomial det(xI - M) via Hessenberg reduction.
RatPoly char_poly(const RatMat& m);

/// Monic minimal polynomial, from the first linear dependency among I, M, M^2, ...
RatPoly min_poly(const RatMat& m);

/// Non-trivial invariant factors f1 | f2 | ... | fr of M (Smith form of xI - M over Q[x]).
std::vector<RatPoly> invariant_factors(const RatMat& m);

/// Conjugacy over Q (equivalently over R for rational matrices).
bool conjugate_over_field(const RatMat& a, const RatMat& b);

/// An invertible P with P^{-1} A P = B, when A and B are conjugate over Q.
std::optional<RatMat> find_conjugator(const RatMat& a, const RatMat& b);

bool is_nilpotent(const RatMat& m);

/// Finite sum exp(N) = sum N^j / j!. Throws NotNilpotent otherwise.
RatMat exp_nilpotent(const RatMat& n);

/// m-th cyclotomic polynomial.
RatPoly cyclotomic(unsigned m);

/// Factorization of a non-zero rational polynomial into monic irreducible
/// factors of degree at most two. Any cofactor that has no linear or
/// quadratic factor is returned as-is and flagged in `unresolved`.
struct LowDegreeFactorization {
  Rat unit;                                   ///< leading coefficient
  std::vector<std::pair<RatPoly, int>> factors;  ///< (irreducible, multiplicity)
  std::vector<std::pair<RatPoly, int>> unresolved;
  bool complete() const { return unresolved.empty(); }
};

LowDegreeFactorization factor_low_degree(const RatPoly& p);

}  // namespace hcaa
