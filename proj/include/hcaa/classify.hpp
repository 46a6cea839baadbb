#pragma once

// Isomorphism classes of 8-dimensional hypercomplex almost abelian Lie
// algebras. Every such algebra is isomorphic to exactly one of
//   g1, g2(λ), g3, g4, g5, g6(s), g7(λ, s)      (s > 0)
// or to the abelian algebra, which carries the flat structure as well.

#include <optional>
#include <string>
#include <vector>

#include "hcaa/liealg.hpp"

namespace hcaa {

enum class Family { Abelian, G1, G2, G3, G4, G5, G6, G7 };

std::string_view family_name(Family f);

struct FamilyTag {
  Family family = Family::Abelian;
  Rat lambda = 0;  ///< g2, g7
  Rat s2 = 0;      ///< s^2 for g6, g7; s itself may be irrational

  bool has_lambda() const { return family == Family::G2 || family == Family::G7; }
  bool has_s() const { return family == Family::G6 || family == Family::G7; }
  /// s when it is rational.
  std::optional<Rat> s() const;
  /// "s" as text: a rational or sqrt(q).
  std::string s_str() const;
  /// "g7(-3/4, 2)"
  std::string str() const;
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;

  static FamilyTag g1() { return {Family::G1, 0, 0}; }
  static FamilyTag g2(const Rat& lambda) { return {Family::G2, lambda, 0}; }
  static FamilyTag g3() { return {Family::G3, 0, 0}; }
  static FamilyTag g4() { return {Family::G4, 0, 0}; }
  static FamilyTag g5() { return {Family::G5, 0, 0}; }
  static FamilyTag g6(const Rat& s) { return {Family::G6, 0, s * s}; }
  static FamilyTag g7(const Rat& lambda, const Rat& s) { return {Family::G7, lambda, s * s}; }
};

/// Decision procedure on an n = 2 spec. Throws InvalidSpec for other n.
FamilyTag classify8(const AlmostAbelianSpec& spec);

/// Same, starting from a 7×7 matrix A acting on span(e1, ..., e7) with the
/// canonical triple. Throws InvalidSpec when A is not of hypercomplex shape.
FamilyTag classify8_matrix(const RatMat& a);

/// Representative spec of a family: v0 = f0 where needed, B = B(λ, s, 0, 0).
/// Throws InvalidInput if s is irrational.
AlmostAbelianSpec family_spec(const FamilyTag& tag);
std::pair<LieAlgebra, HypercomplexTriple> family_algebra(const FamilyTag& tag);

/// A family with optional fixed parameters (nullopt = any value).
struct FamilyPattern {
  Family family;
  std::optional<Rat> lambda;
  std::optional<Rat> s2;

  bool matches(const FamilyTag& tag) const;
  std::string str() const;
};

/// g2(-3/4), g3, g5, g7(-3/4, s).
std::vector<FamilyPattern> unimodular_families();
bool is_unimodular_family(const FamilyTag& tag);

enum class Admissibility { Admits, Rejects, Unknown };
std::string_view to_string(Admissibility a);

struct AdmissibilityReport {
  Admissibility verdict = Admissibility::Unknown;
  std::string reason;
};

/// Whether the simply connected group of the family admits lattices.
AdmissibilityReport lattice_admissibility(const FamilyTag& tag);

}  // namespace hcaa
