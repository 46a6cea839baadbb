#include "hcaa/classify.hpp"

#include "hcaa/hypercomplex.hpp"
#include "hcaa/lattices.hpp"

namespace hcaa {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Abelian: return "abelian";
    case Family::G1: return "g1";
    case Family::G2: return "g2";
    case Family::G3: return "g3";
    case Family::G4: return "g4";
    case Family::G5: return "g5";
    case Family::G6: return "g6";
    case Family::G7: return "g7";
  }
  return "?";
}

std::optional<Rat> FamilyTag::s() const {
  Rat r;
  if (has_s() && rational_root(s2, 2, r)) return r;
  return std::nullopt;
}

std::string FamilyTag::s_str() const {
  if (const auto r = s()) return to_string(*r);
  return "sqrt(" + to_string(s2) + ")";
}

std::string FamilyTag::str() const {
  std::string out(family_name(family));
  if (family == Family::G2) out += "(" + to_string(lambda) + ")";
  if (family == Family::G6) out += "(" + s_str() + ")";
  if (family == Family::G7) out += "(" + to_string(lambda) + ", " + s_str() + ")";
  return out;
}

FamilyTag classify8(const AlmostAbelianSpec& spec) {
  spec.validate();
  require(spec.n == 2, ErrorKind::InvalidSpec, "classify8 needs an 8-dimensional spec (n = 2)");
  const RatMat b = spec.B();
  const Rat lambda = b.trace() / 4;
  const RatMat u = b - lambda * identity(4);
  const Rat s2 = -mul(u, u)(0, 0);  // U^2 = -s^2 I
  const Rat& mu = spec.mu;

  if (is_zero(u)) {
    if (mu != lambda) {
      // v can be removed; scale so that the nonzero one of (μ, λ) is 1
      if (mu == 0) return FamilyTag::g1();
      return FamilyTag::g2(lambda / mu);
    }
    const bool v_zero = is_zero(spec.v0);
    if (mu == 0) return v_zero ? FamilyTag{} : FamilyTag::g3();
    return v_zero ? FamilyTag::g2(1) : FamilyTag::g4();
  }
  // Eigenvalues of B are λ ± is, so B - μ is invertible and v can be removed.
  if (mu == 0 && lambda == 0) return FamilyTag::g5();
  if (mu == 0) return {Family::G6, 0, s2 / (lambda * lambda)};
  return {Family::G7, lambda / mu, s2 / (mu * mu)};
}

FamilyTag classify8_matrix(const RatMat& a) {
  require(a.rows() == 7 && a.cols() == 7, ErrorKind::InvalidSpec, "classify8 needs a 7x7 matrix");
  const LieAlgebra l = build_almost_abelian(a);
  const auto t = canonical_triple(2);
  if (!verify_hypercomplex(l, t).passed())
    throw Error(ErrorKind::InvalidSpec, "matrix is not of hypercomplex shape for the canonical triple");
  try {
    return classify8(decompose(l, t, identity(8).rightCols(7)).spec);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidSpec, std::string("matrix is not of hypercomplex shape: ") + e.message());
  }
}

AlmostAbelianSpec family_spec(const FamilyTag& tag) {
  AlmostAbelianSpec s = AlmostAbelianSpec::zero(2);
  Rat sv = 0;
  if (tag.has_s()) {
    const auto r = tag.s();
    require(r.has_value(), ErrorKind::InvalidInput, "family_spec: s = " + tag.s_str() + " is not rational");
    require(*r > 0, ErrorKind::InvalidInput, "family_spec: s must be positive");
    sv = *r;
  }
  auto set_b = [&](const Rat& x, const Rat& y) {
    s.X(0, 0) = x;
    s.Y(0, 0) = y;
  };
  switch (tag.family) {
    case Family::Abelian: break;
    case Family::G1: set_b(1, 0); break;
    case Family::G2:
      s.mu = 1;
      set_b(tag.lambda, 0);
      break;
    case Family::G3: s.v0(0) = 1; break;
    case Family::G4:
      s.mu = 1;
      s.v0(0) = 1;
      set_b(1, 0);
      break;
    case Family::G5: set_b(0, 1); break;
    case Family::G6: set_b(1, sv); break;
    case Family::G7:
      s.mu = 1;
      set_b(tag.lambda, sv);
      break;
  }
  return s;
}

std::pair<LieAlgebra, HypercomplexTriple> family_algebra(const FamilyTag& tag) {
  return build_hypercomplex_aa(family_spec(tag));
}

bool FamilyPattern::matches(const FamilyTag& tag) const {
  if (tag.family != family) return false;
  if (lambda && tag.lambda != *lambda) return false;
  if (s2 && tag.s2 != *s2) return false;
  return true;
}

std::string FamilyPattern::str() const {
  std::string out(family_name(family));
  const std::string l = lambda ? to_string(*lambda) : "*";
  if (family == Family::G2) out += "(" + l + ")";
  if (family == Family::G7) out += "(" + l + ", s)";
  return out;
}

std::vector<FamilyPattern> unimodular_families() {
  const Rat m = Rat(-3, 4);
  return {{Family::G2, m, std::nullopt},
          {Family::G3, std::nullopt, std::nullopt},
          {Family::G5, std::nullopt, std::nullopt},
          {Family::G7, m, std::nullopt}};
}

bool is_unimodular_family(const FamilyTag& tag) {
  if (tag.family == Family::Abelian) return true;
  for (const auto& p : unimodular_families())
    if (p.matches(tag)) return true;
  return false;
}

std::string_view to_string(Admissibility a) {
  switch (a) {
    case Admissibility::Admits: return "admits";
    case Admissibility::Rejects: return "rejects";
    case Admissibility::Unknown: return "unknown";
  }
  return "unknown";
}

AdmissibilityReport lattice_admissibility(const FamilyTag& tag) {
  switch (tag.family) {
    case Family::Abelian: return {Admissibility::Admits, "Z^8 in R^8"};
    case Family::G3: {
      const auto lat = g3_lattice(1);
      return {Admissibility::Admits, "nilpotent with rational structure constants; E_1 = exp(A) has H1 = " + lat.h1.str()};
    }
    case Family::G5: {
      const auto census = flat_hk_census();
      return {Admissibility::Admits,
              "exp(2pi/m A) is conjugate to an integer matrix for m = 1, 2, 3, 4, 6 (" +
                  std::to_string(census.size()) + " certified lattices)"};
    }
    default: break;
  }
  if (!is_unimodular_family(tag)) return {Admissibility::Rejects, "not unimodular"};
  return {Admissibility::Rejects,
          "unimodular with mu = 1, lambda = -3/4: the characteristic polynomial of exp(tA) cannot be integral"};
}

}  // namespace hcaa
