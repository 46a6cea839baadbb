#include "hcaa/lattices.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hcaa/linalg.hpp"
#include "hcaa/normal_forms.hpp"

namespace hcaa {

SpecialTime SpecialTime::two_pi_over(long m) {
  require(m >= 1, ErrorKind::InvalidInput, "2pi/m needs m >= 1");
  SpecialTime s;
  s.kind = Kind::TwoPiOver;
  s.m = m;
  return s;
}

SpecialTime SpecialTime::hyperbolic_log(long m) {
  require(m >= 3, ErrorKind::InvalidInput, "hyperbolic time needs m >= 3");
  SpecialTime s;
  s.kind = Kind::HyperbolicLog;
  s.m = m;
  return s;
}

SpecialTime SpecialTime::rational(const Rat& t) {
  SpecialTime s;
  s.kind = Kind::Rational;
  s.t = t;
  return s;
}

SpecialTime SpecialTime::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto integer_after = [&](size_t pos) {
    const Rat q = parse_rational(s.substr(pos));
    require(is_integer(q), ErrorKind::ParseError, "time parameter must be an integer: '" + std::string(text) + "'");
    return static_cast<long>(to_integer(q));
  };
  if (s == "2pi") return two_pi_over(1);
  if (s.rfind("2pi/", 0) == 0) return two_pi_over(integer_after(4));
  if (s.rfind("hyperlog/", 0) == 0) return hyperbolic_log(integer_after(9));
  return rational(parse_rational(s));
}

std::string SpecialTime::str() const {
  switch (kind) {
    case Kind::TwoPiOver: return m == 1 ? "2pi" : "2pi/" + m.str();
    case Kind::HyperbolicLog: return "hyperlog/" + m.str();
    case Kind::Rational: return to_string(t);
  }
  return {};
}

// ---------------------------------------------------------------------------

std::vector<ElementaryDivisor> elementary_divisors(const RatMat& a) {
  std::vector<ElementaryDivisor> out;
  for (const RatPoly& f : invariant_factors(a)) {
    const auto fac = factor_low_degree(f);
    if (!fac.complete())
      throw Error(ErrorKind::UnsupportedSpectrum,
                  "invariant factor " + f.str() + " has an irreducible factor of degree above two");
    for (const auto& [p, e] : fac.factors) out.push_back({p, e});
  }
  return out;
}

std::vector<RatPoly> invariant_factors_from(const std::vector<ElementaryDivisor>& divisors) {
  // Key by coefficient strings so that equal irreducibles group together.
  std::map<std::string, std::pair<RatPoly, std::vector<int>>> groups;
  for (const auto& d : divisors) {
    auto& g = groups[d.irreducible.monic().str()];
    g.first = d.irreducible.monic();
    g.second.push_back(d.exponent);
  }
  size_t count = 0;
  for (auto& [key, g] : groups) {
    std::sort(g.second.begin(), g.second.end(), std::greater<>());
    count = std::max(count, g.second.size());
  }
  // f_count is the product of the largest powers, f_{count-1} of the next, ...
  std::vector<RatPoly> out(count, RatPoly::constant(1));
  for (const auto& [key, g] : groups)
    for (size_t i = 0; i < g.second.size(); ++i) out[count - 1 - i] *= g.first.pow(static_cast<unsigned>(g.second[i]));
  return out;
}

namespace {

[[noreturn]] void unsupported(const std::string& what) { throw Error(ErrorKind::UnsupportedSpectrum, what); }

RatPoly quadratic(const Rat& b, const Rat& c) { return RatPoly({c, b, Rat(1)}); }  // x^2 + b x + c

std::vector<ElementaryDivisor> exp_two_pi_over(const std::vector<ElementaryDivisor>& divs, const Int& m) {
  std::vector<ElementaryDivisor> out;
  const RatPoly x_minus_1 = RatPoly::linear(1), x_plus_1 = RatPoly::linear(-1);
  for (const auto& d : divs) {
    const RatPoly& p = d.irreducible;
    if (p.degree() == 1 && p.coeff(0) == 0) {
      out.push_back({x_minus_1, d.exponent});
      continue;
    }
    if (p.degree() == 2 && p.coeff(1) == 0 && p.coeff(0) > 0) {
      Rat s;
      if (!rational_root(p.coeff(0), 2, s))
        unsupported("eigenvalues ±i·sqrt(" + to_string(p.coeff(0)) + ") are not rational multiples of i");
      // Eigenvalues e^{±2πi s/m}.
      const Rat angle = s / Rat(m);
      const Int q = mp::denominator(angle);
      if (q == 1) {
        out.push_back({x_minus_1, d.exponent});
        out.push_back({x_minus_1, d.exponent});
      } else if (q == 2) {
        out.push_back({x_plus_1, d.exponent});
        out.push_back({x_plus_1, d.exponent});
      } else if (q == 3 || q == 4 || q == 6) {
        const Rat two_cos = q == 3 ? Rat(-1) : q == 4 ? Rat(0) : Rat(1);
        out.push_back({quadratic(-two_cos, 1), d.exponent});
      } else {
        unsupported("rotation by 2pi*" + to_string(angle) + " has irrational trace 2cos(2pi/" + q.str() + ")");
      }
      continue;
    }
    unsupported("factor " + p.str() + " of A does not exponentiate to an integral spectrum at 2pi/" + m.str());
  }
  return out;
}

std::vector<ElementaryDivisor> exp_hyperbolic(const std::vector<ElementaryDivisor>& divs, const Int& m) {
  // L_q = e^{qt} + e^{-qt}: L_0 = 2, L_1 = m, L_{q+1} = m L_q - L_{q-1}.
  auto lucas = [&m](Int q) {
    Int prev = 2, cur = m;
    if (q == 0) return prev;
    for (Int i = 1; i < q; ++i) {
      Int next = m * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  };
  std::vector<ElementaryDivisor> out;
  std::multimap<std::pair<Rat, int>, bool> roots;  // (root, exponent) -> used
  for (const auto& d : divs) {
    if (d.irreducible.degree() != 1)
      unsupported("factor " + d.irreducible.str() + " of A is not linear; no hyperbolic witness at this time");
    const Rat root = -d.irreducible.coeff(0);
    if (!is_integer(root)) unsupported("eigenvalue " + to_string(root) + " of A is not an integer");
    if (root == 0) {
      out.push_back({RatPoly::linear(1), d.exponent});
    } else {
      roots.emplace(std::make_pair(root, d.exponent), false);
    }
  }
  // Pair q with -q; each pair gives one (x^2 - L_q x + 1)^k.
  while (!roots.empty()) {
    auto it = roots.begin();
    const auto [root, k] = it->first;
    roots.erase(it);
    const auto partner = roots.find({-root, k});
    if (partner == roots.end())
      unsupported("eigenvalue " + to_string(root) + " of A has no partner " + to_string(-root) +
                  "; exp(tA) cannot be unimodular");
    roots.erase(partner);
    const Int q = mp::abs(to_integer(root));
    out.push_back({quadratic(Rat(-lucas(q)), 1), k});
  }
  return out;
}

}  // namespace

WitnessCertificate verify_lattice_witness(const RatMat& a, const SpecialTime& t0, const RatMat& e) {
  require(a.rows() == a.cols() && e.rows() == e.cols() && a.rows() == e.rows(), ErrorKind::InvalidInput,
          "verify_lattice_witness: A and E must be square of the same size");
  require(is_integer_matrix(e), ErrorKind::InvalidInput, "witness E is not an integer matrix");
  WitnessCertificate cert;
  const Rat det = determinant(e);
  cert.det = to_integer(det);
  require(cert.det == 1 || cert.det == -1, ErrorKind::InvalidInput, "witness E is not invertible over Z");
  cert.char_poly = char_poly(e);
  cert.witness = invariant_factors(e);

  switch (t0.kind) {
    case SpecialTime::Kind::TwoPiOver:
      cert.exp_divisors = exp_two_pi_over(elementary_divisors(a), t0.m);
      cert.expected = invariant_factors_from(cert.exp_divisors);
      break;
    case SpecialTime::Kind::HyperbolicLog:
      cert.exp_divisors = exp_hyperbolic(elementary_divisors(a), t0.m);
      cert.expected = invariant_factors_from(cert.exp_divisors);
      break;
    case SpecialTime::Kind::Rational: {
      if (!is_nilpotent(a)) unsupported("exp(tA) at a rational time is only exact for nilpotent A");
      const RatMat ex = exp_nilpotent(RatMat(t0.t * a));
      cert.expected = invariant_factors(ex);
      cert.exp_divisors = elementary_divisors(ex);
      break;
    }
  }
  cert.conjugate = cert.expected == cert.witness;
  return cert;
}

// ---------------------------------------------------------------------------

std::string AbelianizationResult::str() const {
  std::string out = "Z^" + std::to_string(free_rank);
  // Group equal torsion entries: (Z_2)^3
  for (size_t i = 0; i < torsion.size();) {
    size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    out += " + ";
    const std::string z = "Z_" + torsion[i].str();
    out += j - i == 1 ? z : "(" + z + ")^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

AbelianizationResult abelianization(const RatMat& e) {
  require(e.rows() == e.cols(), ErrorKind::InvalidInput, "abelianization: E must be square");
  require(is_integer_matrix(e), ErrorKind::InvalidInput, "abelianization: E must be an integer matrix");
  const RatMat m = identity(e.rows()) - e;
  AbelianizationResult r;
  r.free_rank = 1;
  for (const Int& d : smith_normal_form(m).diagonal()) {
    if (d == 0) ++r.free_rank;
    else if (d > 1) r.torsion.push_back(d);
  }
  return r;
}

std::optional<Int> holonomy_order(const RatMat& e) {
  require(e.rows() == e.cols(), ErrorKind::InvalidInput, "holonomy_order: E must be square");
  const Index d = e.rows();
  if (d == 0) return Int(1);
  RatPoly rest = min_poly(e);
  // A finite-order matrix has squarefree minimal polynomial made of
  // cyclotomic factors Φ_j with φ(j) <= d, which forces j <= 2 d^2.
  Int order = 1;
  auto totient = [](unsigned j) {
    unsigned r = j;
    for (unsigned p = 2; p * p <= j; ++p)
      if (j % p == 0) {
        while (j % p == 0) j /= p;
        r -= r / p;
      }
    if (j > 1) r -= r / j;
    return r;
  };
  for (unsigned j = 1; j <= static_cast<unsigned>(2 * d * d + 2) && rest.degree() > 0; ++j) {
    if (static_cast<int>(totient(j)) > rest.degree()) continue;
    const RatPoly phi = cyclotomic(j);
    if (!phi.divides(rest)) continue;
    rest = rest / phi;
    if (phi.divides(rest)) return std::nullopt;  // repeated factor: not semisimple
    order = mp::lcm(order, Int(j));
  }
  if (rest.degree() > 0) return std::nullopt;
  return order;
}

// ---------------------------------------------------------------------------

RatMat flat_hk_matrix() {
  return direct_sum({zeros(3, 3), rat_matrix({{0, -1}, {1, 0}}), rat_matrix({{0, 1}, {-1, 0}})});
}

namespace {

struct CensusRow {
  const char* name;
  int m;
  RatMat E;
  long holonomy;
  AbelianizationResult h1;
};

AbelianizationResult z4_plus(long p, size_t count) {
  AbelianizationResult r;
  r.free_rank = 4;
  r.torsion.assign(count, Int(p));
  return r;
}

std::vector<CensusRow> census_rows() {
  const RatMat s2 = rat_matrix({{1, 0}, {1, -1}});
  const RatMat rot = rat_matrix({{0, -1}, {1, 0}}), rot_inv = rat_matrix({{0, 1}, {-1, 0}});
  const RatMat e42 = rat_matrix({{0, 0, 0, 0, -1, 0},
                                 {0, 0, 0, 0, 0, -1},
                                 {0, 1, 0, 0, 0, 1},
                                 {-1, 0, 0, 0, -1, 0},
                                 {0, 0, 0, 1, 1, 0},
                                 {0, 0, -1, 0, 0, 1}});
  AbelianizationResult torus;
  torus.free_rank = 8;
  return {
      {"M1", 1, identity(7), 1, torus},
      {"M2,0", 2, direct_sum({identity(3), RatMat(-identity(4))}), 2, z4_plus(2, 4)},
      {"M2,1", 2, direct_sum({s2, RatMat(-identity(3)), identity(2)}), 2, z4_plus(2, 3)},
      {"M2,2", 2, direct_sum({s2, s2, RatMat(-identity(2)), identity(1)}), 2, z4_plus(2, 2)},
      {"M2,3", 2, direct_sum({s2, s2, s2, RatMat(-identity(1))}), 2, z4_plus(2, 1)},
      {"M3,0", 3, direct_sum({identity(3), rat_matrix({{0, -1}, {1, -1}}), rat_matrix({{0, 1}, {-1, -1}})}), 3,
       z4_plus(3, 2)},
      {"M3,1", 3,
       direct_sum({identity(2), rat_matrix({{-1, -1}, {1, 0}}), rat_matrix({{0, 0, 1}, {-1, 0, 0}, {0, -1, 0}})}), 3,
       z4_plus(3, 1)},
      {"M3,2", 3,
       direct_sum({identity(1), rat_matrix({{0, -1, 0}, {0, 0, 1}, {-1, 0, 0}}),
                   rat_matrix({{0, 1, 0}, {0, 0, -1}, {-1, 0, 0}})}),
       3, z4_plus(3, 0)},
      {"M4,0", 4, direct_sum({identity(3), rot, rot_inv}), 4, z4_plus(2, 2)},
      {"M4,1", 4, direct_sum({identity(2), rot_inv, rat_matrix({{1, 0, 0}, {-1, 0, 1}, {0, -1, 0}})}), 4,
       z4_plus(2, 1)},
      {"M4,2", 4, direct_sum({identity(1), e42}), 4, z4_plus(2, 0)},
      {"M6", 6, direct_sum({identity(3), rat_matrix({{0, -1}, {1, 1}}), rat_matrix({{0, 1}, {-1, 1}})}), 6,
       z4_plus(6, 0)},
  };
}

void census_check(bool ok, const std::string& name, const std::string& what) {
  require(ok, ErrorKind::CensusFailure, name + ": " + what);
}

}  // namespace

std::vector<FlatHKRecord> flat_hk_census() {
  const RatMat a = flat_hk_matrix();
  std::vector<FlatHKRecord> out;
  for (const auto& row : census_rows()) {
    FlatHKRecord r;
    r.name = row.name;
    r.m = row.m;
    r.E = row.E;
    r.certificate = verify_lattice_witness(a, SpecialTime::two_pi_over(row.m), row.E);
    census_check(r.certificate.conjugate, r.name, "E is not conjugate to exp(2pi/" + std::to_string(row.m) + " A)");
    const auto hol = holonomy_order(row.E);
    census_check(hol.has_value(), r.name, "E has infinite order");
    r.holonomy = *hol;
    census_check(r.holonomy == row.holonomy, r.name,
                 "holonomy " + r.holonomy.str() + ", expected " + std::to_string(row.holonomy));
    r.h1 = abelianization(row.E);
    census_check(r.h1 == row.h1, r.name, "H1 = " + r.h1.str() + ", expected " + row.h1.str());
    out.push_back(std::move(r));
  }
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      census_check(out[i].holonomy != out[j].holonomy || !(out[i].h1 == out[j].h1), out[i].name,
                   "indistinguishable from " + out[j].name);
  return out;
}

// ---------------------------------------------------------------------------

RatMat g3_matrix() {
  RatMat a = zeros(7, 7);
  a(4, 0) = a(5, 1) = a(6, 2) = 1;
  return a;
}

LatticeData g3_lattice(long k) {
  require(k >= 1, ErrorKind::InvalidInput, "g3_lattice: k must be positive");
  LatticeData out;
  out.E = exp_nilpotent(RatMat(Rat(k) * g3_matrix()));
  out.h1 = abelianization(out.E);
  return out;
}

AlmostAbelianSpec diagonal_family_spec(int n) {
  require(n >= 1, ErrorKind::InvalidInput, "diagonal family needs n >= 1");
  AlmostAbelianSpec s = AlmostAbelianSpec::zero(2 * n + 1);
  for (Index i = 0; i < 2 * n; ++i) s.X(i, i) = i % 2 == 0 ? 1 : -1;
  return s;
}

LatticeData diagonal_family_lattice(int n, long m) {
  require(n >= 1 && m >= 3, ErrorKind::InvalidInput, "diagonal family lattice needs n >= 1 and m >= 3");
  std::vector<RatMat> blocks{identity(3)};
  const RatMat c = rat_matrix({{0, -1}, {1, Rat(m)}});
  for (int i = 0; i < 4 * n; ++i) blocks.push_back(c);
  LatticeData out;
  out.E = direct_sum(blocks);
  const auto cert = verify_lattice_witness(diagonal_family_spec(n).A(), SpecialTime::hyperbolic_log(m), out.E);
  require(cert.conjugate, ErrorKind::CensusFailure, "diagonal family: E_m is not conjugate to exp(t_m A)");
  out.h1 = abelianization(out.E);
  return out;
}

std::vector<std::pair<int, int>> nonexistence_exponent_check(int kmax, int jmax) {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k <= kmax; ++k)
    for (int j = 0; j <= jmax; ++j)
      if (k + j > 0 && 4 * k == 3 * j) out.emplace_back(k, j);
  return out;
}

}  // namespace hcaa
