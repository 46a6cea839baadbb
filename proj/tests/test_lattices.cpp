#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "hcaa/lattices.hpp"
#include "hcaa/normal_forms.hpp"

using namespace hcaa;
using hcaa::testing::Rng;

namespace {

AbelianizationResult h1(Index free_rank, std::initializer_list<long> torsion) {
  AbelianizationResult r;
  r.free_rank = free_rank;
  for (long t : torsion) r.torsion.push_back(Int(t));
  return r;
}

// Order by brute force: smallest k <= limit with E^k = I.
std::optional<Int> order_by_powers(const RatMat& e, int limit) {
  RatMat p = e;
  for (int k = 1; k <= limit; ++k) {
    if (p == identity(e.rows())) return Int(k);
    p = mul(p, e);
  }
  return std::nullopt;
}

// |coker(M)| for a square integer matrix with nonzero determinant.
Int torsion_size(const AbelianizationResult& r) {
  Int s = 1;
  for (const Int& t : r.torsion) s *= t;
  return s;
}

}  // namespace

TEST_SUITE("lattices") {

TEST_CASE("special time parsing") {
  CHECK(SpecialTime::parse("2pi/3") == SpecialTime::two_pi_over(3));
  CHECK(SpecialTime::parse(" 2PI ") == SpecialTime::two_pi_over(1));
  CHECK(SpecialTime::parse("hyperlog/5") == SpecialTime::hyperbolic_log(5));
  CHECK(SpecialTime::parse("3/2") == SpecialTime::rational(Rat(3, 2)));
  CHECK(SpecialTime::two_pi_over(6).str() == "2pi/6");
  CHECK_THROWS_AS(SpecialTime::parse("2pi/x"), Error);
  CHECK_THROWS_AS(SpecialTime::parse("hyperlog/2"), Error);
}

TEST_CASE("elementary divisors regroup into invariant factors") {
  Rng rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    // Block diagonal with small integer blocks keeps the spectrum low-degree.
    std::vector<RatMat> blocks;
    const int nblocks = 1 + trial % 4;
    for (int b = 0; b < nblocks; ++b) blocks.push_back(hcaa::testing::random_int_matrix(rng, 1 + (trial + b) % 2, 1 + (trial + b) % 2, -2, 2));
    RatMat a = direct_sum(blocks);
    const RatMat p = hcaa::testing::random_invertible(rng, a.rows());
    a = mul(*inverse(p), mul(a, p));
    CHECK(invariant_factors_from(elementary_divisors(a)) == invariant_factors(a));
  }
}

TEST_CASE("witness for the flat hyperkahler matrix at 2pi/3") {
  const RatMat e30 = direct_sum({identity(3), rat_matrix({{0, -1}, {1, -1}}), rat_matrix({{0, 1}, {-1, -1}})});
  const auto cert = verify_lattice_witness(flat_hk_matrix(), SpecialTime::two_pi_over(3), e30);
  CHECK(cert.conjugate);
  // (x - 1)^3 (x^2 + x + 1)^2
  const RatPoly expect = RatPoly::linear(1).pow(3) * RatPoly({1, 1, 1}).pow(2);
  CHECK(cert.char_poly == expect);
  CHECK(cert.det == 1);
  // The same E is not a witness at another time.
  CHECK(!verify_lattice_witness(flat_hk_matrix(), SpecialTime::two_pi_over(4), e30).conjugate);
  CHECK(!verify_lattice_witness(flat_hk_matrix(), SpecialTime::two_pi_over(6), e30).conjugate);
}

TEST_CASE("unsupported spectra are reported, not approximated") {
  const RatMat e = identity(7);
  for (long m : {5, 7, 8, 10, 12}) {
    try {
      verify_lattice_witness(flat_hk_matrix(), SpecialTime::two_pi_over(m), e);
      CHECK(false);
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::UnsupportedSpectrum);
    }
  }
  // Real nonzero eigenvalues at a rotation time
  CHECK_THROWS_AS(verify_lattice_witness(rat_matrix({{1}}), SpecialTime::two_pi_over(2), rat_matrix({{1}})), Error);
  // Unpaired eigenvalue at a hyperbolic time
  CHECK_THROWS_AS(verify_lattice_witness(rat_matrix({{1, 0}, {0, 2}}), SpecialTime::hyperbolic_log(3), identity(2)),
                  Error);
  // Non-nilpotent at a rational time
  CHECK_THROWS_AS(verify_lattice_witness(rat_matrix({{1}}), SpecialTime::rational(1), rat_matrix({{1}})), Error);
  // Not in GL(d, Z)
  CHECK_THROWS_AS(verify_lattice_witness(zeros(2, 2), SpecialTime::rational(1), rat_matrix({{2, 0}, {0, 1}})), Error);
}

TEST_CASE("rotation times on random conjugates of rotation blocks") {
  // exp(2pi/m A) for A = s J (J the standard rotation) is a rotation by 2pi s/m.
  Rng rng(91);
  const RatMat j = rat_matrix({{0, -1}, {1, 0}});
  const std::map<int, RatMat> integer_rotation{
      {1, identity(2)},
      {2, RatMat(-identity(2))},
      {3, rat_matrix({{0, -1}, {1, -1}})},
      {4, rat_matrix({{0, -1}, {1, 0}})},
      {6, rat_matrix({{0, -1}, {1, 1}})}};
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> ds(1, 6);
    const int s = ds(rng);
    const int m = std::vector<int>{1, 2, 3, 4, 6}[static_cast<size_t>(trial % 5)];
    const RatMat p = hcaa::testing::random_invertible(rng, 2);
    const RatMat a = mul(*inverse(p), mul(RatMat(Rat(s) * j), p));
    // Reduced angle s/m decides the class.
    const Rat angle = Rat(s, m);
    const int q = static_cast<int>(to_integer(Rat(mp::denominator(angle))));
    const RatMat& witness = integer_rotation.at(q);
    CHECK(verify_lattice_witness(a, SpecialTime::two_pi_over(m), witness).conjugate);
  }
}

TEST_CASE("hyperbolic witness for the diagonal family") {
  const auto spec = diagonal_family_spec(1);
  CHECK(spec.dim() == 12);
  const RatMat e3 = direct_sum({identity(3), rat_matrix({{0, -1}, {1, 3}}), rat_matrix({{0, -1}, {1, 3}}),
                                rat_matrix({{0, -1}, {1, 3}}), rat_matrix({{0, -1}, {1, 3}})});
  const auto cert = verify_lattice_witness(spec.A(), SpecialTime::hyperbolic_log(3), e3);
  CHECK(cert.conjugate);
  // Eigenvalue 2 of A gives trace L_2 = m^2 - 2.
  const RatMat a2 = rat_matrix({{2, 0}, {0, -2}});
  CHECK(verify_lattice_witness(a2, SpecialTime::hyperbolic_log(3), rat_matrix({{0, -1}, {1, 7}})).conjugate);
  CHECK(!verify_lattice_witness(a2, SpecialTime::hyperbolic_log(3), rat_matrix({{0, -1}, {1, 3}})).conjugate);
}

TEST_CASE("rational times for nilpotent matrices") {
  const RatMat a = g3_matrix();
  for (long k = 1; k <= 5; ++k)
    CHECK(verify_lattice_witness(a, SpecialTime::rational(Rat(k)), g3_lattice(k).E).conjugate);
  // Over R every nonzero multiple of a nilpotent matrix is conjugate to it.
  CHECK(verify_lattice_witness(a, SpecialTime::rational(Rat(1, 3)), g3_lattice(1).E).conjugate);
  CHECK(!verify_lattice_witness(a, SpecialTime::rational(1), identity(7)).conjugate);
}

TEST_CASE("abelianization") {
  CHECK(abelianization(identity(5)) == h1(6, {}));
  CHECK(abelianization(direct_sum({identity(3), RatMat(-identity(4))})) == h1(4, {2, 2, 2, 2}));
  CHECK(abelianization(direct_sum({identity(3), RatMat(-identity(4))})).str() == "Z^4 + (Z_2)^4");
  CHECK(h1(4, {2, 6}).str() == "Z^4 + Z_2 + Z_6");
  CHECK_THROWS_AS(abelianization(rat_matrix({{Rat(1, 2)}})), Error);

  Rng rng(515);
  for (int trial = 0; trial < 150; ++trial) {
    const Index d = 1 + trial % 5;
    const RatMat e = hcaa::testing::random_int_matrix(rng, d, d, -3, 3);
    const auto r = abelianization(e);
    CHECK(r.free_rank + static_cast<Index>(r.torsion.size()) <= d + 1);
    for (size_t i = 0; i + 1 < r.torsion.size(); ++i) CHECK(r.torsion[i + 1] % r.torsion[i] == 0);
    // Oracle: |det(I - E)| is the order of the torsion when I - E is invertible.
    const Rat det = determinant(RatMat(identity(d) - e));
    if (det != 0) {
      CHECK(r.free_rank == 1);
      CHECK(torsion_size(r) == mp::abs(to_integer(det)));
    } else {
      CHECK(r.free_rank == 1 + d - rank(RatMat(identity(d) - e)));
    }
  }
}

TEST_CASE("holonomy orders") {
  CHECK(holonomy_order(identity(4)) == Int(1));
  CHECK(holonomy_order(RatMat(-identity(3))) == Int(2));
  CHECK(holonomy_order(direct_sum({identity(3), rat_matrix({{0, -1}, {1, 1}}), rat_matrix({{0, 1}, {-1, 1}})})) ==
        Int(6));
  CHECK(!holonomy_order(rat_matrix({{1, 1}, {0, 1}})).has_value());  // unipotent, infinite order
  CHECK(!holonomy_order(rat_matrix({{2, 1}, {1, 1}})).has_value());  // hyperbolic
  CHECK(holonomy_order(direct_sum({rat_matrix({{0, -1}, {1, -1}}), rat_matrix({{0, -1}, {1, 0}})})) == Int(12));

  // Oracle: brute-force powers on random signed permutation matrices.
  Rng rng(616);
  for (int trial = 0; trial < 100; ++trial) {
    const Index d = 1 + trial % 6;
    std::vector<Index> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    RatMat e = zeros(d, d);
    for (Index i = 0; i < d; ++i) e(perm[static_cast<size_t>(i)], i) = (rng() % 2) ? 1 : -1;
    const RatMat p = hcaa::testing::random_invertible(rng, d);
    const RatMat conj = mul(*inverse(p), mul(e, p));
    CHECK(holonomy_order(conj) == order_by_powers(e, 1000));
  }
}

TEST_CASE("flat hyperkahler census") {
  const auto records = flat_hk_census();
  REQUIRE(records.size() == 12);
  std::set<std::string> names;
  for (const auto& r : records) {
    names.insert(r.name);
    CHECK(r.certificate.conjugate);
    CHECK(r.certificate.det == 1);
    CHECK(order_by_powers(r.E, 12) == r.holonomy);
    CHECK(mp::abs(to_integer(r.certificate.char_poly.coeff(0))) == 1);
  }
  CHECK(names.size() == 12);
  auto find = [&](const std::string& n) {
    return *std::find_if(records.begin(), records.end(), [&](const auto& r) { return r.name == n; });
  };
  CHECK(find("M1").h1 == h1(8, {}));
  CHECK(find("M3,1").h1 == h1(4, {3}));
  CHECK(find("M4,0").h1 == h1(4, {2, 2}));
  CHECK(find("M4,2").holonomy == 4);
  CHECK(find("M6").holonomy == 6);
}

TEST_CASE("nilpotent lattice family") {
  std::set<std::string> seen;
  for (long k = 1; k <= 10; ++k) {
    const auto lat = g3_lattice(k);
    CHECK(is_integer_matrix(lat.E));
    CHECK(lat.E == RatMat(identity(7) + Rat(k) * g3_matrix()));
    if (k == 1) CHECK(lat.h1 == h1(5, {}));
    else CHECK(lat.h1 == h1(5, {k, k, k}));
    seen.insert(lat.h1.str());
  }
  CHECK(seen.size() == 10);
}

TEST_CASE("diagonal family lattices") {
  CHECK(diagonal_family_lattice(1, 3).h1 == h1(4, {}));
  CHECK(diagonal_family_lattice(1, 4).h1 == h1(4, {2, 2, 2, 2}));
  CHECK(diagonal_family_lattice(2, 5).h1 == h1(4, {3, 3, 3, 3, 3, 3, 3, 3}));
  for (int n = 1; n <= 2; ++n)
    for (long m = 3; m <= 8; ++m) {
      const auto lat = diagonal_family_lattice(n, m);
      CHECK(lat.E.rows() == 8 * n + 3);
      CHECK(!holonomy_order(lat.E).has_value());
      std::vector<long> t(static_cast<size_t>(4 * n), m - 2);
      AbelianizationResult expect;
      expect.free_rank = 4;
      if (m > 3)
        for (long x : t) expect.torsion.push_back(Int(x));
      CHECK(lat.h1 == expect);
    }
}

TEST_CASE("exponent arithmetic") {
  CHECK(nonexistence_exponent_check() == std::vector<std::pair<int, int>>{{3, 4}});
  CHECK(nonexistence_exponent_check(6, 8) == std::vector<std::pair<int, int>>{{3, 4}, {6, 8}});
  CHECK(nonexistence_exponent_check(2, 4).empty());
}

}
