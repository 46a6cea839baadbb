#include <doctest.h>

#include "generators.hpp"
#include "hcaa/hypercomplex.hpp"
#include "hcaa/linalg.hpp"
#include "hcaa/normal_forms.hpp"

using namespace hcaa;
using hcaa::testing::Rng;

namespace {

// Projection onto the commutant of the triple: average over the unit group {±1, ±J_a}.
RatMat quaternionic_average(const HypercomplexTriple& t, const RatMat& m) {
  return (m - t.J1 * m * t.J1 - t.J2 * m * t.J2 - t.J3 * m * t.J3) / Rat(4);
}

bool commutes_with(const HypercomplexTriple& t, const RatMat& p) {
  for (int a = 1; a <= 3; ++a)
    if (!is_zero(commutator(p, t[a]))) return false;
  return true;
}

RatMat standard_ideal(Index d) { return identity(d).rightCols(d - 1); }

}  // namespace

TEST_SUITE("hypercomplex") {

TEST_CASE("standard triples satisfy the quaternion relations") {
  for (Index k = 1; k <= 3; ++k) {
    const auto t = quaternionic_triple(k);
    const RatMat minus = -identity(4 * k);
    CHECK(t.J1 * t.J1 == minus);
    CHECK(t.J2 * t.J2 == minus);
    CHECK(t.J1 * t.J2 == t.J3);
    CHECK(t.J2 * t.J1 == RatMat(-t.J3));
  }
  // e_alpha = J_alpha e0 on the first block.
  const auto q = quaternionic_triple(1);
  for (int a = 1; a <= 3; ++a) CHECK(RatVec(q[a].col(0)) == unit_vector(4, a));
}

TEST_CASE("every block B commutes with the triple on h") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Index k = 1 + trial % 3;
    const RatMat b = quaternionic_block(hcaa::testing::random_int_matrix(rng, k, k, -3, 3),
                                        hcaa::testing::random_int_matrix(rng, k, k, -3, 3),
                                        hcaa::testing::random_int_matrix(rng, k, k, -3, 3),
                                        hcaa::testing::random_int_matrix(rng, k, k, -3, 3));
    CHECK(commutes_with(quaternionic_triple(k), b));
  }
}

TEST_CASE("block data always produces a hypercomplex Lie algebra") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto spec = hcaa::testing::random_spec(rng);
    const auto [l, t] = build_hypercomplex_aa(spec);
    CHECK(l.dim() == 4 * spec.n);
    CHECK(jacobi_check(l).empty());
    CHECK(verify_hypercomplex(l, t).passed());
  }
}

TEST_CASE("breaking the block shape breaks integrability") {
  AlmostAbelianSpec s = AlmostAbelianSpec::zero(2);
  s.mu = 1;
  RatMat a = s.A();
  a(1, 1) = 2;  // A acts on e1.., so this is mu_2
  const LieAlgebra l = build_almost_abelian(a);
  const auto r = verify_hypercomplex(l, canonical_triple(2));
  CHECK(r.squares);
  CHECK(r.quaternion_relations);
  // J2 only sees mu_1 and mu_3
  CHECK(!r.integrable[0]);
  CHECK(r.integrable[1]);
  CHECK(!r.integrable[2]);
  CHECK(!r.passed());

  RatMat a2 = s.A();
  a2(4, 1) = 1;  // v1 without the matching v2, v3
  CHECK(!verify_hypercomplex(build_almost_abelian(a2), canonical_triple(2)).passed());
}

TEST_CASE("four-dimensional solvable example") {
  AlmostAbelianSpec s = AlmostAbelianSpec::zero(1);
  s.mu = 1;
  const auto [l, t] = build_hypercomplex_aa(s);
  CHECK(l.ad(0) == direct_sum({zeros(1, 1), identity(3)}));
  CHECK(verify_hypercomplex(l, t).passed());
  const auto nd = nilpotency_data(l);
  CHECK(nd.solvable);
  CHECK(!nd.nilpotent);
}

TEST_CASE("rational sphere points give complex structures") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto [l, t] = build_hypercomplex_aa(hcaa::testing::random_spec(rng, 2));
    // Pythagorean points (3/5, 4/5, 0), (2/3, 2/3, 1/3), ...
    for (const RatVec& y : {rat_vector({Rat(3, 5), Rat(4, 5), 0}), rat_vector({Rat(2, 3), Rat(-2, 3), Rat(1, 3)}),
                            rat_vector({0, Rat(-12, 13), Rat(5, 13)})})
      CHECK(integrable(l, sphere_structure(t, y)));
  }
  CHECK_THROWS_AS(sphere_structure(canonical_triple(1), rat_vector({1, 1, 0})), Error);
}

TEST_CASE("decompose recovers the block data") {
  Rng rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    const auto spec = hcaa::testing::random_spec(rng);
    const auto [l, t] = build_hypercomplex_aa(spec);
    const auto r = decompose(l, t, standard_ideal(l.dim()));
    CHECK(r.mu == spec.mu);
    RatMat p(l.dim(), l.dim());
    p << r.q_basis, r.h_basis;
    CHECK(change_basis(l, p) == build_hypercomplex_aa(r.spec).first);
    CHECK(commutes_with(t, p));
  }
}

TEST_CASE("decompose is blind to quaternionic changes of basis") {
  Rng rng(4711);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto spec = hcaa::testing::random_spec(rng, 2);
    const auto [l, t] = build_hypercomplex_aa(spec);
    const RatMat g = quaternionic_average(t, hcaa::testing::random_int_matrix(rng, l.dim(), l.dim(), -2, 2));
    const auto ginv = inverse(g);
    if (!ginv) continue;
    ++checked;
    const LieAlgebra moved = change_basis(l, g);
    const RatMat u = *ginv * standard_ideal(l.dim());
    const auto r = decompose(moved, t, u);
    // e0 is only defined up to scale and a shift inside u
    CHECK(isomorphic_aa(r.spec.A(), spec.A()).has_value());
    RatMat p(l.dim(), l.dim());
    p << r.q_basis, r.h_basis;
    CHECK(change_basis(moved, p) == build_hypercomplex_aa(r.spec).first);
  }
  CHECK(checked > 30);
}

TEST_CASE("decompose rejects bad input") {
  AlmostAbelianSpec s = AlmostAbelianSpec::zero(2);
  s.mu = 1;
  const auto [l, t] = build_hypercomplex_aa(s);
  // Not an ideal containing the derived algebra: drop e1 instead of e0.
  RatMat u = identity(8);
  RatMat bad(8, 7);
  bad << u.col(0), u.rightCols(6);
  CHECK_THROWS_AS(decompose(l, t, bad), Error);
  HypercomplexTriple wrong = t;
  wrong.J3 = -t.J3;
  try {
    decompose(l, wrong, standard_ideal(8));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHypercomplex);
  }
}

TEST_CASE("normalize_v removes v when v1 is in the image of B - mu") {
  Rng rng(99);
  int normalized = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto spec = hcaa::testing::random_spec(rng);
    if (spec.n < 2) continue;
    const auto nf = normalize_v(spec);
    const RatMat shifted = spec.B() - spec.mu * identity(spec.h_dim());
    CHECK(nf.has_value() == solve(shifted, spec.v(1)).has_value());
    if (!nf) continue;
    ++normalized;
    const auto [l, t] = build_hypercomplex_aa(spec);
    RatMat p(l.dim(), l.dim());
    p << nf->frame, identity(l.dim()).rightCols(spec.h_dim());
    CHECK(commutes_with(t, p));
    CHECK(is_zero(nf->spec.v0));
    CHECK(change_basis(l, p) == build_hypercomplex_aa(nf->spec).first);
  }
  CHECK(normalized > 50);
  // g3: B = mu = 0 and v != 0, nothing to do
  AlmostAbelianSpec g3 = AlmostAbelianSpec::zero(2);
  g3.v0 = rat_vector({1, 0, 0, 0});
  CHECK(!normalize_v(g3).has_value());
}

TEST_CASE("Clifford systems") {
  const auto t = quaternionic_triple(1);
  const auto two = clifford_verify({t.J1, t.J2});
  CHECK(two.passed());
  CHECK(two.span_dim == 4);
  const auto three = clifford_verify({t.J1, t.J2, t.J3});
  CHECK(three.squares);
  CHECK(three.anticommute);
  CHECK(!three.passed());  // J1 J2 J3 = -1
  const RatMat e = rat_matrix({{0, -1}, {1, 0}});
  CHECK(clifford_verify({e}).passed());
  CHECK(!clifford_verify({identity(2)}).squares);
}

}
