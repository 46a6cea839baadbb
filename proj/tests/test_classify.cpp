#include <doctest.h>

#include "generators.hpp"
#include "hcaa/classify.hpp"
#include "hcaa/hypercomplex.hpp"
#include "hcaa/lattices.hpp"
#include "hcaa/linalg.hpp"

using namespace hcaa;
using hcaa::testing::Rng;

namespace {

// e0..e3 = 0..3, f0..f3 = 4..7
RatVec bracket(const LieAlgebra& l, Index i, Index j) { return l.ad(i).col(j); }

RatVec combo(std::initializer_list<std::pair<Index, Rat>> terms) {
  RatVec v = RatVec::Zero(8);
  for (const auto& [i, c] : terms) v(i) += c;
  return v;
}

std::vector<FamilyTag> sweep() {
  std::vector<FamilyTag> out{FamilyTag{}, FamilyTag::g1(), FamilyTag::g3(), FamilyTag::g4(), FamilyTag::g5()};
  const std::vector<Rat> lambdas{Rat(-3, 4), Rat(-1, 2), 0, 1, 2};
  const std::vector<Rat> ss{Rat(1, 2), 1, 2};
  for (const Rat& l : lambdas) out.push_back(FamilyTag::g2(l));
  for (const Rat& s : ss) out.push_back(FamilyTag::g6(s));
  for (const Rat& l : lambdas)
    for (const Rat& s : ss) out.push_back(FamilyTag::g7(l, s));
  return out;
}

// (y, z, w) with y^2 + z^2 + w^2 a perfect square
const std::vector<std::array<int, 3>> kQuadruples{{1, 2, 2}, {2, 3, 6}, {0, 3, 4}, {1, 4, 8}, {2, 6, 9}, {0, 0, 1}};

AlmostAbelianSpec random_rational_s_spec(Rng& rng) {
  std::uniform_int_distribution<int> d(-3, 3), pick(0, static_cast<int>(kQuadruples.size()) - 1), coin(0, 3);
  AlmostAbelianSpec s = AlmostAbelianSpec::zero(2);
  s.mu = coin(rng) == 0 ? 0 : d(rng);
  for (Index i = 0; i < 4; ++i) s.v0(i) = coin(rng) == 0 ? 0 : d(rng);
  s.X(0, 0) = coin(rng) == 0 ? s.mu : Rat(d(rng));
  if (coin(rng) != 0) {
    auto q = kQuadruples[static_cast<size_t>(pick(rng))];
    std::shuffle(q.begin(), q.end(), rng);
    const int scale = 1 + coin(rng);
    s.Y(0, 0) = scale * q[0] * (coin(rng) % 2 ? 1 : -1);
    s.Z(0, 0) = scale * q[1] * (coin(rng) % 2 ? 1 : -1);
    s.W(0, 0) = scale * q[2] * (coin(rng) % 2 ? 1 : -1);
  }
  return s;
}

RatMat quaternionic_average(const HypercomplexTriple& t, const RatMat& m) {
  return (m - t.J1 * m * t.J1 - t.J2 * m * t.J2 - t.J3 * m * t.J3) / Rat(4);
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("family bracket lists") {
  {
    const LieAlgebra l = family_algebra(FamilyTag::g5()).first;
    CHECK(bracket(l, 0, 4) == combo({{5, 1}}));
    CHECK(bracket(l, 0, 5) == combo({{4, -1}}));
    CHECK(bracket(l, 0, 6) == combo({{7, -1}}));
    CHECK(bracket(l, 0, 7) == combo({{6, 1}}));
    for (Index a = 1; a <= 3; ++a) CHECK(is_zero(bracket(l, 0, a)));
  }
  {
    const LieAlgebra l = family_algebra(FamilyTag::g2(Rat(-3, 4))).first;
    for (Index a = 1; a <= 3; ++a) CHECK(bracket(l, 0, a) == combo({{a, 1}}));
    for (Index i = 4; i < 8; ++i) CHECK(bracket(l, 0, i) == combo({{i, Rat(-3, 4)}}));
    CHECK(unimodular(l));
  }
  {
    const LieAlgebra l = family_algebra(FamilyTag::g4()).first;
    for (Index a = 1; a <= 3; ++a) CHECK(bracket(l, 0, a) == combo({{a, 1}, {4 + a, 1}}));
    for (Index i = 4; i < 8; ++i) CHECK(bracket(l, 0, i) == combo({{i, 1}}));
  }
  {
    const LieAlgebra l = family_algebra(FamilyTag::g3()).first;
    for (Index a = 1; a <= 3; ++a) CHECK(bracket(l, 0, a) == combo({{4 + a, 1}}));
    for (Index i = 4; i < 8; ++i) CHECK(is_zero(bracket(l, 0, i)));
    const auto nd = nilpotency_data(l);
    CHECK(nd.nilpotent);
    CHECK(nd.step == 2);
  }
  {
    const Rat s = Rat(3, 2), lam = Rat(-1, 2);
    const LieAlgebra l6 = family_algebra(FamilyTag::g6(s)).first;
    CHECK(bracket(l6, 0, 4) == combo({{4, 1}, {5, s}}));
    CHECK(bracket(l6, 0, 5) == combo({{4, -s}, {5, 1}}));
    CHECK(bracket(l6, 0, 6) == combo({{6, 1}, {7, -s}}));
    CHECK(bracket(l6, 0, 7) == combo({{6, s}, {7, 1}}));
    const LieAlgebra l7 = family_algebra(FamilyTag::g7(lam, s)).first;
    for (Index a = 1; a <= 3; ++a) CHECK(bracket(l7, 0, a) == combo({{a, 1}}));
    CHECK(bracket(l7, 0, 4) == combo({{4, lam}, {5, s}}));
    CHECK(bracket(l7, 0, 7) == combo({{6, s}, {7, lam}}));
  }
  for (const auto& tag : sweep()) {
    const auto [l, t] = family_algebra(tag);
    CHECK(verify_hypercomplex(l, t).passed());
  }
}

TEST_CASE("round trip through the representatives") {
  for (const auto& tag : sweep()) CHECK(classify8(family_spec(tag)) == tag);
}

TEST_CASE("families are pairwise non-isomorphic") {
  const auto tags = sweep();
  for (size_t i = 0; i < tags.size(); ++i)
    for (size_t j = 0; j < tags.size(); ++j) {
      const bool iso = isomorphic_aa(family_spec(tags[i]).A(), family_spec(tags[j]).A()).has_value();
      CHECK_MESSAGE(iso == (i == j), tags[i].str(), " vs ", tags[j].str());
    }
}

TEST_CASE("random specs land on an isomorphic representative") {
  Rng rng(8080);
  for (int trial = 0; trial < 200; ++trial) {
    const auto spec = random_rational_s_spec(rng);
    const FamilyTag tag = classify8(spec);
    if (tag.has_s()) CHECK(tag.s().has_value());
    CHECK_MESSAGE(isomorphic_aa(spec.A(), family_spec(tag).A()).has_value(), tag.str());
    CHECK(is_unimodular_family(tag) == unimodular(build_hypercomplex_aa(spec).first));
  }
}

TEST_CASE("irrational s is kept exactly") {
  AlmostAbelianSpec s = AlmostAbelianSpec::zero(2);
  s.X(0, 0) = 1;
  s.Y(0, 0) = 1;
  s.Z(0, 0) = 1;
  const FamilyTag tag = classify8(s);
  CHECK(tag.family == Family::G6);
  CHECK(tag.s2 == 2);
  CHECK(tag.str() == "g6(sqrt(2))");
  CHECK_THROWS_AS(family_spec(tag), Error);
}

TEST_CASE("scaling normalizations") {
  AlmostAbelianSpec s = AlmostAbelianSpec::zero(2);
  s.X(0, 0) = -2;
  s.Y(0, 0) = 3;
  CHECK(classify8(s) == FamilyTag::g6(Rat(3, 2)));  // orientation flipped to s > 0
  s.mu = -4;
  CHECK(classify8(s) == FamilyTag::g7(Rat(1, 2), Rat(3, 4)));
  AlmostAbelianSpec h = AlmostAbelianSpec::zero(2);
  h.mu = 3;
  h.X(0, 0) = 3;
  h.v0 = rat_vector({0, 1, 0, 0});
  CHECK(classify8(h) == FamilyTag::g4());
  h.v0.setZero();
  CHECK(classify8(h) == FamilyTag::g2(1));
  AlmostAbelianSpec a = AlmostAbelianSpec::zero(2);
  a.v0 = rat_vector({0, 0, 5, 0});
  CHECK(classify8(a) == FamilyTag::g3());
  a.X(0, 0) = 7;  // mu != lambda: v drops out
  CHECK(classify8(a) == FamilyTag::g1());
}

TEST_CASE("classification is invariant under quaternionic changes of basis") {
  Rng rng(9090);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const auto spec = random_rational_s_spec(rng);
    const auto [l, t] = build_hypercomplex_aa(spec);
    const RatMat g = quaternionic_average(t, hcaa::testing::random_int_matrix(rng, 8, 8, -2, 2));
    const auto ginv = inverse(g);
    if (!ginv) continue;
    ++checked;
    const auto r = decompose(change_basis(l, g), t, RatMat(*ginv * identity(8).rightCols(7)));
    CHECK(classify8(r.spec) == classify8(spec));
  }
  CHECK(checked > 40);
}

TEST_CASE("classification from a raw matrix") {
  CHECK(classify8_matrix(flat_hk_matrix()) == FamilyTag::g5());
  CHECK(classify8_matrix(g3_matrix()) == FamilyTag::g3());
  RatMat bad = flat_hk_matrix();
  bad(0, 0) = 1;  // mu_1 alone
  try {
    classify8_matrix(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidSpec);
  }
  CHECK_THROWS_AS(classify8(AlmostAbelianSpec::zero(3)), Error);
}

TEST_CASE("unimodular members") {
  const auto pats = unimodular_families();
  CHECK(pats.size() == 4);
  CHECK(is_unimodular_family(FamilyTag::g3()));
  CHECK(is_unimodular_family(FamilyTag::g7(Rat(-3, 4), 2)));
  for (const Rat& s : {Rat(1, 2), Rat(1), Rat(2)}) CHECK(!is_unimodular_family(FamilyTag::g6(s)));
  // Oracle: trace of ad over a wider sweep.
  for (const auto& tag : sweep()) CHECK(is_unimodular_family(tag) == unimodular(family_algebra(tag).first));
  for (int num = -8; num <= 8; ++num) {
    const Rat lam(num, 4);
    CHECK(is_unimodular_family(FamilyTag::g2(lam)) == unimodular(family_algebra(FamilyTag::g2(lam)).first));
    CHECK(is_unimodular_family(FamilyTag::g7(lam, 3)) == unimodular(family_algebra(FamilyTag::g7(lam, 3)).first));
  }
}

TEST_CASE("lattice admissibility") {
  CHECK(lattice_admissibility(FamilyTag::g3()).verdict == Admissibility::Admits);
  CHECK(lattice_admissibility(FamilyTag::g5()).verdict == Admissibility::Admits);
  CHECK(lattice_admissibility(FamilyTag::g7(Rat(-3, 4), 1)).verdict == Admissibility::Rejects);
  CHECK(lattice_admissibility(FamilyTag::g2(Rat(-3, 4))).verdict == Admissibility::Rejects);
  CHECK(lattice_admissibility(FamilyTag::g1()).verdict == Admissibility::Rejects);
  CHECK(lattice_admissibility(FamilyTag::g1()).reason == "not unimodular");
  for (const auto& tag : sweep()) {
    const auto v = lattice_admissibility(tag).verdict;
    const bool admits = tag.family == Family::G3 || tag.family == Family::G5 || tag.family == Family::Abelian;
    CHECK(v == (admits ? Admissibility::Admits : Admissibility::Rejects));
  }
}

}
