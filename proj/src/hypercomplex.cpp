#include "hcaa/hypercomplex.hpp"

namespace hcaa {

RatVec nijenhuis(const LieAlgebra& l, const RatMat& j, const RatVec& x, const RatVec& y) {
  require(j.rows() == l.dim() && j.cols() == l.dim() && x.size() == l.dim() && y.size() == l.dim(),
          ErrorKind::InvalidInput, "nijenhuis: dimension mismatch");
  const RatVec jx = j * x, jy = j * y;
  return l.bracket(x, y) + j * (l.bracket(jx, y) + l.bracket(x, jy)) - l.bracket(jx, jy);
}

bool integrable(const LieAlgebra& l, const RatMat& j) {
  const Index n = l.dim();
  if (mul(j, j) != RatMat(-identity(n))) return false;
  // N_J(x, y) is bilinear, so the basis images of J suffice.
  std::vector<RatMat> adj;
  for (Index i = 0; i < n; ++i) adj.push_back(l.ad_of(j.col(i)));
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b) {
      const RatVec v = l.ad(a).col(b) + mul(j, RatVec(adj[static_cast<size_t>(a)].col(b) - adj[static_cast<size_t>(b)].col(a))) -
                       mul(adj[static_cast<size_t>(a)], RatVec(j.col(b)));
      if (!is_zero(v)) return false;
    }
  return true;
}

HypercomplexReport verify_hypercomplex(const LieAlgebra& l, const HypercomplexTriple& t) {
  HypercomplexReport r;
  const Index n = l.dim();
  require(t.J1.rows() == n && t.J2.rows() == n && t.J3.rows() == n, ErrorKind::InvalidInput,
          "triple does not act on the algebra");
  const RatMat minus = -identity(n);
  r.squares = mul(t.J1, t.J1) == minus && mul(t.J2, t.J2) == minus && mul(t.J3, t.J3) == minus;
  r.quaternion_relations = mul(t.J1, t.J2) == t.J3 && mul(t.J2, t.J1) == RatMat(-t.J3);
  for (int a = 1; a <= 3; ++a) r.integrable[static_cast<size_t>(a - 1)] = integrable(l, t[a]);
  return r;
}

RatMat sphere_structure(const HypercomplexTriple& t, const RatVec& y) {
  require(y.size() == 3, ErrorKind::InvalidInput, "sphere point must have three coordinates");
  require(y.squaredNorm() == 1, ErrorKind::InvalidInput, "sphere point is not on the unit sphere");
  return y(0) * t.J1 + y(1) * t.J2 + y(2) * t.J3;
}

namespace {

void consistency(bool ok, const std::string& what) {
  require(ok, ErrorKind::InconsistentDecomposition, what);
}

}  // namespace

DecompositionReport decompose(const LieAlgebra& l, const HypercomplexTriple& t, const RatMat& u_basis) {
  const Index d = l.dim();
  require(d % 4 == 0 && d >= 4, ErrorKind::InvalidInput, "decompose: dimension must be a positive multiple of 4");
  require(u_basis.rows() == d && u_basis.cols() == d - 1 && rank(u_basis) == d - 1, ErrorKind::InvalidInput,
          "decompose: u must be a hyperplane");
  for (Index i = 0; i < d - 1; ++i) {
    const RatMat adu = l.ad_of(u_basis.col(i));
    require(is_zero(RatMat(adu * u_basis)), ErrorKind::InvalidInput, "decompose: u is not abelian");
    for (Index j = 0; j < d; ++j)
      require(in_span(u_basis, RatVec(adu.col(j))), ErrorKind::InvalidInput, "decompose: u is not an ideal");
  }
  require(verify_hypercomplex(l, t).passed(), ErrorKind::NotHypercomplex, "decompose: triple is not hypercomplex");

  const RatVec normal = kernel(RatMat(u_basis.transpose())).col(0);
  RatMat rows3(3, d);
  for (int a = 1; a <= 3; ++a) rows3.row(a - 1) = normal.transpose() * t[a];

  // e0 must leave u while every J_alpha e0 stays in u.
  RatVec e0 = normal;
  if (!is_zero(RatVec(rows3 * normal))) {
    const RatMat cand = kernel(rows3);
    Index pick = -1;
    for (Index c = 0; c < cand.cols() && pick < 0; ++c)
      if (normal.dot(cand.col(c)) != 0) pick = c;
    consistency(pick >= 0, "no e0 outside u with J_alpha e0 in u");
    e0 = cand.col(pick);
  }

  RatMat rows4(4, d);
  rows4.row(0) = normal.transpose();
  rows4.bottomRows(3) = rows3;
  const RatMat h = kernel(rows4);
  const Index hd = h.cols();
  consistency(hd == d - 4, "h = u ∩ J1u ∩ J2u ∩ J3u does not have codimension 4");
  for (int a = 1; a <= 3; ++a)
    for (Index c = 0; c < hd; ++c)
      consistency(in_span(h, RatVec(t[a] * h.col(c))), "h is not J-invariant");

  // Quaternionic basis f_j, J1 f_j, J2 f_j, J3 f_j of h.
  const Index k = hd / 4;
  std::vector<RatVec> fs;
  RatMat span(d, 0);
  for (Index c = 0; c < hd && static_cast<Index>(fs.size()) < k; ++c) {
    const RatVec f = h.col(c);
    if (span.cols() > 0 && in_span(span, f)) continue;
    fs.push_back(f);
    RatMat grown(d, span.cols() + 4);
    grown << span, f, t.J1 * f, t.J2 * f, t.J3 * f;
    span = grown;
  }
  consistency(static_cast<Index>(fs.size()) == k && rank(span) == hd, "could not build a quaternionic basis of h");
  RatMat hb(d, hd);
  for (int a = 0; a < 4; ++a)
    for (Index j = 0; j < k; ++j)
      hb.col(a * k + j) = a == 0 ? fs[static_cast<size_t>(j)] : RatVec(t[a] * fs[static_cast<size_t>(j)]);

  DecompositionReport r;
  r.q_basis.resize(d, 4);
  r.q_basis << e0, t.J1 * e0, t.J2 * e0, t.J3 * e0;
  r.h_basis = hb;
  RatMat p(d, d);
  p << r.q_basis, hb;
  const auto pinv = inverse(p);
  consistency(pinv.has_value(), "q and h are not complementary");
  const RatMat ad0 = *pinv * l.ad_of(e0) * p;

  r.mu = ad0(1, 1);
  for (int a = 1; a <= 3; ++a) {
    for (Index i = 0; i < 4; ++i)
      consistency(ad0(i, a) == (i == a ? r.mu : Rat(0)), "(i) fails: [e0, e_alpha] is not mu e_alpha + v_alpha");
    r.v[static_cast<size_t>(a)] = ad0.block(4, a, hd, 1);
  }
  const auto hq = quaternionic_triple(k);
  r.v[0] = -(hq.J1 * r.v[1]);
  for (int a = 1; a <= 3; ++a)
    consistency(r.v[static_cast<size_t>(a)] == hq[a] * r.v[0], "(ii) fails: v_alpha != J_alpha v0");
  consistency(is_zero(ad0.block(0, 4, 4, hd)), "(iii) fails: h is not an ideal");
  r.B = ad0.block(4, 4, hd, hd);
  for (int a = 1; a <= 3; ++a)
    consistency(is_zero(commutator(r.B, hq[a])), "(iii) fails: B does not commute with J_alpha");

  AlmostAbelianSpec s = AlmostAbelianSpec::zero(static_cast<int>(k + 1));
  s.mu = r.mu;
  s.v0 = r.v[0];
  s.X = r.B.block(0, 0, k, k);
  s.Y = r.B.block(k, 0, k, k);
  s.Z = r.B.block(2 * k, 0, k, k);
  s.W = r.B.block(3 * k, 0, k, k);
  consistency(s.B() == r.B, "B is not in quaternionic block form");
  r.spec = s;
  return r;
}

std::optional<NormalizedFrame> normalize_v(const AlmostAbelianSpec& spec) {
  spec.validate();
  const Index hd = spec.h_dim();
  const auto hq = quaternionic_triple(spec.n - 1);
  const auto x = solve(RatMat(spec.B() - spec.mu * identity(hd)), spec.v(1));
  if (!x) return std::nullopt;
  NormalizedFrame out;
  out.spec = spec;
  out.spec.v0 = RatVec::Zero(hd);
  out.x1 = *x;
  auto embed = [&](Index slot, const RatVec& hv) {
    RatVec e = RatVec::Zero(spec.dim());
    if (slot >= 0) e(slot) = 1;
    e.tail(hd) += hv;
    return e;
  };
  out.frame.resize(spec.dim(), 4);
  out.frame << embed(0, hq.J1 * *x), embed(1, -*x), embed(2, -(hq.J3 * *x)), embed(3, hq.J2 * *x);
  return out;
}

CliffordReport clifford_verify(const std::vector<RatMat>& gens) {
  require(!gens.empty(), ErrorKind::InvalidInput, "clifford_verify: no generators");
  CliffordReport r;
  r.order = static_cast<Index>(gens.size());
  const Index n = gens.front().rows();
  r.squares = true;
  r.anticommute = true;
  for (size_t i = 0; i < gens.size(); ++i) {
    require(gens[i].rows() == n && gens[i].cols() == n, ErrorKind::InvalidInput, "clifford_verify: size mismatch");
    r.squares = r.squares && gens[i] * gens[i] == RatMat(-identity(n));
    for (size_t j = i + 1; j < gens.size(); ++j)
      r.anticommute = r.anticommute && is_zero(anticommutator(gens[i], gens[j]));
  }
  // Ordered products over subsets span the generated algebra once the
  // relations above hold.
  const Index count = Index(1) << r.order;
  RatMat words(n * n, count);
  for (Index mask = 0; mask < count; ++mask) {
    RatMat w = identity(n);
    for (Index g = 0; g < r.order; ++g)
      if (mask & (Index(1) << g)) w = w * gens[static_cast<size_t>(g)];
    words.col(mask) = w.reshaped();
  }
  r.span_dim = rank(words);
  return r;
}

}  // namespace hcaa
