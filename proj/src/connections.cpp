#include "hcaa/connections.hpp"

#include "hcaa/hypercomplex.hpp"
#include "hcaa/linalg.hpp"
#include "hcaa/normal_forms.hpp"

namespace hcaa {

void Metric::validate() const {
  require(gram.rows() == gram.cols() && gram.rows() > 0, ErrorKind::InvalidMetric, "metric must be square");
  require(gram == gram.transpose(), ErrorKind::InvalidMetric, "metric is not symmetric");
  for (Index k = 1; k <= gram.rows(); ++k)
    require(determinant(RatMat(gram.topLeftCorner(k, k))) > 0, ErrorKind::InvalidMetric,
            "metric is not positive definite");
}

RatMat Connection::along(const RatVec& x) const {
  require(x.size() == dim(), ErrorKind::InvalidInput, "Connection::along: dimension mismatch");
  RatMat out = zeros(dim(), dim());
  for (Index i = 0; i < dim(); ++i)
    if (x(i) != 0) out += x(i) * gamma[static_cast<size_t>(i)];
  return out;
}

Connection obata_cyclic(const LieAlgebra& l, const HypercomplexTriple& t, int alpha) {
  require(alpha >= 1 && alpha <= 3, ErrorKind::InvalidInput, "obata_cyclic: alpha must be 1, 2 or 3");
  require(verify_hypercomplex(l, t).passed(), ErrorKind::NotHypercomplex, "obata: triple is not hypercomplex");
  const RatMat& ja = t[alpha];
  const RatMat& jb = t[alpha % 3 + 1];
  const RatMat& jc = t[(alpha + 1) % 3 + 1];
  Connection c;
  for (Index i = 0; i < l.dim(); ++i) {
    const RatMat& adx = l.ad(i);
    const RatMat adjx = l.ad_of(ja.col(i));
    // ½([x,·] + Ja[Ja x,·] - Jb[x, Jb ·] + Jc[Ja x, Jb ·])
    c.gamma.push_back(RatMat(adx + mul(ja, adjx) - mul(jb, mul(adx, jb)) + mul(jc, mul(adjx, jb))) / Rat(2));
  }
  return c;
}

Connection obata(const LieAlgebra& l, const HypercomplexTriple& t) { return obata_cyclic(l, t, 1); }

std::vector<RatMat> torsion(const Connection& c, const LieAlgebra& l) {
  require(c.dim() == l.dim(), ErrorKind::InvalidInput, "torsion: dimension mismatch");
  const Index n = l.dim();
  std::vector<RatMat> out;
  for (Index i = 0; i < n; ++i) {
    RatMat t(n, n);
    for (Index j = 0; j < n; ++j) t.col(j) = c[i].col(j) - c[j].col(i) - l.ad(i).col(j);
    out.push_back(std::move(t));
  }
  return out;
}

bool torsion_free(const Connection& c, const LieAlgebra& l) {
  for (const RatMat& t : torsion(c, l))
    if (!is_zero(t)) return false;
  return true;
}

CurvatureReport curvature(const Connection& c, const LieAlgebra& l) {
  require(c.dim() == l.dim(), ErrorKind::InvalidInput, "curvature: dimension mismatch");
  const Index n = l.dim();
  CurvatureReport r;
  r.dim = n;
  r.R.assign(static_cast<size_t>(n * n), zeros(n, n));
  r.flat = true;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      RatMat m = commutator(c[i], c[j]);
      for (Index k = 0; k < n; ++k)
        if (l.ad(i)(k, j) != 0) m -= l.ad(i)(k, j) * c[k];
      r.flat = r.flat && is_zero(m);
      r.R[static_cast<size_t>(j * n + i)] = -m;
      r.R[static_cast<size_t>(i * n + j)] = std::move(m);
    }
  r.ricci = zeros(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index z = 0; z < n; ++z) r.ricci(a, b) += r(z, a)(z, b);
  return r;
}

bool is_parallel(const Connection& c, const RatMat& m) {
  for (const RatMat& g : c.gamma)
    if (!is_zero(commutator(g, m))) return false;
  return true;
}

bool is_metric(const Connection& c, const Metric& g) {
  for (const RatMat& m : c.gamma)
    if (!is_zero(RatMat(mul(RatMat(m.transpose()), g.gram) + mul(g.gram, m)))) return false;
  return true;
}

Connection levi_civita(const LieAlgebra& l, const Metric& g) {
  g.validate();
  const Index n = l.dim();
  require(g.dim() == n, ErrorKind::InvalidMetric, "metric has the wrong size");
  // C(i, j, k) = g([e_i, e_j], e_k)
  std::vector<RatMat> cg;
  for (Index i = 0; i < n; ++i) cg.push_back(mul(g.gram, l.ad(i)).transpose());  // (j, k)
  auto C = [&](Index i, Index j, Index k) { return cg[static_cast<size_t>(i)](j, k); };
  const RatMat ginv = *inverse(g.gram);
  Connection out;
  for (Index i = 0; i < n; ++i) {
    // Koszul: 2 g(∇_i e_j, e_k) = C(i,j,k) - C(j,k,i) + C(k,i,j)
    RatMat low(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) low(k, j) = (C(i, j, k) - C(j, k, i) + C(k, i, j)) / 2;
    out.gamma.push_back(mul(ginv, low));
  }
  return out;
}

RatMat kahler_form(const RatMat& j, const Metric& g) { return j.transpose() * g.gram; }

namespace {

// ω as an exterior 2-form, then dω as a dense three-form.
ThreeForm d_two_form(const LieAlgebra& l, const RatMat& omega) {
  return ThreeForm::from_exterior(l.dim(), exterior_derivative(l, 2, two_form_to_exterior(omega)));
}

// f(Jx, Jy, Jz)
ThreeForm pull_back(const ThreeForm& f, const RatMat& j) {
  const Index n = f.dim();
  ThreeForm tmp1(n), tmp2(n), out(n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        Rat s = 0;
        for (Index p = 0; p < n; ++p)
          if (j(p, a) != 0) s += j(p, a) * f(p, b, c);
        tmp1(a, b, c) = s;
      }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        Rat s = 0;
        for (Index q = 0; q < n; ++q)
          if (j(q, b) != 0) s += j(q, b) * tmp1(a, q, c);
        tmp2(a, b, c) = s;
      }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        Rat s = 0;
        for (Index r = 0; r < n; ++r)
          if (j(r, c) != 0) s += j(r, c) * tmp2(a, b, r);
        out(a, b, c) = s;
      }
  return out;
}

bool hermitian(const RatMat& j, const Metric& g) { return mul(mul(RatMat(j.transpose()), g.gram), j) == g.gram; }

}  // namespace

BismutData bismut(const LieAlgebra& l, const RatMat& j, const Metric& g) {
  g.validate();
  const Index n = l.dim();
  require(g.dim() == n && j.rows() == n && j.cols() == n, ErrorKind::InvalidInput, "bismut: dimension mismatch");
  require(hermitian(j, g), ErrorKind::NotHermitian, "bismut: g is not J-Hermitian");
  BismutData out;
  out.c = pull_back(d_two_form(l, kahler_form(j, g)), j);
  const Connection lc = levi_civita(l, g);
  const RatMat ginv = *inverse(g.gram);
  for (Index i = 0; i < n; ++i) {
    RatMat low(n, n);
    for (Index jj = 0; jj < n; ++jj)
      for (Index k = 0; k < n; ++k) low(k, jj) = out.c(i, jj, k) / 2;
    out.connection.gamma.push_back(lc[i] + mul(ginv, low));
  }
  return out;
}

RatMat ricci_operator(const Connection& c, const Metric& g, const LieAlgebra& l) {
  g.validate();
  const RatMat ric = curvature(c, l).ricci;
  return *inverse(g.gram) * ric.transpose();
}

HKTReport hkt_check(const LieAlgebra& l, const HypercomplexTriple& t, const Metric& g) {
  g.validate();
  const Index n = l.dim();
  for (int a = 1; a <= 3; ++a)
    require(hermitian(t[a], g), ErrorKind::NotHyperhermitian, "hkt_check: metric is not hyperhermitian");
  // B_a(x, y, z) = g([J_a x, J_a y], z); ad matrices of the J_a images.
  std::array<std::vector<RatMat>, 3> adj;
  for (int a = 1; a <= 3; ++a)
    for (Index i = 0; i < n; ++i) adj[static_cast<size_t>(a - 1)].push_back(l.ad_of(t[a].col(i)));
  auto S = [&](int a, Index x, Index y, Index z) {
    const auto& ad = adj[static_cast<size_t>(a - 1)];
    const RatMat& j = t[a];
    auto term = [&](Index p, Index q, Index r) {
      return g(mul(ad[static_cast<size_t>(p)], RatVec(j.col(q))), unit_vector(n, r));
    };
    return term(x, y, z) + term(y, z, x) + term(z, x, y);
  };
  HKTReport r;
  // Each S_a is alternating, so increasing triples suffice.
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y)
      for (Index z = y + 1; z < n; ++z) {
        const Rat s1 = S(1, x, y, z);
        if (s1 != S(2, x, y, z) || s1 != S(3, x, y, z)) {
          r.violation = std::array<Index, 3>{x, y, z};
          return r;
        }
      }
  r.hkt = true;
  return r;
}

bool hyperkahler_check(const LieAlgebra& l, const HypercomplexTriple& t, const Metric& g) {
  g.validate();
  for (int a = 1; a <= 3; ++a) {
    if (!hermitian(t[a], g)) return false;
    if (!is_zero(exterior_derivative(l, 2, two_form_to_exterior(kahler_form(t[a], g))))) return false;
  }
  return true;
}

bool strong_hkt(const LieAlgebra& l, const ThreeForm& c) {
  require(c.dim() == l.dim(), ErrorKind::InvalidInput, "strong_hkt: dimension mismatch");
  return is_zero(exterior_derivative(l, 3, c.to_exterior()));
}

CompletenessReport obata_completeness(const LieAlgebra& l, const HypercomplexTriple& t) {
  const Connection c = obata(l, t);
  const Index n = l.dim();
  CompletenessReport r;
  r.complete = true;
  r.basis_nilpotent = true;
  for (Index i = 0; i < n; ++i) {
    RatMat rho(n, n);
    for (Index j = 0; j < n; ++j) rho.col(j) = c[j].col(i);
    r.traces.push_back(rho.trace());
    r.complete = r.complete && r.traces.back() == 0;
    r.basis_nilpotent = r.basis_nilpotent && is_nilpotent(rho);
  }
  return r;
}

bool geodesically_complete_obata(const AlmostAbelianSpec& spec) {
  const auto [l, t] = build_hypercomplex_aa(spec);
  return obata_completeness(l, t).complete;
}

}  // namespace hcaa
