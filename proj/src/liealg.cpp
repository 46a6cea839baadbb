#include "hcaa/liealg.hpp"

#include "hcaa/normal_forms.hpp"

namespace hcaa {

LieAlgebra::LieAlgebra(std::vector<RatMat> ad) : ad_(std::move(ad)) {
  const Index n = dim();
  for (Index i = 0; i < n; ++i) {
    require(ad_[static_cast<size_t>(i)].rows() == n && ad_[static_cast<size_t>(i)].cols() == n,
            ErrorKind::InvalidInput, "adjoint matrix has the wrong size");
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        require(c(i, j, k) == -c(j, i, k), ErrorKind::InvalidInput,
                "bracket is not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

LieAlgebra LieAlgebra::abelian(Index dim) {
  return LieAlgebra(std::vector<RatMat>(static_cast<size_t>(dim), zeros(dim, dim)));
}

RatMat LieAlgebra::ad_of(const RatVec& x) const {
  require(x.size() == dim(), ErrorKind::InvalidInput, "ad_of: dimension mismatch");
  RatMat out = zeros(dim(), dim());
  for (Index i = 0; i < dim(); ++i)
    if (x(i) != 0) out += x(i) * ad(i);
  return out;
}

RatVec LieAlgebra::bracket(const RatVec& x, const RatVec& y) const { return mul(ad_of(x), y); }

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& l) {
  std::vector<JacobiViolation> out;
  const Index n = l.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const RatVec ij = l.ad(i).col(j);
      for (Index k = j + 1; k < n; ++k) {
        // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
        const RatVec v = -mul(l.ad(k), ij) - mul(l.ad(i), RatVec(l.ad(j).col(k))) - mul(l.ad(j), RatVec(l.ad(k).col(i)));
        if (!is_zero(v)) out.push_back({i, j, k, v});
      }
    }
  return out;
}

LieAlgebra build_almost_abelian(const RatMat& a) {
  require(a.rows() == a.cols(), ErrorKind::InvalidInput, "build_almost_abelian: A not square");
  const Index d = a.rows();
  std::vector<RatMat> ad(static_cast<size_t>(d + 1), zeros(d + 1, d + 1));
  ad[0].block(1, 1, d, d) = a;
  for (Index i = 1; i <= d; ++i) ad[static_cast<size_t>(i)].col(0) = -ad[0].col(i);
  return LieAlgebra(std::move(ad));
}

LieAlgebra change_basis(const LieAlgebra& l, const RatMat& p) {
  const auto pinv = inverse(p);
  require(pinv.has_value(), ErrorKind::InvalidInput, "change_basis: singular basis");
  std::vector<RatMat> ad;
  for (Index i = 0; i < l.dim(); ++i) ad.push_back(mul(*pinv, mul(l.ad_of(p.col(i)), p)));
  return LieAlgebra(std::move(ad));
}

bool unimodular(const LieAlgebra& l) {
  for (Index i = 0; i < l.dim(); ++i)
    if (l.ad(i).trace() != 0) return false;
  return true;
}

namespace {

// Column basis of [S, T] for subspaces given by column bases.
RatMat bracket_span(const LieAlgebra& l, const RatMat& s, const RatMat& t) {
  RatMat all(l.dim(), s.cols() * t.cols());
  Index c = 0;
  for (Index i = 0; i < s.cols(); ++i) {
    const RatMat ads = l.ad_of(s.col(i));
    for (Index j = 0; j < t.cols(); ++j) all.col(c++) = ads * t.col(j);
  }
  return column_basis(all);
}

}  // namespace

NilpotencyData nilpotency_data(const LieAlgebra& l) {
  NilpotencyData out;
  const RatMat full = identity(l.dim());
  RatMat term = full;
  out.lower_central_dims.push_back(l.dim());
  for (;;) {
    RatMat next = bracket_span(l, full, term);
    out.lower_central_dims.push_back(next.cols());
    if (next.cols() == 0) {
      out.nilpotent = true;
      out.step = static_cast<int>(out.lower_central_dims.size()) - 1;
      break;
    }
    if (next.cols() == term.cols()) break;
    term = next;
  }
  RatMat derived = full;
  while (derived.cols() > 0) {
    RatMat next = bracket_span(l, derived, derived);
    if (next.cols() == derived.cols()) break;
    derived = next;
  }
  out.solvable = derived.cols() == 0;
  return out;
}

std::optional<Rat> isomorphic_aa(const RatMat& a1, const RatMat& a2) {
  if (a1.rows() != a2.rows() || a1.rows() != a1.cols() || a2.rows() != a2.cols()) return std::nullopt;
  const Index n = a1.rows();
  const RatPoly p1 = char_poly(a1), p2 = char_poly(a2);
  // Codegree-k coefficient of char(c A) is c^k times that of char(A).
  auto codeg = [n](const RatPoly& p, Index k) { return p.coeff(static_cast<int>(n - k)); };
  std::vector<Rat> candidates;
  Index k0 = 0;
  for (Index k = 1; k <= n; ++k) {
    if (codeg(p1, k) != 0 || codeg(p2, k) != 0) {
      k0 = k;
      break;
    }
  }
  if (k0 == 0) {
    candidates.push_back(1);  // both nilpotent: scaling is invisible to the spectrum
  } else {
    if (codeg(p1, k0) == 0 || codeg(p2, k0) == 0) return std::nullopt;
    const Rat ratio = codeg(p2, k0) / codeg(p1, k0);
    Rat r;
    if (k0 % 2 == 1) {
      // Unique real root, carrying the sign of the ratio.
      if (!rational_root(abs(ratio), static_cast<unsigned>(k0), r)) return std::nullopt;
      candidates.push_back(ratio < 0 ? Rat(-r) : r);
    } else {
      if (!rational_root(ratio, static_cast<unsigned>(k0), r)) return std::nullopt;
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  }
  for (const Rat& c : candidates) {
    bool ok = true;
    Rat ck = 1;
    for (Index k = 1; k <= n && ok; ++k) {
      ck *= c;
      ok = ck * codeg(p1, k) == codeg(p2, k);
    }
    if (ok && conjugate_over_field(RatMat(c * a1), a2)) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

const RatMat& HypercomplexTriple::operator[](int alpha) const {
  switch (alpha) {
    case 1: return J1;
    case 2: return J2;
    case 3: return J3;
  }
  throw Error(ErrorKind::InvalidInput, "complex structure index must be 1, 2 or 3");
}

RatMat quaternionic_block(const RatMat& x, const RatMat& y, const RatMat& z, const RatMat& w) {
  const Index k = x.rows();
  RatMat b(4 * k, 4 * k);
  const RatMat blocks[4][4] = {{x, -y, -z, -w}, {y, x, w, -z}, {z, -w, x, y}, {w, z, -y, x}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b.block(i * k, j * k, k, k) = blocks[i][j];
  return b;
}

HypercomplexTriple quaternionic_triple(Index k) {
  // J_a maps the f-block to the J_a f-block; the rest follows from J1 J2 = J3.
  const RatMat i = identity(k), o = zeros(k, k);
  auto block = [&](std::initializer_list<std::initializer_list<int>> sign) {
    RatMat m(4 * k, 4 * k);
    int r = 0;
    for (const auto& row : sign) {
      int c = 0;
      for (int s : row) {
        m.block(r * k, c * k, k, k) = s == 0 ? o : RatMat(Rat(s) * i);
        ++c;
      }
      ++r;
    }
    return m;
  };
  return {block({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}),
          block({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}),
          block({{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}})};
}

AlmostAbelianSpec AlmostAbelianSpec::zero(int n) {
  require(n >= 1, ErrorKind::InvalidSpec, "quaternionic dimension must be at least 1");
  AlmostAbelianSpec s;
  s.n = n;
  s.v0 = RatVec::Zero(4 * (n - 1));
  s.X = s.Y = s.Z = s.W = zeros(n - 1, n - 1);
  return s;
}

void AlmostAbelianSpec::validate() const {
  require(n >= 1, ErrorKind::InvalidSpec, "quaternionic dimension must be at least 1");
  const Index k = n - 1;
  require(v0.size() == 4 * k, ErrorKind::InvalidSpec, "v0 must have length 4(n-1)");
  for (const RatMat* m : {&X, &Y, &Z, &W})
    require(m->rows() == k && m->cols() == k, ErrorKind::InvalidSpec, "X, Y, Z, W must be (n-1)x(n-1)");
}

RatMat AlmostAbelianSpec::B() const {
  validate();
  return quaternionic_block(X, Y, Z, W);
}

RatVec AlmostAbelianSpec::v(int alpha) const {
  validate();
  if (alpha == 0) return v0;
  return quaternionic_triple(n - 1)[alpha] * v0;
}

RatMat AlmostAbelianSpec::A() const {
  validate();
  const Index h = h_dim();
  RatMat a = zeros(3 + h, 3 + h);
  for (int alpha = 1; alpha <= 3; ++alpha) {
    a(alpha - 1, alpha - 1) = mu;
    a.block(3, alpha - 1, h, 1) = v(alpha);
  }
  a.block(3, 3, h, h) = B();
  return a;
}

HypercomplexTriple canonical_triple(int n) {
  require(n >= 1, ErrorKind::InvalidInput, "canonical_triple: n must be positive");
  const auto q = quaternionic_triple(1);
  const auto h = quaternionic_triple(n - 1);
  return {direct_sum({q.J1, h.J1}), direct_sum({q.J2, h.J2}), direct_sum({q.J3, h.J3})};
}

std::pair<LieAlgebra, HypercomplexTriple> build_hypercomplex_aa(const AlmostAbelianSpec& spec) {
  spec.validate();
  const RatMat b = spec.B();
  const auto h = quaternionic_triple(spec.n - 1);
  for (int alpha = 1; alpha <= 3; ++alpha)
    require(commutator(b, h[alpha]) == zeros(b.rows(), b.cols()), ErrorKind::InvalidSpec,
            "B does not commute with J" + std::to_string(alpha));
  return {build_almost_abelian(spec.A()), canonical_triple(spec.n)};
}

}  // namespace hcaa
