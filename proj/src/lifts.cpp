#include "hcaa/lifts.hpp"

#include <cstdlib>
#include <string>

namespace hcaa {

Index max_lift_dim() {
  if (const char* env = std::getenv("HCAA_MAX_DIM")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 256;
}

namespace {

RatMat minus_lift(const RatMat& j) { return direct_sum({j, RatMat(-j)}); }

RatMat swap_structure(Index n) {
  // K(x, v) = (v, -x)
  RatMat k = zeros(2 * n, 2 * n);
  k.topRightCorner(n, n) = identity(n);
  k.bottomLeftCorner(n, n) = -identity(n);
  return k;
}

LiftedAlgebra lift_step(const LieAlgebra& base, const LieAlgebra& l, const Connection& c,
                        const HypercomplexTriple& t, const std::vector<RatMat>& clifford, int level) {
  const Index n = l.dim();
  require(c.dim() == n && t.dim() == n, ErrorKind::InvalidInput, "tangent_lift: dimension mismatch");
  if (2 * n > max_lift_dim())
    throw Error(ErrorKind::DeskScaleExceeded,
                "lift of dimension " + std::to_string(2 * n) + " exceeds the limit " + std::to_string(max_lift_dim()));
  require(torsion_free(c, l), ErrorKind::LiftRequiresFlatTorsionFree, "connection has torsion");
  require(curvature(c, l).flat, ErrorKind::LiftRequiresFlatTorsionFree, "connection is not flat");
  for (int a = 1; a <= 3; ++a)
    require(is_parallel(c, t[a]), ErrorKind::InvalidInput, "structure J" + std::to_string(a) + " is not parallel");

  std::vector<RatMat> ad(static_cast<size_t>(2 * n), zeros(2 * n, 2 * n));
  for (Index i = 0; i < n; ++i) {
    RatMat& a = ad[static_cast<size_t>(i)];
    a.topLeftCorner(n, n) = l.ad(i);
    a.bottomRightCorner(n, n) = c[i];
    // [(0, e_i), (y, w)] = (0, -∇_y e_i)
    RatMat& b = ad[static_cast<size_t>(n + i)];
    for (Index j = 0; j < n; ++j) b.block(n, j, n, 1) = -c[j].col(i);
  }
  LiftedAlgebra out;
  out.level = level;
  out.base = base;
  out.total = LieAlgebra(std::move(ad));
  for (Index i = 0; i < n; ++i) out.connection.gamma.push_back(direct_sum({c[i], c[i]}));
  for (Index i = 0; i < n; ++i) out.connection.gamma.push_back(zeros(2 * n, 2 * n));
  const RatMat j1 = minus_lift(t.J1), j2 = minus_lift(t.J2);
  out.triple = {j1, j2, mul(j1, j2)};
  for (const RatMat& g : clifford) out.clifford.push_back(minus_lift(g));
  out.clifford.push_back(swap_structure(n));
  return out;
}

}  // namespace

LiftedAlgebra tangent_lift(const LieAlgebra& l, const Connection& c, const HypercomplexTriple& t) {
  return lift_step(l, l, c, t, {t.J1, t.J2}, 1);
}

std::vector<LiftedAlgebra> iterate_lift(const LieAlgebra& l, const Connection& c, const HypercomplexTriple& t,
                                        int levels) {
  require(levels >= 1, ErrorKind::InvalidInput, "iterate_lift: levels must be positive");
  const Index top = l.dim() << levels;
  if (levels > 30 || top > max_lift_dim())
    throw Error(ErrorKind::DeskScaleExceeded, "lift level " + std::to_string(levels) + " of a " +
                                                  std::to_string(l.dim()) + "-dimensional algebra exceeds the limit " +
                                                  std::to_string(max_lift_dim()));
  std::vector<LiftedAlgebra> out;
  out.push_back(tangent_lift(l, c, t));
  for (int k = 2; k <= levels; ++k) {
    const LiftedAlgebra& prev = out.back();
    out.push_back(lift_step(l, prev.total, prev.connection, prev.triple, prev.clifford, k));
  }
  return out;
}

RatMat expected_lift_ad(const AlmostAbelianSpec& spec, int level) {
  const RatMat a = spec.A();
  const Index d = a.rows();
  RatMat tilde = zeros(d + 1, d + 1);
  tilde(0, 0) = spec.mu;
  tilde.block(4, 0, spec.h_dim(), 1) = spec.v0;  // v0 lives in h, after e1, e2, e3
  tilde.bottomRightCorner(d, d) = a;
  std::vector<RatMat> blocks{zeros(1, 1), a};
  for (long k = 0; k < (1L << level) - 1; ++k) blocks.push_back(tilde);
  return direct_sum(blocks);
}

bool ad_matrix_check(const LiftedAlgebra& lift, const AlmostAbelianSpec& spec) {
  require(lift.base == build_almost_abelian(spec.A()), ErrorKind::InvalidInput,
          "ad_matrix_check: base is not the almost abelian algebra of the spec");
  return lift.total.ad(0) == expected_lift_ad(spec, lift.level);
}

TangentBundle tangent_bundle_algebra(const LieAlgebra& l, const std::optional<HypercomplexTriple>& t) {
  const Index n = l.dim();
  if (2 * n > max_lift_dim())
    throw Error(ErrorKind::DeskScaleExceeded, "tangent bundle of dimension " + std::to_string(2 * n) +
                                                  " exceeds the limit " + std::to_string(max_lift_dim()));
  std::vector<RatMat> ad(static_cast<size_t>(2 * n), zeros(2 * n, 2 * n));
  for (Index i = 0; i < n; ++i) {
    // [(e_i, 0), (y, w)] = ([e_i, y], [e_i, w]);  [(0, e_i), (y, w)] = (0, -[y, e_i]) = (0, [e_i, y])
    ad[static_cast<size_t>(i)] = direct_sum({l.ad(i), l.ad(i)});
    ad[static_cast<size_t>(n + i)].bottomLeftCorner(n, n) = l.ad(i);
  }
  TangentBundle out{LieAlgebra(std::move(ad)), std::nullopt};
  if (t) {
    require(t->dim() == n, ErrorKind::InvalidInput, "tangent_bundle_algebra: triple has the wrong size");
    out.triple = HypercomplexTriple{direct_sum({t->J1, t->J1}), direct_sum({t->J2, t->J2}),
                                    direct_sum({t->J3, t->J3})};
  }
  return out;
}

}  // namespace hcaa
