#include "hcaa/normal_forms.hpp"

#include <random>

namespace hcaa {

namespace {

// Minimal dense grid so the Euclidean Smith reduction can run over any
// Euclidean ring, including polynomials (which have no Eigen NumTraits).
template <typename R>
struct Grid {
  Index rows = 0, cols = 0;
  std::vector<R> data;
  Grid(Index r, Index c, const R& fill) : rows(r), cols(c), data(static_cast<size_t>(r * c), fill) {}
  R& operator()(Index i, Index j) { return data[static_cast<size_t>(i * cols + j)]; }
  const R& operator()(Index i, Index j) const { return data[static_cast<size_t>(i * cols + j)]; }
  void swap_rows(Index a, Index b) {
    for (Index j = 0; j < cols; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(Index a, Index b) {
    for (Index i = 0; i < rows; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row_dst += f * row_src
  void add_row(Index dst, Index src, const R& f) {
    for (Index j = 0; j < cols; ++j) (*this)(dst, j) = (*this)(dst, j) + f * (*this)(src, j);
  }
  void add_col(Index dst, Index src, const R& f) {
    for (Index i = 0; i < rows; ++i) (*this)(i, dst) = (*this)(i, dst) + f * (*this)(i, src);
  }
  void scale_row(Index r, const R& f) {
    for (Index j = 0; j < cols; ++j) (*this)(r, j) = f * (*this)(r, j);
  }
};

template <typename R>
Grid<R> grid_identity(Index n, const R& zero, const R& one) {
  Grid<R> g(n, n, zero);
  for (Index i = 0; i < n; ++i) g(i, i) = one;
  return g;
}

struct IntRing {
  using T = Int;
  static T zero() { return 0; }
  static T one() { return 1; }
  static bool is_zero(const T& a) { return a == 0; }
  static Int norm(const T& a) { return mp::abs(a); }
  static T quo(const T& a, const T& b) { return a / b; }
  static bool divides(const T& d, const T& a) { return a % d == 0; }
  // Multiplier turning a into its normal (non-negative) associate.
  static T unit_fix(const T& a) { return a < 0 ? T(-1) : T(1); }
};

struct PolyRing {
  using T = RatPoly;
  static T zero() { return {}; }
  static T one() { return T::constant(1); }
  static bool is_zero(const T& a) { return a.is_zero(); }
  static int norm(const T& a) { return a.degree(); }
  static T quo(const T& a, const T& b) { return a / b; }
  static bool divides(const T& d, const T& a) { return d.divides(a); }
  static T unit_fix(const T& a) { return T::constant(Rat(1) / a.leading()); }
};

// Euclidean Smith reduction in place; U, V track row and column operations
// when non-null so that U * M0 * V = M at the end.
template <typename Ring>
void smith_reduce(Grid<typename Ring::T>& m, Grid<typename Ring::T>* u, Grid<typename Ring::T>* v) {
  using T = typename Ring::T;
  const Index r = m.rows, c = m.cols;
  auto row_op = [&](Index dst, Index src, const T& f) {
    m.add_row(dst, src, f);
    if (u) u->add_row(dst, src, f);
  };
  auto col_op = [&](Index dst, Index src, const T& f) {
    m.add_col(dst, src, f);
    if (v) v->add_col(dst, src, f);
  };
  for (Index t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      Index pi = -1, pj = -1;
      for (Index i = t; i < r; ++i) {
        for (Index j = t; j < c; ++j) {
          if (Ring::is_zero(m(i, j))) continue;
          if (pi < 0 || Ring::norm(m(i, j)) < Ring::norm(m(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) return;
      if (pi != t) {
        m.swap_rows(pi, t);
        if (u) u->swap_rows(pi, t);
      }
      if (pj != t) {
        m.swap_cols(pj, t);
        if (v) v->swap_cols(pj, t);
      }
      bool dirty = false;
      for (Index i = t + 1; i < r; ++i) {
        if (Ring::is_zero(m(i, t))) continue;
        row_op(i, t, Ring::zero() - Ring::quo(m(i, t), m(t, t)));
        dirty = dirty || !Ring::is_zero(m(i, t));
      }
      for (Index j = t + 1; j < c; ++j) {
        if (Ring::is_zero(m(t, j))) continue;
        col_op(j, t, Ring::zero() - Ring::quo(m(t, j), m(t, t)));
        dirty = dirty || !Ring::is_zero(m(t, j));
      }
      if (dirty) continue;
      Index bad = -1;
      for (Index i = t + 1; i < r && bad < 0; ++i)
        for (Index j = t + 1; j < c; ++j)
          if (!Ring::divides(m(t, t), m(i, j))) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_op(t, bad, Ring::one());
    }
    const T f = Ring::unit_fix(m(t, t));
    m.scale_row(t, f);
    if (u) u->scale_row(t, f);
  }
}

RatMat to_rat(const Grid<Int>& g) {
  RatMat out(g.rows, g.cols);
  for (Index i = 0; i < g.rows; ++i)
    for (Index j = 0; j < g.cols; ++j) out(i, j) = Rat(g(i, j));
  return out;
}

void require_square(const RatMat& m, const char* what) {
  require(m.rows() == m.cols(), ErrorKind::InvalidInput, std::string(what) + ": matrix not square");
}

std::vector<Int> divisors(Int n) {
  n = mp::abs(n);
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Scales p to a primitive integer polynomial with positive leading coefficient.
RatPoly primitive_part(const RatPoly& p) {
  Int l = 1;
  for (const auto& a : p.coeffs()) l = mp::lcm(l, Int(mp::denominator(a)));
  std::vector<Rat> c;
  Int g = 0;
  for (const auto& a : p.coeffs()) {
    c.push_back(a * l);
    g = mp::gcd(g, Int(mp::numerator(c.back())));
  }
  if (p.leading() < 0) g = -g;
  for (auto& a : c) a /= g;
  return RatPoly(std::move(c));
}

// Largest Int whose divisors we are prepared to enumerate by trial division.
const Int kDivisorLimit = Int(1) << 40;

}  // namespace

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> out;
  for (Index i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(mp::numerator(D(i, i)));
  return out;
}

SmithForm smith_normal_form(const RatMat& input) {
  const Index r = input.rows(), c = input.cols();
  Grid<Int> m(r, c, Int(0));
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = to_integer(input(i, j));
  Grid<Int> u = grid_identity<Int>(r, 0, 1);
  Grid<Int> v = grid_identity<Int>(c, 0, 1);
  smith_reduce<IntRing>(m, &u, &v);
  return {to_rat(u), to_rat(m), to_rat(v)};
}

RatPoly char_poly(const RatMat& input) {
  require_square(input, "char_poly");
  const Index n = input.rows();
  RatMat h = input;
  // Similarity reduction to upper Hessenberg form.
  for (Index j = 0; j + 2 < n; ++j) {
    Index piv = -1;
    for (Index i = j + 1; i < n; ++i)
      if (h(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      h.row(piv).swap(h.row(j + 1));
      h.col(piv).swap(h.col(j + 1));
    }
    for (Index k = j + 2; k < n; ++k) {
      if (h(k, j) == 0) continue;
      const Rat f = h(k, j) / h(j + 1, j);
      h.row(k) -= f * h.row(j + 1);
      h.col(j + 1) += f * h.col(k);
    }
  }
  std::vector<RatPoly> p{RatPoly::constant(1)};
  for (Index m = 1; m <= n; ++m) {
    RatPoly next = RatPoly::linear(h(m - 1, m - 1)) * p[static_cast<size_t>(m - 1)];
    Rat sub = 1;
    for (Index i = m - 1; i >= 1; --i) {
      sub *= h(i, i - 1);
      if (sub == 0) break;
      next -= (h(i - 1, m - 1) * sub) * p[static_cast<size_t>(i - 1)];
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

RatPoly min_poly(const RatMat& m) {
  require_square(m, "min_poly");
  const Index n = m.rows();
  RatMat krylov(n * n, n + 1);
  RatMat pw = identity(n);
  for (Index k = 0; k <= n; ++k) {
    krylov.col(k) = pw.reshaped();
    const RatMat prefix = krylov.leftCols(k + 1);
    const RatMat ker = kernel(prefix);
    if (ker.cols() > 0) {
      std::vector<Rat> c(static_cast<size_t>(k + 1));
      for (Index i = 0; i <= k; ++i) c[static_cast<size_t>(i)] = ker(i, 0);
      return RatPoly(std::move(c)).monic();
    }
    pw = pw * m;
  }
  throw Error(ErrorKind::InvalidInput, "min_poly: no dependency found");
}

std::vector<RatPoly> invariant_factors(const RatMat& m) {
  require_square(m, "invariant_factors");
  const Index n = m.rows();
  Grid<RatPoly> g(n, n, RatPoly{});
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = RatPoly::constant(-m(i, j));
  for (Index i = 0; i < n; ++i) g(i, i) = RatPoly{-m(i, i), Rat(1)};
  smith_reduce<PolyRing>(g, nullptr, nullptr);
  std::vector<RatPoly> out;
  for (Index i = 0; i < n; ++i)
    if (g(i, i).degree() > 0) out.push_back(g(i, i).monic());
  return out;
}

bool conjugate_over_field(const RatMat& a, const RatMat& b) {
  require_square(a, "conjugate_over_field");
  require_square(b, "conjugate_over_field");
  require(a.rows() == b.rows(), ErrorKind::InvalidInput, "conjugate_over_field: size mismatch");
  if (char_poly(a) != char_poly(b)) return false;
  return invariant_factors(a) == invariant_factors(b);
}

std::optional<RatMat> find_conjugator(const RatMat& a, const RatMat& b) {
  if (!conjugate_over_field(a, b)) return std::nullopt;
  const Index n = a.rows();
  // A P - P B = 0 as a linear system in vec(P) (column-major).
  RatMat sys = RatMat::Zero(n * n, n * n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      const Index row = j * n + i;
      for (Index k = 0; k < n; ++k) {
        sys(row, j * n + k) += a(i, k);
        sys(row, k * n + i) -= b(k, j);
      }
    }
  const RatMat ker = kernel(sys);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int attempt = 0; attempt < 200; ++attempt) {
    RatVec p = RatVec::Zero(n * n);
    for (Index k = 0; k < ker.cols(); ++k) {
      const int w = attempt == 0 ? 1 : coef(rng);
      if (w != 0) p += Rat(w) * ker.col(k);
    }
    RatMat pm = p.reshaped(n, n);
    if (determinant(pm) != 0) return pm;
  }
  return std::nullopt;
}

bool is_nilpotent(const RatMat& m) {
  require_square(m, "is_nilpotent");
  return is_zero(power(m, static_cast<unsigned>(m.rows())));
}

RatMat exp_nilpotent(const RatMat& n) {
  require_square(n, "exp_nilpotent");
  require(is_nilpotent(n), ErrorKind::NotNilpotent, "exp_nilpotent: matrix is not nilpotent");
  RatMat term = identity(n.rows());
  RatMat sum = term;
  for (Index j = 1; j <= n.rows(); ++j) {
    term = term * n / Rat(j);
    if (is_zero(term)) break;
    sum += term;
  }
  return sum;
}

RatPoly cyclotomic(unsigned m) {
  require(m >= 1, ErrorKind::InvalidInput, "cyclotomic: m must be positive");
  RatPoly p = RatPoly::monomial(1, static_cast<int>(m)) - RatPoly::constant(1);
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) p = p / cyclotomic(d);
  return p;
}

LowDegreeFactorization factor_low_degree(const RatPoly& input) {
  require(!input.is_zero(), ErrorKind::InvalidInput, "factor_low_degree: zero polynomial");
  LowDegreeFactorization out;
  out.unit = input.leading();
  RatPoly p = input.monic();
  auto add = [&](const RatPoly& f) {
    for (auto& [g, mult] : out.factors)
      if (g == f) {
        ++mult;
        return;
      }
    out.factors.emplace_back(f, 1);
  };
  // Strip the factor x first so the constant term is non-zero.
  while (p.degree() > 0 && p.coeff(0) == 0) {
    add(RatPoly::x());
    p = p / RatPoly::x();
  }
  auto try_divide = [&](const RatPoly& f) {
    bool hit = false;
    while (p.degree() >= f.degree() && f.divides(p)) {
      add(f);
      p = p / f;
      hit = true;
    }
    return hit;
  };
  auto too_big = [](const Int& x) { return mp::abs(x) > kDivisorLimit; };

  if (p.degree() >= 1) {
    const RatPoly z = primitive_part(p);
    const Int a0 = mp::numerator(z.coeff(0));
    const Int an = mp::numerator(z.leading());
    if (!too_big(a0) && !too_big(an)) {
      for (const Int& num : divisors(a0))
        for (const Int& den : divisors(an))
          for (int sign : {1, -1}) {
            if (p.degree() < 1) break;
            try_divide(RatPoly::linear(Rat(num * sign, den)));
          }
    }
  }
  if (p.degree() >= 4 || p.degree() == 2) {
    // Integer quadratic factors a x^2 + b x + c of the primitive part: a | an,
    // c | a0 and (a + b + c) | p(1); p(1) and p(-1) are non-zero here.
    bool progress = true;
    while (progress && p.degree() >= 2) {
      progress = false;
      const RatPoly z = primitive_part(p);
      const Int a0 = mp::numerator(z.coeff(0));
      const Int an = mp::numerator(z.leading());
      const Rat z1 = z(Rat(1)), zm1 = z(Rat(-1));
      if (z1 == 0 || zm1 == 0) break;
      const Int p1 = mp::numerator(z1), pm1 = mp::numerator(zm1);
      if (too_big(a0) || too_big(an) || too_big(p1) || too_big(pm1)) break;
      const auto da = divisors(an), dc = divisors(a0), d1 = divisors(p1);
      for (const Int& a : da) {
        for (const Int& c0 : dc) {
          for (int cs : {1, -1}) {
            const Int c = c0 * cs;
            for (const Int& s0 : d1) {
              for (int ss : {1, -1}) {
                const Int b = s0 * ss - a - c;
                const Int at_m1 = a - b + c;
                if (at_m1 == 0 || pm1 % at_m1 != 0) continue;
                const RatPoly f = RatPoly{Rat(c), Rat(b), Rat(a)}.monic();
                if (try_divide(f)) {
                  progress = true;
                  goto next_round;
                }
              }
            }
          }
        }
      }
    next_round:;
    }
  }
  if (p.degree() > 0) {
    if (p.degree() <= 2) add(p);
    else out.unresolved.emplace_back(p, 1);
  }
  return out;
}

}  // namespace hcaa
