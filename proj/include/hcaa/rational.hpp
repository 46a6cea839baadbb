#pragma once

#include <cassert>

// Scalar types and dense matrix aliases. Everything in the library is exact:
// Int is an arbitrary-precision integer, Rat an arbitrary-precision rational
// kept in lowest terms with a positive denominator (GMP mpq semantics).

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hcaa/errors.hpp"

namespace hcaa {

namespace mp = boost::multiprecision;

using Int = mp::number<mp::gmp_int, mp::et_off>;
using Rat = mp::number<mp::gmp_rational, mp::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMat = Matrix<Rat>;
using RatVec = Vector<Rat>;
using IntMat = Matrix<Int>;

// ---------------------------------------------------------------------------
// Scalar helpers

inline bool is_integer(const Rat& q) { return mp::denominator(q) == 1; }

inline Int to_integer(const Rat& q) {
  require(is_integer(q), ErrorKind::InvalidInput, "non-integer entry " + q.str());
  return mp::numerator(q);
}

inline Rat abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Parses "p", "p/q", "-p/q" (surrounding blanks allowed).
Rat parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rat& q);

/// Exact k-th root of a rational if it exists (the non-negative one for even k).
bool rational_root(const Rat& value, unsigned k, Rat& root);

// ---------------------------------------------------------------------------
// Matrix construction helpers

inline RatMat rat_matrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  RatMat m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    require(static_cast<Index>(row.size()) == c, ErrorKind::InvalidInput, "ragged matrix literal");
    Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline RatVec rat_vector(std::initializer_list<Rat> xs) {
  RatVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

inline RatMat identity(Index n) { return RatMat::Identity(n, n); }
inline RatMat zeros(Index r, Index c) { return RatMat::Zero(r, c); }

inline RatVec unit_vector(Index n, Index i) {
  RatVec v = RatVec::Zero(n);
  v(i) = 1;
  return v;
}

/// Block-diagonal direct sum X ⊕ Y ⊕ ...
template <typename Scalar>
Matrix<Scalar> direct_sum(const std::vector<Matrix<Scalar>>& blocks) {
  Index n = 0, m = 0;
  for (const auto& b : blocks) {
    n += b.rows();
    m += b.cols();
  }
  Matrix<Scalar> out = Matrix<Scalar>::Zero(n, m);
  Index r = 0, c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

inline RatMat direct_sum(std::initializer_list<RatMat> blocks) {
  return direct_sum(std::vector<RatMat>(blocks));
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

template <typename Derived>
bool is_integer_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_integer(m(i, j))) return false;
  return true;
}

inline IntMat to_int_matrix(const RatMat& m) {
  IntMat out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = to_integer(m(i, j));
  return out;
}

inline RatMat to_rat_matrix(const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = Rat(m(i, j));
  return out;
}

/// Product that skips zero entries. The structure matrices here are mostly
/// zeros, and Eigen's dense kernel pays a GMP operation for every one of them.
inline RatMat mul(const RatMat& a, const RatMat& b) {
  assert(a.cols() == b.rows());
  RatMat out = zeros(a.rows(), b.cols());
  Rat t;
  for (Index j = 0; j < b.cols(); ++j)
    for (Index k = 0; k < a.cols(); ++k) {
      const Rat& bkj = b(k, j);
      if (bkj == 0) continue;
      for (Index i = 0; i < a.rows(); ++i) {
        const Rat& aik = a(i, k);
        if (aik == 0) continue;
        t = aik * bkj;
        out(i, j) += t;
      }
    }
  return out;
}

inline RatVec mul(const RatMat& a, const RatVec& x) {
  assert(a.cols() == x.size());
  RatVec out = RatVec::Zero(a.rows());
  for (Index k = 0; k < a.cols(); ++k) {
    if (x(k) == 0) continue;
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, k) != 0) out(i) += a(i, k) * x(k);
  }
  return out;
}

/// Commutator [X, Y] = XY - YX.
inline RatMat commutator(const RatMat& x, const RatMat& y) { return mul(x, y) - mul(y, x); }

/// Anticommutator XY + YX.
inline RatMat anticommutator(const RatMat& x, const RatMat& y) { return mul(x, y) + mul(y, x); }

inline RatMat power(const RatMat& m, unsigned k) {
  RatMat out = identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = mul(out, m);
  return out;
}

}  // namespace hcaa
