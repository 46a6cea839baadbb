#pragma once

// Hand-rolled random generators for the property tests. Every suite seeds its
// own engine so failures are reproducible.

#include <random>

#include "hcaa/liealg.hpp"
#include "hcaa/rational.hpp"

namespace hcaa::testing {

using Rng = std::mt19937_64;

inline Rat random_fraction(Rng& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo * max_den, hi * max_den);
  std::uniform_int_distribution<int> den(1, max_den);
  const int d = den(rng);
  Rat q(num(rng), d);
  if (q < lo) q = lo;
  if (q > hi) q = hi;
  return q;
}

inline RatMat random_int_matrix(Rng& rng, Index r, Index c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatMat m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline RatMat random_rat_matrix(Rng& rng, Index r, Index c, int lo, int hi, int max_den) {
  RatMat m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = random_fraction(rng, lo, hi, max_den);
  return m;
}

// Unit lower triangular times unit upper triangular: always invertible.
inline RatMat random_invertible(Rng& rng, Index n, int lo = -2, int hi = 2) {
  RatMat l = identity(n), u = identity(n);
  std::uniform_int_distribution<int> d(lo, hi);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < i; ++j) {
      l(i, j) = d(rng);
      u(j, i) = d(rng);
    }
  return l * u;
}

// Integer-entry spec with n in [1, max_n]; entries in [lo, hi].
inline AlmostAbelianSpec random_spec(Rng& rng, int max_n = 3, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dn(1, max_n), d(lo, hi);
  AlmostAbelianSpec s = AlmostAbelianSpec::zero(dn(rng));
  s.mu = d(rng);
  const Index k = s.n - 1;
  for (Index i = 0; i < 4 * k; ++i) s.v0(i) = d(rng);
  s.X = random_int_matrix(rng, k, k, lo, hi);
  s.Y = random_int_matrix(rng, k, k, lo, hi);
  s.Z = random_int_matrix(rng, k, k, lo, hi);
  s.W = random_int_matrix(rng, k, k, lo, hi);
  return s;
}

// Same shape with rational entries of denominator at most max_den.
inline AlmostAbelianSpec random_rational_spec(Rng& rng, int max_n = 3, int lo = -3, int hi = 3, int max_den = 4) {
  std::uniform_int_distribution<int> dn(1, max_n);
  AlmostAbelianSpec s = AlmostAbelianSpec::zero(dn(rng));
  s.mu = random_fraction(rng, lo, hi, max_den);
  const Index k = s.n - 1;
  for (Index i = 0; i < 4 * k; ++i) s.v0(i) = random_fraction(rng, lo, hi, max_den);
  s.X = random_rat_matrix(rng, k, k, lo, hi, max_den);
  s.Y = random_rat_matrix(rng, k, k, lo, hi, max_den);
  s.Z = random_rat_matrix(rng, k, k, lo, hi, max_den);
  s.W = random_rat_matrix(rng, k, k, lo, hi, max_den);
  return s;
}

}  // namespace hcaa::testing
