#pragma once

// Dense univariate polynomials, coefficients stored lowest degree first.
// Division and gcd require the coefficient type to be a field.

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hcaa/rational.hpp"

namespace hcaa {

template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& a) { return Polynomial(std::vector<Scalar>{a}); }
  static Polynomial x() { return Polynomial(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
  /// x - root
  static Polynomial linear(const Scalar& root) { return Polynomial(std::vector<Scalar>{-root, Scalar(1)}); }
  static Polynomial monomial(const Scalar& a, int degree) {
    std::vector<Scalar> c(static_cast<size_t>(degree) + 1, Scalar(0));
    c.back() = a;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const {
    return (k < 0 || k > degree()) ? Scalar(0) : c_[static_cast<size_t>(k)];
  }
  Scalar leading() const { return is_zero() ? Scalar(0) : c_.back(); }
  bool is_monic() const { return !is_zero() && c_.back() == 1; }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial out = *this;
    const Scalar inv = Scalar(1) / leading();
    for (auto& a : out.c_) a *= inv;
    return out;
  }

  Scalar operator()(const Scalar& t) const {
    Scalar acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  /// Horner evaluation at a square matrix.
  Matrix<Scalar> operator()(const Matrix<Scalar>& m) const {
    Matrix<Scalar> acc = Matrix<Scalar>::Zero(m.rows(), m.cols());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * m;
      for (Index i = 0; i < m.rows(); ++i) acc(i, i) += *it;
    }
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Scalar> d;
    for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<long>(k)));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial out = a;
    for (auto& x : out.c_) x = -x;
    return out;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
    Polynomial out = p;
    for (auto& x : out.c_) x *= s;
    out.trim();
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned k) const {
    Polynomial out = constant(Scalar(1));
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    require(!d.is_zero(), ErrorKind::InvalidInput, "polynomial division by zero");
    std::vector<Scalar> rem = c_;
    const int dd = d.degree();
    if (degree() < dd) return {Polynomial{}, *this};
    std::vector<Scalar> q(static_cast<size_t>(degree() - dd + 1), Scalar(0));
    const Scalar inv = Scalar(1) / d.leading();
    for (int k = degree(); k >= dd; --k) {
      const Scalar f = rem[static_cast<size_t>(k)] * inv;
      q[static_cast<size_t>(k - dd)] = f;
      if (f == 0) continue;
      for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k - dd + j)] -= f * d.c_[static_cast<size_t>(j)];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
  }
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
  bool divides(const Polynomial& other) const { return (other % *this).is_zero(); }

  std::string str(char var = 'x') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      Scalar a = c_[static_cast<size_t>(k)];
      if (a == 0) continue;
      const bool neg = a < 0;
      if (neg) a = -a;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      const bool unit = a == 1;
      if (k == 0 || !unit) os << to_string(Rat(a));
      if (k > 0) {
        if (!unit) os << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

using RatPoly = Polynomial<Rat>;

template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// True when every coefficient is an integer.
inline bool is_integral(const RatPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rat& a) { return is_integer(a); });
}

}  // namespace hcaa
