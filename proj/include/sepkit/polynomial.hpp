#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sepkit/scalar.hpp"

namespace sepkit {

/// Dense univariate polynomial in t, constant term first. The coefficient
/// vector never carries trailing zeros, so the zero polynomial is empty.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients)
      : coeffs_(std::move(coefficients)) {
    trim();
  }
  Polynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }
  static Polynomial monomial(const Scalar& c, std::size_t exponent) {
    std::vector<Scalar> v(exponent + 1, Scalar(0));
    v[exponent] = c;
    return Polynomial(std::move(v));
  }
  /// 1 + t
  static Polynomial one_plus_t() { return Polynomial{1, 1}; }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  Scalar coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Scalar(0);
  }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  Scalar operator()(const Scalar& x) const {
    Scalar acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  /// Multiplies by t^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Scalar> v(k, Scalar(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

template <class Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& base, unsigned exponent) {
  Polynomial<Scalar> out = Polynomial<Scalar>::constant(Scalar(1));
  Polynomial<Scalar> b = base;
  while (exponent != 0) {
    if (exponent & 1U) out *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return out;
}

/// Exact long division; throws std::domain_error when `divisor` does not
/// divide `dividend` over Scalar.
template <class Scalar>
Polynomial<Scalar> divide_exact(const Polynomial<Scalar>& dividend,
                                const Polynomial<Scalar>& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Scalar> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dd = d.size() - 1;
  if (rem.size() < d.size()) {
    if (!dividend.is_zero()) throw std::domain_error("polynomial division is not exact");
    return {};
  }
  std::vector<Scalar> quot(rem.size() - dd, Scalar(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Scalar& lead = rem[k + dd];
    if (lead == 0) continue;
    Scalar q = lead / d[dd];
    if (q * d[dd] != lead) throw std::domain_error("polynomial division is not exact");
    quot[k] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * d[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("polynomial division is not exact");
  }
  return Polynomial<Scalar>(std::move(quot));
}

template <class Scalar>
bool is_symmetric(const Polynomial<Scalar>& p) {
  const auto& c = p.coefficients();
  return std::equal(c.begin(), c.begin() + static_cast<long>(c.size() / 2), c.rbegin());
}

template <class Scalar>
bool is_unimodal(const Polynomial<Scalar>& p) {
  const auto& c = p.coefficients();
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

template <class Scalar>
Polynomial<Rational> to_rational(const Polynomial<Scalar>& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return Polynomial<Rational>(std::move(v));
}

/// Converts to integer coefficients; throws std::domain_error if any
/// coefficient is fractional.
IntPolynomial to_integer(const RationalPolynomial& p);

template <class Scalar>
std::string to_string(const Polynomial<Scalar>& p, char var = 't') {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Scalar mag = c[i] < 0 ? Scalar(-c[i]) : c[i];
    if (first) {
      if (c[i] < 0) os << '-';
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << sepkit::to_string(mag);
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

/// Coefficient list "(1, 10, 22, 10, 1)".
template <class Scalar>
std::string to_vector_string(const Polynomial<Scalar>& p) {
  std::string out = "(";
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != 0) out += ", ";
    out += sepkit::to_string(c[i]);
  }
  return out + ")";
}

/// Polynomial in t and 1/t, stored as t^low * body.
template <class Scalar>
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(Polynomial<Scalar> p, long low = 0)  // NOLINT(implicit)
      : low_(low), body_(std::move(p)) {
    normalize();
  }

  static LaurentPolynomial monomial(const Scalar& c, long exponent) {
    return LaurentPolynomial(Polynomial<Scalar>::constant(c), exponent);
  }

  long low() const { return low_; }
  bool is_zero() const { return body_.is_zero(); }
  Scalar coefficient(long exponent) const {
    if (exponent < low_) return Scalar(0);
    return body_.coefficient(static_cast<std::size_t>(exponent - low_));
  }

  /// Throws std::domain_error if a negative power survives.
  Polynomial<Scalar> to_polynomial() const {
    if (is_zero()) return {};
    if (low_ < 0) throw std::domain_error("Laurent polynomial has negative powers of t");
    return body_.shifted(static_cast<std::size_t>(low_));
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b) {
    return LaurentPolynomial(a.body_ * b.body_, a.low_ + b.low_);
  }
  friend LaurentPolynomial operator+(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long low = std::min(a.low_, b.low_);
    return LaurentPolynomial(
        a.body_.shifted(static_cast<std::size_t>(a.low_ - low)) +
            b.body_.shifted(static_cast<std::size_t>(b.low_ - low)),
        low);
  }
  LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.low_ == b.low_ && a.body_ == b.body_;
  }

 private:
  void normalize() {
    if (body_.is_zero()) {
      low_ = 0;
      return;
    }
    std::size_t z = 0;
    while (body_.coefficient(z) == 0) ++z;
    if (z != 0) {
      std::vector<Scalar> v(body_.coefficients().begin() + static_cast<long>(z),
                            body_.coefficients().end());
      body_ = Polynomial<Scalar>(std::move(v));
      low_ += static_cast<long>(z);
    }
  }
  long low_ = 0;
  Polynomial<Scalar> body_;
};

/// (coef * t)^exponent with a possibly negative exponent.
template <class Scalar>
LaurentPolynomial<Scalar> scaled_t_power(const Scalar& coef, long exponent) {
  if (exponent >= 0) {
    Scalar c = 1;
    for (long i = 0; i < exponent; ++i) c *= coef;
    return LaurentPolynomial<Scalar>::monomial(c, exponent);
  }
  // Requires Scalar to be a field for a fractional coefficient; over the
  // integers only coef = +-1 is exact.
  Scalar c = 1;
  for (long i = 0; i < -exponent; ++i) c *= coef;
  return LaurentPolynomial<Scalar>::monomial(Scalar(1) / c, exponent);
}

}  // namespace sepkit
