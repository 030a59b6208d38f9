#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "sepkit/polynomial.hpp"
#include "sepkit/scalar.hpp"

namespace sepkit {

/// Power series known through x^order. Binary operations on series of
/// different orders keep the smaller order.
template <class Scalar>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0) : c_(static_cast<std::size_t>(order) + 1, Scalar(0)) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  }
  TruncatedSeries(const Polynomial<Scalar>& p, int order) : TruncatedSeries(order) {
    for (int i = 0; i <= order; ++i) c_[static_cast<std::size_t>(i)] = p.coefficient(static_cast<std::size_t>(i));
  }

  static TruncatedSeries constant(const Scalar& a, int order) {
    TruncatedSeries s(order);
    s.c_[0] = a;
    return s;
  }
  /// The series x.
  static TruncatedSeries variable(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
  Scalar& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }
  const std::vector<Scalar>& coefficients() const { return c_; }

  TruncatedSeries truncated(int order) const {
    TruncatedSeries s(std::min(order, this->order()));
    std::copy_n(c_.begin(), s.c_.size(), s.c_.begin());
    return s;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s[i] = a[i] + b[i];
    return s;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s[i] = a[i] - b[i];
    return s;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a) { return TruncatedSeries(a.order()) - a; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= s.order(); ++j) s[i + j] += a[i] * b[j];
    }
    return s;
  }
  friend TruncatedSeries operator*(const Scalar& k, const TruncatedSeries& a) {
    TruncatedSeries s = a;
    for (auto& x : s.c_) x *= k;
    return s;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }

  /// Multiplicative inverse; needs a nonzero constant term.
  TruncatedSeries inverse() const {
    if (c_[0] == 0) throw std::domain_error("series inverse needs a nonzero constant term");
    TruncatedSeries s(order());
    s[0] = Scalar(1) / c_[0];
    for (int n = 1; n <= order(); ++n) {
      Scalar acc = 0;
      for (int k = 1; k <= n; ++k) acc += c_[static_cast<std::size_t>(k)] * s[n - k];
      s[n] = -acc * s[0];
    }
    return s;
  }

  /// Square root with constant term 1 by Newton iteration
  /// r <- (r + s/r)/2, doubling the number of correct terms each step.
  TruncatedSeries sqrt() const {
    if (c_[0] != 1) throw std::domain_error("series square root needs constant term 1");
    const Scalar half = Scalar(1) / Scalar(2);
    TruncatedSeries r = constant(Scalar(1), 0);
    int known = 0;
    while (known < order()) {
      known = std::min(order(), 2 * known + 1);
      TruncatedSeries rr(known);
      for (int i = 0; i <= r.order(); ++i) rr[i] = r[i];
      r = half * (rr + truncated(known) * rr.inverse());
    }
    return r;
  }

  /// Divides by x^k; the k lowest coefficients must vanish. The order
  /// drops by k.
  TruncatedSeries divided_by_x_power(int k) const {
    for (int i = 0; i < k; ++i)
      if (c_[static_cast<std::size_t>(i)] != 0) throw std::domain_error("series is not divisible by x^k");
    TruncatedSeries s(order() - k);
    for (int i = 0; i <= s.order(); ++i) s[i] = c_[static_cast<std::size_t>(i + k)];
    return s;
  }

  /// x^k times the series; the order grows by k.
  TruncatedSeries shifted(int k) const {
    TruncatedSeries s(order() + k);
    for (int i = 0; i <= order(); ++i) s[i + k] = c_[static_cast<std::size_t>(i)];
    return s;
  }

 private:
  std::vector<Scalar> c_;
};

using RationalSeries = TruncatedSeries<Rational>;

/// Integer powers, negative ones through the inverse.
template <class Scalar>
TruncatedSeries<Scalar> pow(const TruncatedSeries<Scalar>& s, long k) {
  TruncatedSeries<Scalar> base = k < 0 ? s.inverse() : s;
  TruncatedSeries<Scalar> out = TruncatedSeries<Scalar>::constant(Scalar(1), s.order());
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

/// 1 / (1 - x)^{k+1}.
RationalSeries binomial_series(int k, int order);

/// (1 - sqrt(1 - 4x)) / (2x), whose coefficients are the Catalan numbers.
RationalSeries catalan_series(int order);

/// (1/sqrt(1 - 4x)) ((1 - sqrt(1 - 4x)) / (2x))^m for any integer m.
RationalSeries central_series(int m, int order);

}  // namespace sepkit
