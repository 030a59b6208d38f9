#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "sepkit/errors.hpp"

namespace sepkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient with the combinatorial convention: zero unless
/// 0 <= k <= n.
Integer binomial(long n, long k);

Integer pow(const Integer& base, unsigned long exponent);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

bool fits_int64(const Integer& value);

/// 64-bit integer whose arithmetic throws ArithmeticOverflow instead of
/// wrapping. Used as the fast scalar for fraction-free elimination, with
/// Integer as the fallback.
class Checked64 {
 public:
  constexpr Checked64() = default;
  constexpr Checked64(std::int64_t v) : value_(v) {}  // NOLINT(implicit)

  constexpr std::int64_t value() const { return value_; }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.value_, b.value_, &r)) overflow();
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.value_, b.value_, &r)) overflow();
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.value_, b.value_, &r)) overflow();
    return r;
  }
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (b.value_ == -1) return Checked64(0) - a;
    return a.value_ / b.value_;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.value_ == -1) return 0;
    return a.value_ % b.value_;
  }
  Checked64 operator-() const { return Checked64(0) - *this; }
  Checked64& operator+=(Checked64 o) { return *this = *this + o; }
  Checked64& operator-=(Checked64 o) { return *this = *this - o; }
  Checked64& operator*=(Checked64 o) { return *this = *this * o; }
  Checked64& operator/=(Checked64 o) { return *this = *this / o; }

  friend constexpr bool operator==(Checked64, Checked64) = default;
  friend constexpr auto operator<=>(Checked64, Checked64) = default;

  friend std::ostream& operator<<(std::ostream& os, Checked64 v) {
    return os << v.value_;
  }

 private:
  [[noreturn]] static void overflow() {
    throw ArithmeticOverflow("64-bit overflow in exact arithmetic");
  }
  std::int64_t value_ = 0;
};

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }
inline int sign(Checked64 v) { return (v.value() > 0) - (v.value() < 0); }
inline int sign(long long v) { return (v > 0) - (v < 0); }

inline Integer to_integer(Checked64 v) {
  Integer out;
  mpz_set_si(out.get_mpz_t(), static_cast<long>(v.value()));
  return out;
}
inline const Integer& to_integer(const Integer& v) { return v; }

/// Runs `fn.template operator()<Checked64>()` and, if any intermediate
/// overflows 64 bits, reruns it over arbitrary-precision integers.
template <class Fn>
decltype(auto) with_int64_fallback(Fn&& fn) {
  try {
    return fn.template operator()<Checked64>();
  } catch (const ArithmeticOverflow&) {
    return fn.template operator()<Integer>();
  }
}

}  // namespace sepkit
