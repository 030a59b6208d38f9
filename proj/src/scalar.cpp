#include "sepkit/scalar.hpp"

#include <limits>
#include <stdexcept>

#include "sepkit/polynomial.hpp"

namespace sepkit {

Integer binomial(long n, long k) {
  Integer out = 0;
  if (n < 0 || k < 0 || k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

bool fits_int64(const Integer& value) {
  static_assert(sizeof(long) == 8);
  return mpz_fits_slong_p(value.get_mpz_t()) != 0;
}

IntPolynomial to_integer(const RationalPolynomial& p) {
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& q : p.coefficients()) {
    if (q.get_den() != 1) throw std::domain_error("fractional coefficient " + to_string(q));
    c.push_back(q.get_num());
  }
  return IntPolynomial(std::move(c));
}

}  // namespace sepkit
