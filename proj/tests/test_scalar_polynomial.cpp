#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "oracles.hpp"
#include "sepkit/polynomial.hpp"
#include "sepkit/scalar.hpp"

using namespace sepkit;

TEST(Binomial, MatchesPascalTriangle) {
  std::vector<std::vector<Integer>> pascal(41);
  for (int n = 0; n <= 40; ++n) {
    pascal[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), pascal[n][k]) << n << ' ' << k;
}

TEST(Binomial, ZeroOutsideRange) {
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Checked64, ThrowsOnOverflow) {
  const Checked64 big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(big + Checked64(1), ArithmeticOverflow);
  EXPECT_THROW(big * Checked64(2), ArithmeticOverflow);
  EXPECT_THROW(Checked64(std::numeric_limits<std::int64_t>::min()) - Checked64(1), ArithmeticOverflow);
  EXPECT_EQ((Checked64(7) * Checked64(-6)).value(), -42);
}

TEST(Checked64, FallbackReachesBigIntegers) {
  const Integer r = with_int64_fallback([]<class S>() -> Integer {
    S acc = 1;
    for (int i = 0; i < 30; ++i) acc = acc * S(1000);
    return to_integer(acc);
  });
  Integer expect = 1;
  for (int i = 0; i < 30; ++i) expect *= 1000;
  EXPECT_EQ(r, expect);
}

TEST(Polynomial, ArithmeticAgainstDirectExpansion) {
  const IntPolynomial a{1, 2, 3};
  const IntPolynomial b{0, -1, 0, 4};
  const IntPolynomial prod = a * b;
  EXPECT_EQ(prod, (IntPolynomial{0, -1, -2, 1, 8, 12}));
  EXPECT_EQ(a + b, (IntPolynomial{1, 1, 3, 4}));
  EXPECT_EQ(a - a, IntPolynomial{});
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a(Integer(2)), 17);
  EXPECT_EQ(pow(IntPolynomial::one_plus_t(), 5), (IntPolynomial{1, 5, 10, 10, 5, 1}));
}

TEST(Polynomial, TrailingZerosTrimmed) {
  const IntPolynomial p(std::vector<Integer>{1, 0, 0});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
}

TEST(Polynomial, DivideExactRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Integer> qa(4), da(3);
    for (auto& c : qa) c = coef(rng);
    for (auto& c : da) c = coef(rng);
    da.back() = 1;
    const IntPolynomial q(qa), d(da);
    EXPECT_EQ(divide_exact(q * d, d), q);
  }
  EXPECT_THROW(divide_exact(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1}), std::domain_error);
  EXPECT_THROW(divide_exact(IntPolynomial{1}, IntPolynomial{}), std::domain_error);
}

TEST(Polynomial, ShapePredicates) {
  EXPECT_TRUE(is_symmetric(IntPolynomial{1, 4, 1}));
  EXPECT_FALSE(is_symmetric(IntPolynomial{1, 4, 2}));
  EXPECT_TRUE(is_unimodal(IntPolynomial{1, 3, 3, 2}));
  EXPECT_FALSE(is_unimodal(IntPolynomial{2, 1, 2}));
}

TEST(Polynomial, IntegerCastRejectsFractions) {
  RationalPolynomial r(std::vector<Rational>{Rational(1), Rational(1, 2)});
  EXPECT_THROW(to_integer(r), std::domain_error);
  EXPECT_EQ(to_integer(to_rational(IntPolynomial{3, 0, -2})), (IntPolynomial{3, 0, -2}));
}

TEST(Polynomial, VectorString) {
  EXPECT_EQ(to_vector_string(IntPolynomial{1, 10, 22, 10, 1}), "(1, 10, 22, 10, 1)");
}

TEST(LaurentPolynomial, NegativePowersCancel) {
  // (2t)^{-1} * (4t + 2t^2) = 2 + t
  const auto inv = scaled_t_power(Rational(2), -1);
  const LaurentPolynomial<Rational> body(RationalPolynomial{0, 4, 2});
  EXPECT_EQ((inv * body).to_polynomial(), (RationalPolynomial{2, 1}));
  EXPECT_THROW(inv.to_polynomial(), std::domain_error);
}
