#include "sepkit/series.hpp"

namespace sepkit {

namespace {

RationalSeries one_minus_4x_sqrt(int order) {
  RationalSeries s = RationalSeries::constant(Rational(1), order);
  if (order >= 1) s[1] = -4;
  return s.sqrt();
}

}  // namespace

RationalSeries binomial_series(int k, int order) {
  RationalSeries base = RationalSeries::constant(Rational(1), order);
  if (order >= 1) base[1] = -1;
  return pow(base, k + 1).inverse();
}

RationalSeries catalan_series(int order) {
  // One extra term survives the division by x.
  const RationalSeries root = one_minus_4x_sqrt(order + 1);
  const RationalSeries numerator = RationalSeries::constant(Rational(1), order + 1) - root;
  return Rational(1, 2) * numerator.divided_by_x_power(1);
}

RationalSeries central_series(int m, int order) {
  return one_minus_4x_sqrt(order).inverse() * pow(catalan_series(order), m);
}

}  // namespace sepkit
