#include "sepkit/identities.hpp"

#include "sepkit/ehrhart.hpp"
#include "sepkit/gamma_family.hpp"
#include "sepkit/polynomial.hpp"
#include "sepkit/series.hpp"

namespace sepkit {

namespace {

std::string params(std::initializer_list<std::pair<const char*, long>> ps) {
  std::string out;
  for (const auto& [name, value] : ps) {
    if (!out.empty()) out += ", ";
    out += std::string(name) + "=" + std::to_string(value);
  }
  return out;
}

Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// C(n, k) with the upper index allowed to be negative.
Integer general_binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) return binomial(n, k);
  const Integer b = binomial(k - n - 1, k);
  return k % 2 == 0 ? b : Integer(-b);
}

void expect(IdentityReport& r, bool holds, const std::string& where) {
  ++r.cases;
  if (!holds) r.violations.push_back(where);
}

}  // namespace

IdentityReport check_series_primitives(int kmax, int mmax, int order) {
  IdentityReport r{"series", {{"kmax", kmax}, {"mmax", mmax}, {"order", order}}, 0, {}};
  for (int k = 0; k <= kmax; ++k) {
    const RationalSeries s = binomial_series(k, order);
    for (int j = 0; j <= order; ++j) expect(r, s[j] == binomial(j + k, j), params({{"k", k}, {"j", j}}));
  }
  for (int m = -mmax; m <= mmax; ++m) {
    const RationalSeries s = central_series(m, order);
    for (int j = 0; j <= order; ++j) expect(r, s[j] == general_binomial(2 * j + m, j), params({{"m", m}, {"j", j}}));
  }
  return r;
}

IdentityReport check_binom_lemma(int limit) {
  IdentityReport r{"binom", {{"limit", limit}}, 0, {}};
  for (int a = 0; a <= limit; ++a)
    for (int b = 0; b <= limit; ++b)
      for (int c = 0; c <= limit; ++c) {
        Integer s = 0;
        for (int i = 0; i <= c; ++i) s += binomial(a, i) * binomial(b, c - i);
        expect(r, s == binomial(a + b, c), params({{"part", 1}, {"a", a}, {"b", b}, {"c", c}}));
        if (b >= a) {
          for (int d = 0; d <= limit; ++d) {
            Integer t = 0;
            for (int i = 0; i <= c; ++i) t += binomial(a + i, b) * binomial(c - i, d);
            expect(r, t == binomial(a + c + 1, b + d + 1), params({{"part", 2}, {"a", a}, {"b", b}, {"c", c}, {"d", d}}));
          }
        }
        expect(r, binomial(a, b) * binomial(b, c) == binomial(a - c, b - c) * binomial(a, c),
               params({{"part", 3}, {"a", a}, {"b", b}, {"c", c}}));
      }
  return r;
}

IdentityReport check_breaking_up(int nmax) {
  IdentityReport r{"breaking_up", {{"nmax", nmax}}, 0, {}};
  for (int n = 1; n <= nmax; ++n)
    for (int l = 0; 2 * l <= n; ++l)
      for (int p = 0; p <= 2 * l; ++p)
        for (int q = 0; p + q <= 2 * l; ++q) {
          Integer s1 = 0, s0 = 0;
          for (int i = 0; i <= n - 1; ++i) {
            s1 += binomial(n - 1 - i, p) * binomial(i, q - 1);
            s0 += binomial(n - 1 - i, p) * binomial(i, q);
          }
          if (q >= 1) {
            const Integer lhs = binomial(n - (p + q), 2 * l - (p + q)) * s1 +
                                binomial(n - 1 - (p + q), 2 * l - 1 - (p + q)) * s0;
            expect(r, lhs == binomial(n, 2 * l) * binomial(2 * l + 1, p + q + 1),
                   params({{"part", 1}, {"n", n}, {"l", l}, {"p", p}, {"q", q}}));
          }
          if (2 * l <= n - 1) {
            const Integer lhs = binomial(n - 1 - (p + q), 2 * l - (p + q)) * s0;
            expect(r, lhs == binomial(n, 2 * l + 1) * binomial(2 * l + 1, p + q + 1),
                   params({{"part", 2}, {"n", n}, {"l", l}, {"p", p}, {"q", q}}));
          }
        }
  return r;
}

IdentityReport check_hodai1(int lmax) {
  IdentityReport r{"hodai1", {{"lmax", lmax}}, 0, {}};
  for (int l = 0; l <= lmax; ++l)
    for (int k = 0; k <= l; ++k) {
      Integer lhs = 0;
      for (int a = 0; a <= l; ++a) {
        const Integer term = pow(Integer(4), static_cast<unsigned long>(l - a)) * binomial(2 * a, a) * binomial(l - k, l - a);
        lhs += (k - a) % 2 == 0 ? term : Integer(-term);
      }
      const Rational rhs = ratio(binomial(l, k) * binomial(2 * l, l), binomial(2 * l, 2 * k));
      expect(r, Rational(lhs) == rhs, params({{"l", l}, {"k", k}}));
      expect(r, rhs.get_den() == 1, params({{"l", l}, {"k", k}, {"integral", 1}}));
    }
  return r;
}

IdentityReport check_hodai2(int kmax, int order) {
  IdentityReport r{"hodai2", {{"kmax", kmax}, {"order", order}}, 0, {}};
  RationalSeries base = RationalSeries::constant(Rational(1), order);
  if (order >= 1) base[1] = -4;
  const RationalSeries root = base.sqrt();
  for (int k = 0; k <= kmax && k <= order; ++k) {
    // (1-4x)^{k+3/2} = (1-4x)^{k+1} sqrt(1-4x)
    const RationalSeries denominator = pow(base, k + 1) * root;
    const RationalSeries lhs =
        Rational(binomial(2 * k, k)) * denominator.inverse().truncated(order - k).shifted(k);
    for (int l = 0; l <= order; ++l) {
      const Rational rhs = ratio((2 * l + 1) * binomial(l, k) * binomial(2 * l, l), Integer(2 * k + 1));
      expect(r, lhs[l] == rhs, params({{"k", k}, {"l", l}}));
    }
  }
  return r;
}

IdentityReport check_hodai3(int lmax) {
  IdentityReport r{"hodai3", {{"lmax", lmax}}, 0, {}};
  for (int l = 0; l <= lmax; ++l) {
    const int d = 2 * l + 1;
    // Numerator as a polynomial in x with coefficients in Z[y].
    std::vector<IntPolynomial> a(static_cast<std::size_t>(d + 1));
    for (int k = 0; k <= d; ++k) a[static_cast<std::size_t>(k)] = IntPolynomial::constant(binomial(d, k));
    a[0] -= pow(IntPolynomial::one_plus_t(), static_cast<unsigned long>(d));
    // Synthetic division by (x - y).
    const IntPolynomial y = IntPolynomial::monomial(1, 1);
    std::vector<IntPolynomial> quotient(static_cast<std::size_t>(d));
    IntPolynomial carry;
    for (int k = d; k >= 1; --k) {
      carry = a[static_cast<std::size_t>(k)] + y * carry;
      quotient[static_cast<std::size_t>(k - 1)] = carry;
    }
    const IntPolynomial remainder = a[0] + y * carry;
    expect(r, remainder.is_zero(), params({{"l", l}, {"exact", 1}}));
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) {
        const Integer got = quotient[static_cast<std::size_t>(p)].coefficient(static_cast<std::size_t>(q));
        expect(r, got == binomial(d, p + q + 1), params({{"l", l}, {"p", p}, {"q", q}}));
      }
  }
  return r;
}

IdentityReport check_f_to_gamma(int lmax) {
  IdentityReport r{"f_to_gamma", {{"lmax", lmax}}, 0, {}};
  const IntPolynomial one_t = IntPolynomial::one_plus_t();
  for (int l = 0; l <= lmax; ++l) {
    IntPolynomial lhs;
    for (int p = 0; p <= 2 * l; ++p)
      for (int q = 0; p + q <= 2 * l; ++q) lhs += binomial(2 * l + 1, p + q + 1) * f_pql(p, q, l);
    IntPolynomial rhs;
    for (int a = 0; a <= l; ++a)
      rhs += binomial(2 * a, a) * IntPolynomial::monomial(1, static_cast<std::size_t>(a)) *
             pow(one_t, static_cast<unsigned long>(4 * l - 2 * a));
    if (lhs == rhs) {
      expect(r, true, "");
      continue;
    }
    std::size_t j = 0;
    while (lhs.coefficient(j) == rhs.coefficient(j)) ++j;
    expect(r, false, params({{"l", l}, {"first_difference", static_cast<long>(j)}}));
  }
  return r;
}

IdentityReport check_gamma_expansion(int nmax) {
  IdentityReport r{"gamma_expansion", {{"nmax", nmax}}, 0, {}};
  for (int n = 1; n <= nmax; ++n) {
    const IntPolynomial a = closed_gamma_by_chords(n);
    const IntPolynomial b = closed_gamma_by_binomial(n);
    expect(r, a == b, params({{"n", n}, {"forms", 1}}));
    expect(r, expand_gamma(to_rational(a), 2 * n) == to_rational(closed_hstar(n)), params({{"n", n}}));
  }
  return r;
}

std::vector<IdentityReport> run_identity_suite(const IdentitySweep& sweep) {
  return {
      check_series_primitives(8, 8, sweep.series_order),
      check_binom_lemma(sweep.binom_limit),
      check_breaking_up(sweep.nmax),
      check_hodai1(sweep.hodai_lmax),
      check_hodai2(sweep.hodai_lmax, sweep.series_order),
      check_hodai3(sweep.hodai_lmax),
      check_f_to_gamma(sweep.f_lmax),
      check_gamma_expansion(sweep.nmax),
  };
}

}  // namespace sepkit
