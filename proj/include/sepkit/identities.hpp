#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sepkit {

/// Outcome of one identity sweep. `range` lists the bounds that were swept.
struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, long>> range;
  long cases = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Coefficients of 1/(1-x)^{k+1} (k <= kmax) and of the central series
/// (|m| <= mmax) against direct binomial evaluation up to `order`.
IdentityReport check_series_primitives(int kmax, int mmax, int order);

/// Vandermonde, the shifted upper-index sum (b >= a) and trinomial
/// revision, for every parameter in [0, limit].
IdentityReport check_binom_lemma(int limit);

/// Both parts of the splitting identity for C(n,2l) C(2l+1,p+q+1), n <= nmax.
IdentityReport check_breaking_up(int nmax);

/// Σ_a (-1)^{k-a} 4^{l-a} C(2a,a) C(l-k,l-a) = C(l,k) C(2l,l) / C(2l,2k);
/// also asserts the right side is an integer.
IdentityReport check_hodai1(int lmax);

/// C(2k,k) x^k (1-4x)^{-(k+3/2)} has coefficients (2l+1)/(2k+1) C(l,k) C(2l,l).
IdentityReport check_hodai2(int kmax, int order);

/// Σ C(2l+1,p+q+1) x^p y^q times (x - y) is (x+1)^{2l+1} - (y+1)^{2l+1}; the
/// quotient is computed by exact division.
IdentityReport check_hodai3(int lmax);

/// Σ_{p+q<=2l} C(2l+1,p+q+1) f_{p,q,l} = Σ_a C(2a,a) t^a (t+1)^{4l-2a}.
IdentityReport check_f_to_gamma(int lmax);

/// Σ γ_i t^i (1+t)^{2n-2i} with γ = closed_gamma(n) reproduces
/// closed_hstar(n); both closed γ forms agree.
IdentityReport check_gamma_expansion(int nmax);

struct IdentitySweep {
  int binom_limit = 12;
  int nmax = 12;
  int hodai_lmax = 10;
  int series_order = 64;
  int f_lmax = 8;
};

std::vector<IdentityReport> run_identity_suite(const IdentitySweep& sweep = {});

}  // namespace sepkit
