#pragma once

#include <string>
#include <vector>

#include "sepkit/linalg.hpp"
#include "sepkit/matroid.hpp"
#include "sepkit/polynomial.hpp"

namespace sepkit {

/// Lattice polytope given by its vertices (one integer column each).
struct LatticePolytope {
  IntMatrix vertices;
  /// Zero columns dropped while building a symmetric edge polytope.
  int dropped_loops = 0;

  int ambient_dim() const { return static_cast<int>(vertices.rows()); }
  int vertex_count() const { return static_cast<int>(vertices.cols()); }
};

/// Deduplicates the columns of `points`.
LatticePolytope make_polytope(const IntMatrix& points);

/// conv{±u : u a nonzero column of the representation}.
LatticePolytope sep_of(const Matroid& m);

int affine_dimension(const LatticePolytope& p);
bool dim_check(const LatticePolytope& p, const Matroid& m);
bool is_centrally_symmetric(const LatticePolytope& p);

struct EhrhartOptions {
  /// Largest lattice box (in points) a single dilate may enumerate.
  double budget_box = 5e7;
  unsigned workers = 0;
};

/// Exact test of y ∈ m·conv(columns of v) by a phase-one simplex with
/// fraction-free integer pivoting and Bland's rule.
bool in_dilate(const IntMatrix& v, const IntVector& y, int m);

/// |m·P ∩ Z^n|, counted in the lattice of the affine span of P.
Integer count_points(const LatticePolytope& p, int m, const EhrhartOptions& opts = {});

/// h*_j = Σ_i (-1)^{j-i} C(d+1, j-i) L(i) from L(0..d).
IntPolynomial hstar_from_counts(const std::vector<Integer>& counts, int d);

/// γ with h = Σ γ_i t^i (1+t)^{d-2i}, d = deg h. Throws InputError when h
/// is not symmetric.
RationalPolynomial gamma_from_hstar(const IntPolynomial& h);
/// Inverse transform, for round trips.
RationalPolynomial expand_gamma(const RationalPolynomial& gamma, int d);

struct Predicates {
  bool symmetric = false;
  bool unimodal = false;
  bool gamma_nonnegative = false;
};
Predicates predicates(const IntPolynomial& h);

struct EhrhartData {
  int dim = 0;
  std::vector<Integer> counts;
  IntPolynomial hstar;
};

EhrhartData ehrhart_data(const LatticePolytope& p, const EhrhartOptions& opts = {});
IntPolynomial hstar_bruteforce(const Matroid& m, const EhrhartOptions& opts = {});

/// Both sides of a product identity for h*, computed by brute force.
struct ProductCheck {
  std::string identity;
  IntPolynomial lhs;
  IntPolynomial rhs;
  bool holds = false;
};

/// h*(Σ(M1 ⊕ M2)) = h*(Σ(M1)) h*(Σ(M2)).
ProductCheck free_sum_check(const Matroid& m1, const Matroid& m2, const EhrhartOptions& opts = {});
/// h*(Σ(M)) = (1+t) h*(Σ(M/e)); M must be bipartite.
ProductCheck contraction_check(const Matroid& m, int e, const EhrhartOptions& opts = {});
/// (1+t) h*(Σ(P(M1,M2))) = h*(Σ(M1)) h*(Σ(M2)); M1 must be bipartite.
ProductCheck parallel_check(const Matroid& m1, const Matroid& m2, const std::string& p,
                            const EhrhartOptions& opts = {});

}  // namespace sepkit
