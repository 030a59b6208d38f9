#pragma once

#include <string>
#include <vector>

#include "sepkit/matroid.hpp"
#include "sepkit/polynomial.hpp"

namespace sepkit {

/// Squarefree monomial in z, x_e, y_e: `plus` holds elements taken as x_e
/// (the column), `minus` those taken as y_e (its negative).
struct OrientedSet {
  ElementSet plus = 0;
  ElementSet minus = 0;
  bool with_origin = false;

  ElementSet support() const { return plus | minus; }
  int size() const { return cardinality(support()) + (with_origin ? 1 : 0); }
  /// At most one sign per element.
  bool consistent() const { return (plus & minus) == 0; }
  int sign(int e) const { return contains(plus, e) ? 1 : contains(minus, e) ? -1 : 0; }
  bool divides(const OrientedSet& other) const {
    return (plus & ~other.plus) == 0 && (minus & ~other.minus) == 0 && (!with_origin || other.with_origin);
  }
  friend bool operator==(const OrientedSet&, const OrientedSet&) = default;
  friend auto operator<=>(const OrientedSet&, const OrientedSet&) = default;
};

/// z < x_{e1} < y_{e1} < x_{e2} < ... for a chosen element order.
class VariableOrder {
 public:
  VariableOrder() = default;
  /// `elements` lists every ground element once, weakest first.
  explicit VariableOrder(std::vector<int> elements);
  static VariableOrder ground(int n);

  const std::vector<int>& elements() const { return elements_; }
  int rank_of(int e) const { return rank_.at(static_cast<std::size_t>(e)); }
  int x_index(int e) const { return 1 + 2 * rank_of(e); }
  int y_index(int e) const { return 2 + 2 * rank_of(e); }
  /// Weakest element of s under this order; -1 for the empty set.
  int weakest_of(ElementSet s) const;

 private:
  std::vector<int> elements_;
  std::vector<int> rank_;
};

/// Grevlex comparison of two monomials (exponent 0/1 per variable):
/// negative if a ≺ b, zero if equal, positive if a ≻ b.
int grevlex_compare(const OrientedSet& a, const OrientedSet& b, const VariableOrder& order);

/// One binomial from the circuit construction; `initial` is its leading term.
struct Generator {
  OrientedSet initial;
  OrientedSet trailing;
  int circuit = -1;
};

struct InitialMonomialSet {
  std::vector<Generator> generators;
  /// Candidates dropped because their vector identity or leading term
  /// failed the exact check. Expected to stay zero.
  int discarded = 0;
};

/// Leading terms of the circuit binomials for the grevlex order with z
/// weakest. The degenerate family x_e y_e is implicit.
InitialMonomialSet initial_monomials(const Matroid& m, const VariableOrder& order);

/// True iff no generator divides s and s never carries both signs of an
/// element.
bool is_standard(const OrientedSet& s, const InitialMonomialSet& gens);

/// Standardness through circuit thresholds: for a circuit C with signing
/// εσ, the elements of s oriented as εσ must number fewer than |C|/2 outside
/// the weakest element (|C| even), or at most (|C|-1)/2 (|C| odd). This is
/// equivalent to divisibility by the generators.
class StandardnessOracle {
 public:
  StandardnessOracle(const Matroid& m, const VariableOrder& order);

  bool is_standard(const OrientedSet& s) const;
  /// Only examines circuits through e; valid when s minus e is standard.
  bool still_standard(const OrientedSet& s, int e) const;

 private:
  struct Entry {
    ElementSet support;
    ElementSet positive;
    ElementSet negative;
    ElementSet counted;  // support minus the weakest element when |C| is even
    int threshold;       // violation when the count reaches this
  };
  bool violated(const Entry& c, const OrientedSet& s) const;
  std::vector<Entry> circuits_;
  std::vector<std::vector<int>> through_;
};

struct TriangulationOptions {
  /// Cap on bases x orientations for facets, and on visited faces.
  double budget_bases = 2e8;
  unsigned workers = 0;
};

struct TriangulationSummary {
  Integer facet_count = 0;
  std::vector<Integer> f_vector;  // f_vector[i] counts faces with i vertices
  IntPolynomial h_vector;
};

/// Oriented bases whose monomial is standard, in (basis, orientation)
/// lexicographic order.
std::vector<OrientedSet> enumerate_facets(const Matroid& m, const VariableOrder& order,
                                          const TriangulationOptions& opts = {});

std::vector<Integer> face_f_vector(const Matroid& m, const VariableOrder& order,
                                   const TriangulationOptions& opts = {});

/// h_k = Σ_{i<=k} (-1)^{k-i} C(d-i, k-i) f[i].
IntPolynomial h_from_f(const std::vector<Integer>& f, int d);

TriangulationSummary triangulate(const Matroid& m, const VariableOrder& order,
                                 const TriangulationOptions& opts = {});

/// Number of edges of the oriented tree pointing away from v: the tail
/// stays on v's side after removing the edge.
int edges_pointing_away(const Graph& g, int v, const OrientedSet& tree);

/// h*_i = number of facets with exactly i edges pointing away from v.
IntPolynomial hstar_by_pointing(const Graph& g, int v, const std::vector<OrientedSet>& facets);

/// "+e1 -e3 +e4" in ground order.
std::string format_oriented(const Matroid& m, const OrientedSet& s);

}  // namespace sepkit
