#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepkit/matroid.hpp"
#include "sepkit/polynomial.hpp"
#include "sepkit/triangulation.hpp"

namespace sepkit {

/// Γ(n+1): the (2n+1)-cycle u1 v1 u2 ... vn u_{n+1} u1 plus the chords
/// u_i u_{i+1}. Every edge is oriented along the cycle u1 -> v1 -> u2 ...,
/// chords from u_i to u_{i+1}, and ẽ from u_{n+1} to u1.
struct GammaGraph {
  int n = 0;
  Graph graph;
  int tilde = -1;  // edge index of ẽ

  int u(int i) const { return i - 1; }      // 1 <= i <= n+1
  int v(int i) const { return n + i; }      // 1 <= i <= n
  int chord(int i) const { return 3 * (i - 1); }
  int left(int i) const { return 3 * (i - 1) + 1; }   // u_i v_i
  int right(int i) const { return 3 * (i - 1) + 2; }  // v_i u_{i+1}
  /// 1-based triangle of a non-ẽ edge.
  int triangle_of(int edge) const { return edge / 3 + 1; }
};

GammaGraph gamma_graph(int n);

/// z, then ẽ, then the remaining edges in ground order.
VariableOrder gamma_order(const GammaGraph& g);

/// A simple cycle with a traversal direction; `forward` holds the edges
/// traversed from tail to head.
struct DirectedCycle {
  ElementSet edges = 0;
  ElementSet forward = 0;
  int size() const { return cardinality(edges); }
};

/// Every simple cycle of a small multigraph, parallel-edge 2-cycles
/// included, each listed once.
std::vector<DirectedCycle> simple_cycles(const Graph& g);

/// How to read the even-cycle exception of the spanning-tree
/// characterization. `literal`: ẽ belongs to the tree. `precise`: ẽ lies
/// on the cycle and is among the |C|/2 edges sharing a direction.
enum class CycleReading { literal, precise };

bool satisfies_cycle_condition(const GammaGraph& g, const std::vector<DirectedCycle>& cycles,
                               const OrientedSet& tree, CycleReading reading);

struct GammaTreeOptions {
  CycleReading reading = CycleReading::precise;
  int max_n = 8;
  unsigned workers = 0;
};

/// Oriented spanning trees passing the cycle condition, grouped by
/// undirected tree in basis order.
std::vector<OrientedSet> triangulating_trees(const GammaGraph& g, const GammaTreeOptions& opts = {});
std::vector<OrientedSet> triangulating_trees(int n, const GammaTreeOptions& opts = {});

enum class PairKind { chordless, alpha, beta };
enum class Side { left, right };

struct PairInfo {
  int triangle = 0;  // 1-based; 0 for the ẽ pair of md(T)
  PairKind kind = PairKind::chordless;
  Side side = Side::left;
  int away = 0;  // edges of the pair pointing away from u1
};

struct TreeClassification {
  std::vector<PairInfo> pairs;  // triangle pairs, in triangle order
  std::optional<int> unpaired_edge;
  Side unpaired_side = Side::left;
  int c = 0;    // chords in the tree
  int eps = 0;  // 1 iff ẽ is in the tree
  ElementSet left_edges = 0;
  ElementSet right_edges = 0;
  /// md(T) when eps = 1: ẽ paired with a pendant edge that keeps the
  /// unpaired edge's direction relative to u1. The pair has type α (pendant
  /// at u1) when ẽ and the unpaired edge agree in that direction, β
  /// (pendant at u_{n+1}) otherwise.
  std::optional<PairInfo> tilde_pair;
  /// Directed edges of md(T) as (tail, head); the new vertex v_{n+1} has
  /// index vertex_count.
  std::vector<std::pair<int, int>> modified_edges;
  /// eps = 1: ẽ and the unpaired edge run opposite ways around the outer
  /// cycle.
  bool tilde_unpaired_opposite = true;
  /// eps = 1: ẽ and the unpaired edge both point away from, or both
  /// toward, each other in the tree.
  bool tilde_unpaired_matched = true;
  int away = 0;  // tree edges pointing away from u1
};

/// Throws InputError if `tree` is not a spanning tree of g.
TreeClassification classify(const OrientedSet& tree, const GammaGraph& g);

/// f_{p,q,l}(t) = t^{2l-p-q} Σ_i Σ_j C(p,i) C(q,j) C(2l-p-q, l-q-i+j) t^{2(i+j)}.
IntPolynomial f_pql(int p, int q, int l);

/// Closed h*-polynomial of Σ(Γ(n+1)).
IntPolynomial closed_hstar(int n);
/// First displayed form of the γ-polynomial.
IntPolynomial closed_gamma_by_chords(int n);
/// Second displayed form.
IntPolynomial closed_gamma_by_binomial(int n);
/// Both forms, asserted equal.
IntPolynomial closed_gamma(int n);
/// 2^n Σ_k (k+1) C(n,k) C(k, ⌊k/2⌋).
Integer closed_volume(int n);

struct AuditBucket {
  std::string key;
  Integer expected = 0;
  Integer observed = 0;
  bool ok() const { return expected == observed; }
  std::string witness;
};

struct SummandAudit {
  int n = 0;
  long oriented_trees = 0;
  std::vector<AuditBucket> buckets;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Buckets the triangulating trees by chord count, α-pair placement and
/// orientation, and checks every bucket against the counting argument
/// behind the closed h*-formula.
SummandAudit summand_audit(int n, const GammaTreeOptions& opts = {});

}  // namespace sepkit
