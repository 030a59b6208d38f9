#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepkit/linalg.hpp"

namespace sepkit {

/// Subset of a ground set of at most 64 elements; bit e is element e in
/// ground (column) order.
using ElementSet = std::uint64_t;

inline int cardinality(ElementSet s) { return std::popcount(s); }
inline bool contains(ElementSet s, int e) { return (s >> e) & 1U; }
inline ElementSet singleton(int e) { return ElementSet{1} << e; }
inline ElementSet full_set(int n) { return n >= 64 ? ~ElementSet{0} : (ElementSet{1} << n) - 1; }
/// Minimum element, i.e. the weakest in ground order. -1 for the empty set.
inline int weakest(ElementSet s) { return s == 0 ? -1 : std::countr_zero(s); }
std::vector<int> members(ElementSet s);

struct Edge {
  int tail = 0;
  int head = 0;
  bool distinguished = false;
  std::string label;
};

/// Directed multigraph on vertices 0..vertex_count-1. Edge order is the
/// ground-set order of the cycle matroid.
class Graph {
 public:
  explicit Graph(int vertex_count = 0);

  /// Unlabeled edges get "e<k>" with k 1-based.
  int add_edge(int tail, int head, bool distinguished = false, std::string label = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }
  std::optional<int> distinguished_edge() const;

  /// Component index per vertex; components numbered by smallest vertex.
  std::vector<int> components() const;
  bool is_connected() const;
  bool has_loop() const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Integer matrix with entries in {-1,0,1} and one label per column.
class TUMatrix {
 public:
  TUMatrix() = default;
  /// Rejects entries outside {-1,0,1} and duplicate labels. When
  /// max(rows, cols) <= 8 every square minor is checked and a failure
  /// throws NotTotallyUnimodular; larger inputs are trusted and left
  /// unverified.
  explicit TUMatrix(IntMatrix entries, std::vector<std::string> labels = {});

  static constexpr int kExhaustiveCheckLimit = 8;

  Eigen::Index rows() const { return entries_.rows(); }
  Eigen::Index cols() const { return entries_.cols(); }
  const IntMatrix& entries() const { return entries_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool verified() const { return verified_; }

 private:
  IntMatrix entries_;
  std::vector<std::string> labels_;
  bool verified_ = false;
};

std::vector<std::string> default_labels(int n, int first = 1);

/// Signed circuit: support plus the subset carrying sign +. Stored with the
/// weakest element positive, one representative per ± pair.
struct SignedCircuit {
  ElementSet support = 0;
  ElementSet positive = 0;

  ElementSet negative() const { return support & ~positive; }
  int size() const { return cardinality(support); }
  int sign(int e) const { return contains(positive, e) ? 1 : contains(support, e) ? -1 : 0; }
  SignedCircuit flipped() const { return {support, negative()}; }
  friend bool operator==(const SignedCircuit&, const SignedCircuit&) = default;
};

struct MatroidCache;

/// Regular matroid given by a totally unimodular representation. Dependent
/// rows are dropped on construction, so rank() equals the row count.
/// Circuits and bases are enumerated once on first use; copies share the
/// cache and are safe to read concurrently.
class Matroid {
 public:
  Matroid();
  explicit Matroid(TUMatrix representation);
  Matroid(IntMatrix entries, std::vector<std::string> labels);

  const TUMatrix& representation() const { return rep_; }
  const IntMatrix& matrix() const { return rep_.entries(); }
  int rank() const { return static_cast<int>(rep_.rows()); }
  int size() const { return static_cast<int>(rep_.cols()); }
  ElementSet ground() const { return full_set(size()); }

  const std::vector<std::string>& labels() const { return rep_.labels(); }
  const std::string& label(int e) const { return rep_.labels().at(static_cast<std::size_t>(e)); }
  /// Throws InputError for an unknown label.
  int element(const std::string& label) const;
  std::optional<int> find(const std::string& label) const;
  ElementSet elements(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(ElementSet s) const;

  IntVector column(int e) const { return rep_.entries().col(e); }
  bool is_loop(int e) const;
  bool is_coloop(int e) const;

  const std::vector<SignedCircuit>& signed_circuits() const;
  std::vector<ElementSet> circuits() const;
  const std::vector<ElementSet>& bases() const;
  bool is_independent(ElementSet s) const;

 private:
  void enumerate() const;
  TUMatrix rep_;
  std::shared_ptr<MatroidCache> cache_;
};

/// Pairs (old label, new label) produced when a binary operation renames
/// colliding elements of its second operand.
using Relabeling = std::vector<std::pair<std::string, std::string>>;

/// Pivot on entry (row, col), which must be ±1, so that the column becomes
/// the unit vector e_row. Throws NotTotallyUnimodular if an entry leaves
/// {-1,0,1}.
IntMatrix pivot(const IntMatrix& a, Eigen::Index row, Eigen::Index col);

Matroid cycle_matroid(const Graph& g);

/// Representation [I | D] with the columns of the greedy first basis in
/// front. Labels travel with their columns; `source_column[k]` is the
/// original position of column k.
Matroid standard_form(const Matroid& m, std::vector<int>* source_column = nullptr);

/// Represented by [-D^T | I] from the standard form, with columns returned
/// to the original ground order.
Matroid dual(const Matroid& m);

/// Deletes and contracts the given elements. Contracting a loop deletes it.
Matroid minor(const Matroid& m, ElementSet deletions, ElementSet contractions);
Matroid minor(const Matroid& m, const std::vector<std::string>& deletions,
              const std::vector<std::string>& contractions);
inline Matroid deletion(const Matroid& m, int e) { return minor(m, singleton(e), 0); }
inline Matroid contraction(const Matroid& m, int e) { return minor(m, 0, singleton(e)); }

/// Block-diagonal sum. Labels of m2 that collide get a "_2", "_3", ...
/// suffix; the renames are appended to `relabel` when given.
Matroid direct_sum(const Matroid& m1, const Matroid& m2, Relabeling* relabel = nullptr);

/// Parallel connection at the shared basepoint label `p`. All other labels
/// must be disjoint. The glued representation is checked against the
/// definitional circuit family.
Matroid parallel_connection(const Matroid& m1, const Matroid& m2, const std::string& p);

/// Copy of m with labels renamed per `renames` (old -> new).
Matroid relabel(const Matroid& m, const Relabeling& renames);

bool is_bipartite(const Matroid& m);

/// k coloops, i.e. the k x k identity; labels "c1".."ck".
Matroid coloops(int k);

/// The dual of the cycle matroid of K_{3,n} as [I_{2(n-1)} | B_n].
Matroid dual_k3n(int n);

/// Complete bipartite graph K_{m,n}: parts 0..m-1 and m..m+n-1, edges
/// oriented from the first part, listed part-major.
Graph complete_bipartite(int m, int n);
/// Cycle 0 -> 1 -> ... -> n-1 -> 0.
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);

}  // namespace sepkit
