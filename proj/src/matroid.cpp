#include "sepkit/matroid.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "sepkit/errors.hpp"

namespace sepkit {

std::vector<int> members(ElementSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

std::vector<std::string> default_labels(int n, int first) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back("e" + std::to_string(first + i));
  return out;
}

// ---------------------------------------------------------------- Graph

Graph::Graph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
}

int Graph::add_edge(int tail, int head, bool distinguished, std::string label) {
  if (tail < 0 || tail >= vertex_count_ || head < 0 || head >= vertex_count_) {
    throw InputError("edge endpoint out of range");
  }
  if (distinguished && distinguished_edge()) throw InputError("a second distinguished edge");
  if (label.empty()) label = "e" + std::to_string(edges_.size() + 1);
  edges_.push_back({tail, head, distinguished, std::move(label)});
  return static_cast<int>(edges_.size()) - 1;
}

std::optional<int> Graph::distinguished_edge() const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].distinguished) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<int> Graph::components() const {
  std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  for (const auto& e : edges_) {
    int a = find(e.tail), b = find(e.head);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> root(static_cast<std::size_t>(vertex_count_));
  std::vector<int> index(static_cast<std::size_t>(vertex_count_), -1);
  int next = 0;
  for (int v = 0; v < vertex_count_; ++v) {
    int r = find(v);
    if (index[static_cast<std::size_t>(r)] < 0) index[static_cast<std::size_t>(r)] = next++;
    root[static_cast<std::size_t>(v)] = index[static_cast<std::size_t>(r)];
  }
  return root;
}

bool Graph::is_connected() const {
  auto c = components();
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

bool Graph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.tail == e.head; });
}

// ------------------------------------------------------------- TUMatrix

TUMatrix::TUMatrix(IntMatrix entries, std::vector<std::string> labels)
    : entries_(std::move(entries)), labels_(std::move(labels)) {
  if (labels_.empty()) labels_ = default_labels(static_cast<int>(entries_.cols()));
  if (static_cast<Eigen::Index>(labels_.size()) != entries_.cols()) {
    throw InputError("label count does not match column count");
  }
  if (entries_.cols() > 64) throw InputError("ground sets are limited to 64 elements");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("empty element label");
    if (!seen.insert(l).second) throw InputError("duplicate element label '" + l + "'");
  }
  for (Eigen::Index i = 0; i < entries_.rows(); ++i)
    for (Eigen::Index j = 0; j < entries_.cols(); ++j)
      if (std::abs(entries_(i, j)) > 1) throw NotTotallyUnimodular("matrix entry outside {-1,0,1}");
  if (std::max(entries_.rows(), entries_.cols()) <= kExhaustiveCheckLimit) {
    if (!is_totally_unimodular(entries_)) throw NotTotallyUnimodular("matrix has a square minor outside {-1,0,1}");
    verified_ = true;
  }
}

// -------------------------------------------------------------- Matroid

struct MatroidCache {
  std::once_flag once;
  std::vector<SignedCircuit> circuits;
  std::vector<ElementSet> bases;
};

namespace {

constexpr long kIndependentSetBudget = 50'000'000;

TUMatrix drop_dependent_rows(TUMatrix rep) {
  auto keep = independent_rows(rep.entries());
  if (static_cast<Eigen::Index>(keep.size()) == rep.rows()) return rep;
  IntMatrix reduced(static_cast<Eigen::Index>(keep.size()), rep.cols());
  for (std::size_t i = 0; i < keep.size(); ++i) reduced.row(static_cast<Eigen::Index>(i)) = rep.entries().row(keep[i]);
  return TUMatrix(std::move(reduced), rep.labels());
}

void check_unit_range(const IntMatrix& a) {
  if (a.size() != 0 && (a.maxCoeff() > 1 || a.minCoeff() < -1)) {
    throw NotTotallyUnimodular("elimination left {-1,0,1}; representation is not totally unimodular");
  }
}

// Incremental elimination for the independent-set DFS. After adding columns
// a_{i_1..i_k}, transform * a_{i_j} = e_{pivot_row[j]}.
struct Elimination {
  IntMatrix transform;
  std::vector<int> pivot_row;
  std::uint64_t used_rows = 0;

  explicit Elimination(int r) : transform(IntMatrix::Identity(r, r)) {}

  // Returns the pivot row for `y = transform * a` or -1 when a is dependent.
  int free_row(const IntVector& y) const {
    for (Eigen::Index i = 0; i < y.size(); ++i)
      if (y(i) != 0 && !((used_rows >> i) & 1U)) return static_cast<int>(i);
    return -1;
  }

  Elimination extended(const IntVector& y, int q) const {
    Elimination out = *this;
    const int s = y(q);
    out.transform.row(q) *= s;
    for (Eigen::Index r = 0; r < y.size(); ++r) {
      if (r == q || y(r) == 0) continue;
      out.transform.row(r) -= y(r) * out.transform.row(q);
    }
    check_unit_range(out.transform);
    out.pivot_row.push_back(q);
    out.used_rows |= std::uint64_t{1} << q;
    return out;
  }
};

}  // namespace

Matroid::Matroid() : cache_(std::make_shared<MatroidCache>()) {}

Matroid::Matroid(TUMatrix representation)
    : rep_(drop_dependent_rows(std::move(representation))), cache_(std::make_shared<MatroidCache>()) {}

Matroid::Matroid(IntMatrix entries, std::vector<std::string> labels)
    : Matroid(TUMatrix(std::move(entries), std::move(labels))) {}

std::optional<int> Matroid::find(const std::string& label) const {
  const auto& ls = labels();
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<int>(it - ls.begin());
}

int Matroid::element(const std::string& label) const {
  auto e = find(label);
  if (!e) throw InputError("unknown element label '" + label + "'");
  return *e;
}

ElementSet Matroid::elements(const std::vector<std::string>& ls) const {
  ElementSet s = 0;
  for (const auto& l : ls) s |= singleton(element(l));
  return s;
}

std::vector<std::string> Matroid::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (int e : members(s)) out.push_back(label(e));
  return out;
}

bool Matroid::is_loop(int e) const { return column(e).isZero(); }

bool Matroid::is_coloop(int e) const {
  for (ElementSet b : bases())
    if (!contains(b, e)) return false;
  return true;
}

void Matroid::enumerate() const {
  std::call_once(cache_->once, [this] {
    const int r = rank();
    const int n = size();
    const IntMatrix& a = matrix();
    std::vector<SignedCircuit> circuits;
    std::vector<ElementSet> bases;
    long visited = 0;

    // Every independent set is reached by extending in increasing order, and
    // each circuit C is found exactly once: from I = C - max(C).
    auto dfs = [&](auto&& self, int next, ElementSet indep, const std::vector<int>& order,
                   const Elimination& elim) -> void {
      if (++visited > kIndependentSetBudget) throw BudgetExceeded("independent-set enumeration exceeds budget");
      if (cardinality(indep) == r) bases.push_back(indep);
      for (int e = next; e < n; ++e) {
        IntVector y = elim.transform * a.col(e);
        check_unit_range(y);
        int q = elim.free_row(y);
        if (q >= 0) {
          std::vector<int> grown = order;
          grown.push_back(e);
          self(self, e + 1, indep | singleton(e), grown, elim.extended(y, q));
          continue;
        }
        // a_e = sum_j y[pivot_row[j]] * a_{order[j]}
        bool full = true;
        for (int p : elim.pivot_row)
          if (y(p) == 0) full = false;
        if (!full) continue;
        SignedCircuit c;
        c.support = indep | singleton(e);
        c.positive = singleton(e);
        for (std::size_t j = 0; j < order.size(); ++j)
          if (y(elim.pivot_row[j]) < 0) c.positive |= singleton(order[j]);
        if (!contains(c.positive, weakest(c.support))) c = c.flipped();
        circuits.push_back(c);
      }
    };
    dfs(dfs, 0, 0, {}, Elimination(r));

    for (const auto& c : circuits) {
      IntVector sum = IntVector::Zero(r);
      for (int e : members(c.support)) sum += c.sign(e) * a.col(e);
      if (!sum.isZero()) throw VerificationError("signed circuit relation does not vanish");
    }
    std::sort(circuits.begin(), circuits.end(), [](const SignedCircuit& x, const SignedCircuit& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return x.support < y.support;
    });
    std::sort(bases.begin(), bases.end());
    cache_->circuits = std::move(circuits);
    cache_->bases = std::move(bases);
  });
}

const std::vector<SignedCircuit>& Matroid::signed_circuits() const {
  enumerate();
  return cache_->circuits;
}

std::vector<ElementSet> Matroid::circuits() const {
  std::vector<ElementSet> out;
  for (const auto& c : signed_circuits()) out.push_back(c.support);
  return out;
}

const std::vector<ElementSet>& Matroid::bases() const {
  enumerate();
  return cache_->bases;
}

bool Matroid::is_independent(ElementSet s) const {
  IntMatrix sub(rank(), cardinality(s));
  int k = 0;
  for (int e : members(s)) sub.col(k++) = column(e);
  return sepkit::rank(sub) == cardinality(s);
}

// ----------------------------------------------------------- operations

IntMatrix pivot(const IntMatrix& a, Eigen::Index row, Eigen::Index col) {
  const int s = a(row, col);
  if (s != 1 && s != -1) throw NotTotallyUnimodular("pivot entry is not ±1");
  IntMatrix out = a;
  out.row(row) *= s;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    if (r == row || a(r, col) == 0) continue;
    out.row(r) -= a(r, col) * out.row(row);
  }
  check_unit_range(out);
  return out;
}

Matroid cycle_matroid(const Graph& g) {
  if (g.vertex_count() < 1) throw InputError("graph needs at least one vertex");
  auto comp = g.components();
  std::vector<bool> is_root(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(v)]);
    if (!seen[c]) {
      seen[c] = true;
      is_root[static_cast<std::size_t>(v)] = true;
    }
  }
  std::vector<int> row_of(static_cast<std::size_t>(g.vertex_count()), -1);
  int rows = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!is_root[static_cast<std::size_t>(v)]) row_of[static_cast<std::size_t>(v)] = rows++;
  IntMatrix a = IntMatrix::Zero(rows, g.edge_count());
  std::vector<std::string> labels;
  for (int j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edge(j);
    labels.push_back(e.label);
    if (e.tail == e.head) continue;
    if (int r = row_of[static_cast<std::size_t>(e.tail)]; r >= 0) a(r, j) += 1;
    if (int r = row_of[static_cast<std::size_t>(e.head)]; r >= 0) a(r, j) -= 1;
  }
  return Matroid(std::move(a), std::move(labels));
}

Matroid standard_form(const Matroid& m, std::vector<int>* source_column) {
  const int r = m.rank();
  const int n = m.size();
  const IntMatrix& a = m.matrix();
  Elimination elim(r);
  std::vector<int> basis;
  for (int e = 0; e < n && static_cast<int>(basis.size()) < r; ++e) {
    IntVector y = elim.transform * a.col(e);
    check_unit_range(y);
    int q = elim.free_row(y);
    if (q < 0) continue;
    elim = elim.extended(y, q);
    basis.push_back(e);
  }
  if (static_cast<int>(basis.size()) != r) throw InputError("representation is rank deficient");
  IntMatrix reduced = elim.transform * a;
  check_unit_range(reduced);

  std::vector<int> order = basis;
  for (int e = 0; e < n; ++e)
    if (std::find(basis.begin(), basis.end(), e) == basis.end()) order.push_back(e);
  IntMatrix out(r, n);
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < r; ++i) out(i, k) = reduced(elim.pivot_row[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(k)]);
    labels.push_back(m.label(order[static_cast<std::size_t>(k)]));
  }
  if (source_column) *source_column = order;
  return Matroid(std::move(out), std::move(labels));
}

Matroid dual(const Matroid& m) {
  std::vector<int> src;
  Matroid sf = standard_form(m, &src);
  const int r = m.rank();
  const int n = m.size();
  const int k = n - r;
  IntMatrix d = sf.matrix().rightCols(k);
  IntMatrix std_dual(k, n);
  std_dual.leftCols(r) = -d.transpose();
  std_dual.rightCols(k) = IntMatrix::Identity(k, k);
  IntMatrix out(k, n);
  for (int c = 0; c < n; ++c) out.col(src[static_cast<std::size_t>(c)]) = std_dual.col(c);
  return Matroid(std::move(out), m.labels());
}

Matroid minor(const Matroid& m, ElementSet deletions, ElementSet contractions) {
  if (deletions & contractions) throw InputError("an element is both deleted and contracted");
  if ((deletions | contractions) & ~m.ground()) throw InputError("minor refers to elements outside the ground set");
  IntMatrix a = m.matrix();
  std::vector<bool> row_alive(static_cast<std::size_t>(a.rows()), true);
  for (int e : members(contractions)) {
    Eigen::Index q = -1;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (row_alive[static_cast<std::size_t>(i)] && a(i, e) != 0) {
        q = i;
        break;
      }
    }
    if (q < 0) continue;  // a loop: contraction is deletion
    a = pivot(a, q, e);
    row_alive[static_cast<std::size_t>(q)] = false;
  }
  std::vector<Eigen::Index> rows;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    if (row_alive[static_cast<std::size_t>(i)]) rows.push_back(i);
  const ElementSet keep = m.ground() & ~deletions & ~contractions;
  auto cols = members(keep);
  IntMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(rows[i], cols[j]);
    labels.push_back(m.label(cols[j]));
  }
  return Matroid(std::move(out), std::move(labels));
}

Matroid minor(const Matroid& m, const std::vector<std::string>& deletions,
              const std::vector<std::string>& contractions) {
  return minor(m, m.elements(deletions), m.elements(contractions));
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2, Relabeling* relabel) {
  std::vector<std::string> labels = m1.labels();
  std::unordered_set<std::string> taken(labels.begin(), labels.end());
  for (const auto& l : m2.labels()) {
    std::string name = l;
    for (int k = 2; taken.count(name) != 0; ++k) name = l + "_" + std::to_string(k);
    if (name != l && relabel) relabel->emplace_back(l, name);
    taken.insert(name);
    labels.push_back(name);
  }
  IntMatrix a = IntMatrix::Zero(m1.rank() + m2.rank(), m1.size() + m2.size());
  a.topLeftCorner(m1.rank(), m1.size()) = m1.matrix();
  a.bottomRightCorner(m2.rank(), m2.size()) = m2.matrix();
  return Matroid(std::move(a), std::move(labels));
}

Matroid relabel(const Matroid& m, const Relabeling& renames) {
  std::vector<std::string> labels = m.labels();
  for (const auto& [from, to] : renames) labels[static_cast<std::size_t>(m.element(from))] = to;
  return Matroid(m.matrix(), std::move(labels));
}

namespace {

using LabelSet = std::set<std::string>;

std::set<LabelSet> circuit_family(const Matroid& m) {
  std::set<LabelSet> out;
  for (ElementSet c : m.circuits()) {
    auto ls = m.labels_of(c);
    out.emplace(ls.begin(), ls.end());
  }
  return out;
}

// Row-reduce so that column e is the unit vector at `target_row`.
IntMatrix unit_column(const IntMatrix& a, int e, Eigen::Index target_row) {
  Eigen::Index q = -1;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (a(i, e) != 0) {
      q = i;
      break;
    }
  }
  IntMatrix out = pivot(a, q, e);
  if (q != target_row) out.row(q).swap(out.row(target_row));
  return out;
}

}  // namespace

Matroid parallel_connection(const Matroid& m1, const Matroid& m2, const std::string& p) {
  const int p1 = m1.element(p);
  const int p2 = m2.element(p);
  for (const auto& l : m2.labels()) {
    if (l != p && m1.find(l)) throw InputError("parallel connection operands share label '" + l + "' besides the basepoint");
  }
  if (m1.is_loop(p1)) return direct_sum(m1, contraction(m2, p2));
  if (m1.is_coloop(p1)) return direct_sum(deletion(m1, p1), m2);
  // The degenerate rules are stated for m1; the operation is symmetric.
  if (m2.is_loop(p2)) return direct_sum(contraction(m1, p1), m2);
  if (m2.is_coloop(p2)) return direct_sum(m1, deletion(m2, p2));

  const int r1 = m1.rank(), r2 = m2.rank();
  IntMatrix a1 = unit_column(m1.matrix(), p1, r1 - 1);
  IntMatrix a2 = unit_column(m2.matrix(), p2, 0);
  IntMatrix glued = IntMatrix::Zero(r1 + r2 - 1, m1.size() + m2.size() - 1);
  glued.topLeftCorner(r1, m1.size()) = a1;
  std::vector<std::string> labels = m1.labels();
  int col = m1.size();
  for (int e = 0; e < m2.size(); ++e) {
    if (e == p2) continue;
    glued.block(r1 - 1, col, r2, 1) = a2.col(e);
    labels.push_back(m2.label(e));
    ++col;
  }
  Matroid result(std::move(glued), std::move(labels));

  std::set<LabelSet> expected = circuit_family(m1);
  auto c2 = circuit_family(m2);
  expected.insert(c2.begin(), c2.end());
  for (const auto& x : circuit_family(m1)) {
    if (!x.count(p)) continue;
    for (const auto& y : c2) {
      if (!y.count(p)) continue;
      LabelSet u = x;
      u.insert(y.begin(), y.end());
      u.erase(p);
      expected.insert(u);
    }
  }
  if (circuit_family(result) != expected) {
    throw VerificationError("glued representation does not realize the parallel connection");
  }
  return result;
}

bool is_bipartite(const Matroid& m) {
  const auto& cs = m.signed_circuits();
  return std::all_of(cs.begin(), cs.end(), [](const SignedCircuit& c) { return c.size() % 2 == 0; });
}

Matroid coloops(int k) {
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back("c" + std::to_string(i));
  return Matroid(IntMatrix::Identity(k, k), std::move(labels));
}

Matroid dual_k3n(int n) {
  if (n < 2) throw InputError("dual_k3n needs n >= 2");
  const int r = 2 * (n - 1);
  IntMatrix a = IntMatrix::Zero(r, 3 * n);
  a.leftCols(r) = IntMatrix::Identity(r, r);
  for (int i = 0; i < r; ++i) {
    a(i, r) = 1;
    a(i, r + 1 + (i % 2)) = 1;  // odd rows (1-based) feed the second column
  }
  for (int j = 1; j <= n - 1; ++j) {
    a(2 * j - 2, r + 2 + j) = -1;
    a(2 * j - 1, r + 2 + j) = -1;
  }
  return Matroid(std::move(a), default_labels(3 * n));
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw InputError("complete bipartite graph needs positive part sizes");
  Graph g(m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 1) throw InputError("cycle needs at least one vertex");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace sepkit
