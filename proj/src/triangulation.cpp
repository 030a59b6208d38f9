#include "sepkit/triangulation.hpp"

#include <algorithm>
#include <atomic>
#include <queue>

#include "sepkit/errors.hpp"
#include "sepkit/parallel.hpp"

namespace sepkit {

VariableOrder::VariableOrder(std::vector<int> elements) : elements_(std::move(elements)) {
  rank_.assign(elements_.size(), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const int e = elements_[i];
    if (e < 0 || e >= static_cast<int>(elements_.size()) || rank_[static_cast<std::size_t>(e)] >= 0) {
      throw InputError("element order must be a permutation of the ground set");
    }
    rank_[static_cast<std::size_t>(e)] = static_cast<int>(i);
  }
}

VariableOrder VariableOrder::ground(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i;
  return VariableOrder(std::move(e));
}

int VariableOrder::weakest_of(ElementSet s) const {
  int best = -1;
  for (int e : members(s))
    if (best < 0 || rank_of(e) < rank_of(best)) best = e;
  return best;
}

int grevlex_compare(const OrientedSet& a, const OrientedSet& b, const VariableOrder& order) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.with_origin != b.with_origin) return a.with_origin ? -1 : 1;
  // Walk variables from the weakest; the first one present in exactly one
  // monomial decides, and the monomial holding it is the smaller.
  for (int e : order.elements()) {
    for (int s : {1, -1}) {
      const bool in_a = a.sign(e) == s;
      const bool in_b = b.sign(e) == s;
      if (in_a != in_b) return in_a ? -1 : 1;
    }
  }
  return 0;
}

namespace {

void for_each_subset(const std::vector<int>& pool, int k, auto&& visit) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    ElementSet s = 0;
    for (int i : idx) s |= singleton(pool[static_cast<std::size_t>(i)]);
    visit(s);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

OrientedSet oriented(ElementSet subset, ElementSet positive) {
  return {subset & positive, subset & ~positive, false};
}

}  // namespace

InitialMonomialSet initial_monomials(const Matroid& m, const VariableOrder& order) {
  InitialMonomialSet out;
  const auto& circuits = m.signed_circuits();
  const IntMatrix& a = m.matrix();
  for (std::size_t ci = 0; ci < circuits.size(); ++ci) {
    const SignedCircuit& c = circuits[ci];
    const int size = c.size();
    const int k = size / 2;
    const bool even = size % 2 == 0;
    const int w = order.weakest_of(c.support);
    for (int eps : {1, -1}) {
      const ElementSet pos = eps > 0 ? c.positive : c.negative();
      std::vector<int> pool = members(even ? c.support & ~singleton(w) : c.support);
      for_each_subset(pool, even ? k : k + 1, [&](ElementSet subset) {
        Generator g;
        g.circuit = static_cast<int>(ci);
        g.initial = oriented(subset, pos);
        // Trailing term uses the opposite orientation on the complement.
        ElementSet rest = c.support & ~subset;
        g.trailing = {rest & ~pos, rest & pos, !even};
        IntVector lhs = IntVector::Zero(m.rank());
        IntVector rhs = IntVector::Zero(m.rank());
        for (int e : members(subset)) lhs += g.initial.sign(e) * a.col(e);
        for (int e : members(rest)) rhs += g.trailing.sign(e) * a.col(e);
        if (lhs != rhs || grevlex_compare(g.initial, g.trailing, order) <= 0) {
          ++out.discarded;
          return;
        }
        out.generators.push_back(g);
      });
    }
  }
  return out;
}

bool is_standard(const OrientedSet& s, const InitialMonomialSet& gens) {
  if (!s.consistent()) return false;
  return std::none_of(gens.generators.begin(), gens.generators.end(),
                      [&](const Generator& g) { return g.initial.divides(s); });
}

StandardnessOracle::StandardnessOracle(const Matroid& m, const VariableOrder& order)
    : through_(static_cast<std::size_t>(m.size())) {
  for (const auto& c : m.signed_circuits()) {
    Entry entry;
    entry.support = c.support;
    entry.positive = c.positive;
    entry.negative = c.negative();
    const int size = c.size();
    if (size % 2 == 0) {
      entry.counted = c.support & ~singleton(order.weakest_of(c.support));
      entry.threshold = size / 2;
    } else {
      entry.counted = c.support;
      entry.threshold = size / 2 + 1;
    }
    for (int e : members(c.support)) through_[static_cast<std::size_t>(e)].push_back(static_cast<int>(circuits_.size()));
    circuits_.push_back(entry);
  }
}

bool StandardnessOracle::violated(const Entry& c, const OrientedSet& s) const {
  const ElementSet along = (s.plus & c.positive) | (s.minus & c.negative);
  const ElementSet against = (s.plus & c.negative) | (s.minus & c.positive);
  return cardinality(along & c.counted) >= c.threshold || cardinality(against & c.counted) >= c.threshold;
}

bool StandardnessOracle::is_standard(const OrientedSet& s) const {
  if (!s.consistent()) return false;
  return std::none_of(circuits_.begin(), circuits_.end(), [&](const Entry& c) { return violated(c, s); });
}

bool StandardnessOracle::still_standard(const OrientedSet& s, int e) const {
  if (!s.consistent()) return false;
  for (int ci : through_[static_cast<std::size_t>(e)])
    if (violated(circuits_[static_cast<std::size_t>(ci)], s)) return false;
  return true;
}

std::vector<OrientedSet> enumerate_facets(const Matroid& m, const VariableOrder& order,
                                          const TriangulationOptions& opts) {
  if (m.rank() == 0) throw InputError("triangulation needs positive rank");
  const auto& bases = m.bases();
  const double work = static_cast<double>(bases.size()) * std::ldexp(1.0, m.rank());
  if (work > opts.budget_bases) {
    throw BudgetExceeded("bases x orientations (" + std::to_string(static_cast<long long>(work)) + ") exceeds the budget");
  }
  StandardnessOracle oracle(m, order);
  std::vector<std::vector<OrientedSet>> per_basis(bases.size());
  parallel_for(bases.size(), opts.workers, [&](unsigned, std::size_t bi) {
    const std::vector<int> elems = members(bases[bi]);
    auto& out = per_basis[bi];
    auto dfs = [&](auto&& self, std::size_t i, OrientedSet s) -> void {
      if (i == elems.size()) {
        out.push_back(s);
        return;
      }
      const int e = elems[i];
      OrientedSet up = s;
      up.plus |= singleton(e);
      if (oracle.still_standard(up, e)) self(self, i + 1, up);
      OrientedSet down = s;
      down.minus |= singleton(e);
      if (oracle.still_standard(down, e)) self(self, i + 1, down);
    };
    dfs(dfs, 0, OrientedSet{});
  });
  std::vector<OrientedSet> facets;
  for (auto& v : per_basis) facets.insert(facets.end(), v.begin(), v.end());
  return facets;
}

std::vector<Integer> face_f_vector(const Matroid& m, const VariableOrder& order, const TriangulationOptions& opts) {
  StandardnessOracle oracle(m, order);
  const int n = m.size();
  const int r = m.rank();
  std::atomic<long long> visited{0};
  const auto budget = static_cast<long long>(opts.budget_bases);
  // Tasks are (first element, sign); every face has a unique least element.
  std::vector<std::vector<long long>> per_task(static_cast<std::size_t>(2 * n), std::vector<long long>(static_cast<std::size_t>(r + 1), 0));
  parallel_for(static_cast<std::size_t>(2 * n), opts.workers, [&](unsigned, std::size_t task) {
    auto& counts = per_task[task];
    long long local = 0;
    auto dfs = [&](auto&& self, int next, const OrientedSet& s, int size) -> void {
      ++counts[static_cast<std::size_t>(size)];
      if (++local % 4096 == 0 && visited.fetch_add(4096) + 4096 > budget) {
        throw BudgetExceeded("face enumeration exceeds the budget");
      }
      if (size == r) return;
      for (int e = next; e < n; ++e) {
        for (int sign : {1, -1}) {
          OrientedSet t = s;
          (sign > 0 ? t.plus : t.minus) |= singleton(e);
          if (oracle.still_standard(t, e)) self(self, e + 1, t, size + 1);
        }
      }
    };
    const int e = static_cast<int>(task / 2);
    OrientedSet start;
    (task % 2 == 0 ? start.plus : start.minus) |= singleton(e);
    if (oracle.still_standard(start, e)) dfs(dfs, e + 1, start, 1);
    const long long rest = local % 4096;
    if (visited.fetch_add(rest) + rest > budget) throw BudgetExceeded("face enumeration exceeds the budget");
  });
  std::vector<Integer> f(static_cast<std::size_t>(r + 1), 0);
  f[0] = 1;
  for (const auto& counts : per_task)
    for (int i = 1; i <= r; ++i) f[static_cast<std::size_t>(i)] += Integer(static_cast<long>(counts[static_cast<std::size_t>(i)]));
  return f;
}

IntPolynomial h_from_f(const std::vector<Integer>& f, int d) {
  if (static_cast<int>(f.size()) != d + 1) throw InputError("f-vector length must be d+1");
  std::vector<Integer> h(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) {
    Integer acc = 0;
    for (int i = 0; i <= k; ++i) {
      Integer term = binomial(d - i, k - i) * f[static_cast<std::size_t>(i)];
      if ((k - i) % 2 == 0) acc += term;
      else acc -= term;
    }
    if (acc < 0) {
      std::string dump;
      for (const auto& x : f) dump += " " + to_string(x);
      throw VerificationError("negative h-vector entry at degree " + std::to_string(k) + "; f =" + dump);
    }
    h[static_cast<std::size_t>(k)] = acc;
  }
  return IntPolynomial(std::move(h));
}

TriangulationSummary triangulate(const Matroid& m, const VariableOrder& order, const TriangulationOptions& opts) {
  TriangulationSummary s;
  s.f_vector = face_f_vector(m, order, opts);
  s.facet_count = s.f_vector.back();
  s.h_vector = h_from_f(s.f_vector, m.rank());
  if (s.h_vector(1) != s.facet_count) throw VerificationError("h-vector sum differs from facet count");
  return s;
}

int edges_pointing_away(const Graph& g, int v, const OrientedSet& tree) {
  const int nv = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(nv));
  for (int e : members(tree.support())) {
    const Edge& ed = g.edge(e);
    adj[static_cast<std::size_t>(ed.tail)].emplace_back(ed.head, e);
    adj[static_cast<std::size_t>(ed.head)].emplace_back(ed.tail, e);
  }
  std::vector<int> depth(static_cast<std::size_t>(nv), -1);
  std::queue<int> q;
  depth[static_cast<std::size_t>(v)] = 0;
  q.push(v);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (auto [y, e] : adj[static_cast<std::size_t>(x)]) {
      if (depth[static_cast<std::size_t>(y)] < 0) {
        depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
        q.push(y);
      }
    }
  }
  if (std::count(depth.begin(), depth.end(), -1) != 0 || cardinality(tree.support()) != nv - 1) {
    throw InputError("oriented set is not a spanning tree");
  }
  int away = 0;
  for (int e : members(tree.support())) {
    const Edge& ed = g.edge(e);
    const int tail = tree.sign(e) > 0 ? ed.tail : ed.head;
    const int head = tree.sign(e) > 0 ? ed.head : ed.tail;
    if (depth[static_cast<std::size_t>(tail)] < depth[static_cast<std::size_t>(head)]) ++away;
  }
  return away;
}

IntPolynomial hstar_by_pointing(const Graph& g, int v, const std::vector<OrientedSet>& facets) {
  if (!g.is_connected()) throw InputError("pointing statistic needs a connected graph");
  if (v < 0 || v >= g.vertex_count()) throw InputError("base vertex out of range");
  std::vector<Integer> h(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& f : facets) h[static_cast<std::size_t>(edges_pointing_away(g, v, f))] += 1;
  return IntPolynomial(std::move(h));
}

std::string format_oriented(const Matroid& m, const OrientedSet& s) {
  std::string out;
  if (s.with_origin) out = "z";
  for (int e : members(s.support())) {
    if (!out.empty()) out += ' ';
    out += (s.sign(e) > 0 ? '+' : '-') + m.label(e);
  }
  return out;
}

}  // namespace sepkit
