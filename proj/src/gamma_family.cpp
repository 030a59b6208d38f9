#include "sepkit/gamma_family.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "sepkit/errors.hpp"
#include "sepkit/parallel.hpp"

namespace sepkit {

namespace {

using Adjacency = std::vector<std::vector<std::pair<int, int>>>;  // (neighbor, edge)

Adjacency adjacency(const Graph& g, ElementSet edges) {
  Adjacency adj(static_cast<std::size_t>(g.vertex_count()));
  for (int e : members(edges)) {
    const Edge& ed = g.edge(e);
    adj[static_cast<std::size_t>(ed.tail)].emplace_back(ed.head, e);
    adj[static_cast<std::size_t>(ed.head)].emplace_back(ed.tail, e);
  }
  return adj;
}

std::vector<int> bfs_depth(const Adjacency& adj, int root) {
  std::vector<int> depth(adj.size(), -1);
  std::queue<int> q;
  depth[static_cast<std::size_t>(root)] = 0;
  q.push(root);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (auto [y, e] : adj[static_cast<std::size_t>(x)]) {
      (void)e;
      if (depth[static_cast<std::size_t>(y)] < 0) {
        depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
        q.push(y);
      }
    }
  }
  return depth;
}

int oriented_tail(const Graph& g, const OrientedSet& s, int e) {
  return s.sign(e) > 0 ? g.edge(e).tail : g.edge(e).head;
}
int oriented_head(const Graph& g, const OrientedSet& s, int e) {
  return s.sign(e) > 0 ? g.edge(e).head : g.edge(e).tail;
}

// f points away from h when its tail stays on h's side after deleting f.
bool points_away_from(const Graph& g, const OrientedSet& tree, int f, int h) {
  const Adjacency adj = adjacency(g, tree.support() & ~singleton(f));
  const std::vector<int> depth = bfs_depth(adj, oriented_tail(g, tree, f));
  return depth[static_cast<std::size_t>(g.edge(h).tail)] >= 0;
}

}  // namespace

GammaGraph gamma_graph(int n) {
  if (n < 1) throw InputError("gamma graph needs n >= 1");
  if (3 * n + 1 > 64) throw InputError("gamma graph too large for 64-element ground sets");
  GammaGraph g;
  g.n = n;
  g.graph = Graph(2 * n + 1);
  auto name = [&](int vertex) {
    return vertex <= n ? "u" + std::to_string(vertex + 1) : "v" + std::to_string(vertex - n);
  };
  for (int i = 1; i <= n; ++i) {
    g.graph.add_edge(g.u(i), g.u(i + 1), false, name(g.u(i)) + "-" + name(g.u(i + 1)));
    g.graph.add_edge(g.u(i), g.v(i), false, name(g.u(i)) + "-" + name(g.v(i)));
    g.graph.add_edge(g.v(i), g.u(i + 1), false, name(g.v(i)) + "-" + name(g.u(i + 1)));
  }
  g.tilde = g.graph.add_edge(g.u(n + 1), g.u(1), true, name(g.u(n + 1)) + "-" + name(g.u(1)));
  return g;
}

VariableOrder gamma_order(const GammaGraph& g) {
  std::vector<int> elements{g.tilde};
  for (int e = 0; e < g.graph.edge_count(); ++e)
    if (e != g.tilde) elements.push_back(e);
  return VariableOrder(std::move(elements));
}

std::vector<DirectedCycle> simple_cycles(const Graph& g) {
  const Adjacency adj = adjacency(g, full_set(g.edge_count()));
  std::vector<DirectedCycle> out;
  std::vector<ElementSet> seen;
  std::vector<bool> on_path(static_cast<std::size_t>(g.vertex_count()), false);
  for (int s = 0; s < g.vertex_count(); ++s) {
    // Cycles whose smallest vertex is s.
    auto dfs = [&](auto&& self, int x, ElementSet used, ElementSet fwd) -> void {
      for (auto [y, e] : adj[static_cast<std::size_t>(x)]) {
        if (contains(used, e) || y < s) continue;
        const ElementSet fwd2 = g.edge(e).tail == x && g.edge(e).head == y ? fwd | singleton(e) : fwd;
        if (y == s) {
          const ElementSet edges = used | singleton(e);
          if (std::find(seen.begin(), seen.end(), edges) == seen.end()) {
            seen.push_back(edges);
            out.push_back({edges, fwd2});
          }
          continue;
        }
        if (on_path[static_cast<std::size_t>(y)]) continue;
        on_path[static_cast<std::size_t>(y)] = true;
        self(self, y, used | singleton(e), fwd2);
        on_path[static_cast<std::size_t>(y)] = false;
      }
    };
    on_path[static_cast<std::size_t>(s)] = true;
    dfs(dfs, s, 0, 0);
    on_path[static_cast<std::size_t>(s)] = false;
  }
  return out;
}

namespace {

// Edges of the tree on cycle c running with and against its direction.
std::pair<ElementSet, ElementSet> split_on_cycle(const DirectedCycle& c, const OrientedSet& t) {
  const ElementSet backward = c.edges & ~c.forward;
  const ElementSet along = (t.plus & c.forward) | (t.minus & backward);
  const ElementSet against = (t.minus & c.forward) | (t.plus & backward);
  return {along, against};
}

bool cycle_ok(const GammaGraph& g, const DirectedCycle& c, const OrientedSet& t, CycleReading reading) {
  const int size = c.size();
  const auto [along, against] = split_on_cycle(c, t);
  for (ElementSet same : {along, against}) {
    const int k = cardinality(same);
    if (k <= (size - 1) / 2) continue;
    if (size % 2 == 0 && k == size / 2) {
      const bool excused = reading == CycleReading::literal ? contains(t.support(), g.tilde)
                                                            : contains(same, g.tilde);
      if (excused) continue;
    }
    return false;
  }
  return true;
}

}  // namespace

bool satisfies_cycle_condition(const GammaGraph& g, const std::vector<DirectedCycle>& cycles,
                               const OrientedSet& tree, CycleReading reading) {
  return std::all_of(cycles.begin(), cycles.end(),
                     [&](const DirectedCycle& c) { return cycle_ok(g, c, tree, reading); });
}

std::vector<OrientedSet> triangulating_trees(const GammaGraph& g, const GammaTreeOptions& opts) {
  if (g.n > opts.max_n) throw BudgetExceeded("gamma tree enumeration is limited to n <= " + std::to_string(opts.max_n));
  const Matroid m = cycle_matroid(g.graph);
  const std::vector<DirectedCycle> cycles = simple_cycles(g.graph);
  const auto& trees = m.bases();
  std::vector<std::vector<OrientedSet>> per_tree(trees.size());
  parallel_for(trees.size(), opts.workers, [&](unsigned, std::size_t ti) {
    std::vector<int> elems = members(trees[ti]);
    // ẽ first so the precise exception is decided before pruning.
    std::stable_partition(elems.begin(), elems.end(), [&](int e) { return e == g.tilde; });
    std::vector<std::vector<int>> through(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t c = 0; c < cycles.size(); ++c)
        if (contains(cycles[c].edges, elems[i])) through[i].push_back(static_cast<int>(c));
    auto dfs = [&](auto&& self, std::size_t i, OrientedSet s) -> void {
      if (i == elems.size()) {
        if (satisfies_cycle_condition(g, cycles, s, opts.reading)) per_tree[ti].push_back(s);
        return;
      }
      for (int sign : {1, -1}) {
        OrientedSet t = s;
        (sign > 0 ? t.plus : t.minus) |= singleton(elems[i]);
        // More than half of a cycle sharing a direction is never excused.
        bool dead = false;
        for (int c : through[i]) {
          const auto [along, against] = split_on_cycle(cycles[static_cast<std::size_t>(c)], t);
          const int half = cycles[static_cast<std::size_t>(c)].size() / 2;
          if (cardinality(along) > half || cardinality(against) > half) {
            dead = true;
            break;
          }
        }
        if (!dead) self(self, i + 1, t);
      }
    };
    dfs(dfs, 0, OrientedSet{});
    std::sort(per_tree[ti].begin(), per_tree[ti].end());
  });
  std::vector<OrientedSet> out;
  for (auto& v : per_tree) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<OrientedSet> triangulating_trees(int n, const GammaTreeOptions& opts) {
  return triangulating_trees(gamma_graph(n), opts);
}

TreeClassification classify(const OrientedSet& tree, const GammaGraph& g) {
  const Graph& gr = g.graph;
  const ElementSet support = tree.support();
  if (!tree.consistent() || cardinality(support) != gr.vertex_count() - 1) {
    throw InputError("oriented set is not a spanning tree");
  }
  const std::vector<int> depth = bfs_depth(adjacency(gr, support), g.u(1));
  if (std::count(depth.begin(), depth.end(), -1) != 0) throw InputError("oriented set is not a spanning tree");
  auto away = [&](int e) {
    return depth[static_cast<std::size_t>(oriented_tail(gr, tree, e))] <
           depth[static_cast<std::size_t>(oriented_head(gr, tree, e))];
  };

  TreeClassification out;
  out.eps = contains(support, g.tilde) ? 1 : 0;
  for (int e : members(support)) out.away += away(e) ? 1 : 0;

  const ElementSet inner = support & ~singleton(g.tilde);
  const std::vector<int> left_depth = bfs_depth(adjacency(gr, inner), g.u(1));
  for (int e : members(inner)) {
    if (left_depth[static_cast<std::size_t>(gr.edge(e).tail)] >= 0) {
      out.left_edges |= singleton(e);
    } else {
      out.right_edges |= singleton(e);
    }
  }
  auto side_of = [&](int e) { return contains(out.left_edges, e) ? Side::left : Side::right; };

  for (int i = 1; i <= g.n; ++i) {
    const ElementSet tri = singleton(g.chord(i)) | singleton(g.left(i)) | singleton(g.right(i));
    const ElementSet here = tri & support;
    const int k = cardinality(here);
    if (k == 1) {
      if (out.unpaired_edge) throw VerificationError("spanning tree with two unpaired edges");
      const int e = weakest(here);
      if (e == g.chord(i)) throw VerificationError("unpaired chord in a spanning tree");
      out.unpaired_edge = e;
      out.unpaired_side = side_of(e);
      continue;
    }
    if (k != 2) throw VerificationError("triangle with " + std::to_string(k) + " tree edges");
    PairInfo pair;
    pair.triangle = i;
    pair.side = side_of(weakest(here));
    for (int e : members(here)) pair.away += away(e) ? 1 : 0;
    if (contains(here, g.chord(i))) {
      ++out.c;
      const bool at_left = contains(here, g.left(i));
      const int near = at_left ? g.u(i) : g.u(i + 1);
      const int far = at_left ? g.u(i + 1) : g.u(i);
      pair.kind = depth[static_cast<std::size_t>(near)] < depth[static_cast<std::size_t>(far)] ? PairKind::alpha
                                                                                              : PairKind::beta;
    }
    out.pairs.push_back(pair);
  }
  if (out.unpaired_edge.has_value() != (out.eps == 1)) {
    throw VerificationError("unpaired edge present iff the distinguished edge is in the tree");
  }

  for (int e : members(support)) {
    if (out.unpaired_edge && e == *out.unpaired_edge) continue;
    out.modified_edges.emplace_back(oriented_tail(gr, tree, e), oriented_head(gr, tree, e));
  }
  if (out.eps == 1) {
    const int e = *out.unpaired_edge;
    out.tilde_unpaired_opposite = tree.sign(e) != tree.sign(g.tilde);
    out.tilde_unpaired_matched = points_away_from(gr, tree, e, g.tilde) == points_away_from(gr, tree, g.tilde, e);
    // The ẽ pair behaves like a chorded pair: type alpha when both edges
    // share a direction relative to u1, with the pendant at u1.
    PairInfo pair;
    pair.side = Side::right;
    pair.kind = away(e) == away(g.tilde) ? PairKind::alpha : PairKind::beta;
    pair.away = (away(g.tilde) ? 1 : 0) + (away(e) ? 1 : 0);
    const int root = pair.kind == PairKind::alpha ? g.u(1) : g.u(g.n + 1);
    const int fresh = gr.vertex_count();
    out.modified_edges.push_back(away(e) ? std::pair{root, fresh} : std::pair{fresh, root});
    out.tilde_pair = pair;
  }
  return out;
}

IntPolynomial f_pql(int p, int q, int l) {
  const int rest = 2 * l - p - q;
  if (p < 0 || q < 0 || rest < 0) throw InputError("f_pql needs p, q >= 0 and p + q <= 2l");
  std::vector<Integer> c(static_cast<std::size_t>(rest + 2 * (p + q) + 1), 0);
  for (int i = 0; i <= p; ++i)
    for (int j = 0; j <= q; ++j)
      c[static_cast<std::size_t>(rest + 2 * (i + j))] += binomial(p, i) * binomial(q, j) * binomial(rest, l - q - i + j);
  return IntPolynomial(std::move(c));
}

namespace {

using Laurent = LaurentPolynomial<Rational>;

Laurent laurent(const IntPolynomial& p) { return Laurent(to_rational(p)); }

IntPolynomial integral(const Laurent& p) { return to_integer(p.to_polynomial()); }

IntPolynomial central_sum(int upto) {
  // Σ_{a<=upto} C(2a,a) t^a
  std::vector<Integer> c;
  for (int a = 0; a <= upto; ++a) c.push_back(binomial(2 * a, a));
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial closed_hstar(int n) {
  if (n < 1) throw InputError("closed h* needs n >= 1");
  const IntPolynomial one_t = IntPolynomial::one_plus_t();
  Laurent total;
  for (int l = 0; 2 * l <= n; ++l) {
    IntPolynomial inner;
    for (int p = 0; p <= 2 * l; ++p)
      for (int q = 0; p + q <= 2 * l; ++q) inner += binomial(2 * l + 1, p + q + 1) * f_pql(p, q, l);
    const IntPolynomial middle =
        binomial(n, 2 * l) * IntPolynomial::monomial(2, 1) + binomial(n, 2 * l + 1) * (one_t * one_t);
    total += scaled_t_power(Rational(2), n - 2 * l - 1) * laurent(middle * inner);
  }
  return integral(total);
}

IntPolynomial closed_gamma_by_chords(int n) {
  if (n < 1) throw InputError("closed gamma needs n >= 1");
  Laurent total;
  for (int l = 0; 2 * l <= n; ++l) {
    const IntPolynomial middle = 2 * binomial(n, 2 * l) * IntPolynomial::monomial(1, 1) +
                                 IntPolynomial::constant(binomial(n, 2 * l + 1));
    total += scaled_t_power(Rational(2), n - 2 * l - 1) * laurent(middle * central_sum(l));
  }
  return integral(total);
}

IntPolynomial closed_gamma_by_binomial(int n) {
  if (n < 1) throw InputError("closed gamma needs n >= 1");
  IntPolynomial total;
  for (int m = 0; m <= n; ++m) {
    total += binomial(n, m) * pow(Integer(2), static_cast<unsigned long>(n - m)) *
             central_sum(m / 2).shifted(static_cast<std::size_t>(n - m));
  }
  return total;
}

IntPolynomial closed_gamma(int n) {
  IntPolynomial a = closed_gamma_by_chords(n);
  if (a != closed_gamma_by_binomial(n)) {
    throw VerificationError("the two closed gamma forms disagree at n = " + std::to_string(n));
  }
  return a;
}

Integer closed_volume(int n) {
  if (n < 1) throw InputError("closed volume needs n >= 1");
  Integer s = 0;
  for (int k = 0; k <= n; ++k) s += (k + 1) * binomial(n, k) * binomial(k, k / 2);
  return pow(Integer(2), static_cast<unsigned long>(n)) * s;
}

namespace {

struct TreeShape {
  bool even = true;
  int l = 0;
  int p = 0;
  int q = 0;
  PairKind tilde = PairKind::chordless;  // chordless: ẽ absent
};

TreeShape shape_of(const TreeClassification& c) {
  TreeShape s;
  const int chords = c.c + c.eps;
  s.even = chords % 2 == 0;
  s.l = chords / 2;
  for (const auto& p : c.pairs) {
    if (p.kind != PairKind::alpha) continue;
    (p.side == Side::left ? s.p : s.q) += 1;
  }
  if (c.tilde_pair) {
    s.tilde = c.tilde_pair->kind;
    if (s.even && s.tilde == PairKind::alpha) s.q += 1;
  }
  return s;
}

std::string kind_name(PairKind k) {
  return k == PairKind::alpha ? "alpha" : k == PairKind::beta ? "beta" : "none";
}

}  // namespace

SummandAudit summand_audit(int n, const GammaTreeOptions& opts) {
  const GammaGraph g = gamma_graph(n);
  const std::vector<OrientedSet> trees = triangulating_trees(g, opts);
  SummandAudit audit;
  audit.n = n;
  audit.oriented_trees = static_cast<long>(trees.size());
  const Matroid m = cycle_matroid(g.graph);

  // Trees sharing md(T): the unpaired edge is forgotten and only the side
  // of the pendant edge remains.
  std::map<std::pair<ElementSet, int>, std::vector<std::pair<OrientedSet, TreeClassification>>> classes;
  Integer opposite_violations = 0;
  Integer matched_violations = 0;
  for (const auto& t : trees) {
    TreeClassification c = classify(t, g);
    ElementSet kept = t.support();
    int pendant = -1;
    if (c.unpaired_edge) {
      kept &= ~singleton(*c.unpaired_edge);
      pendant = c.tilde_pair->kind == PairKind::alpha ? 0 : 1;
      if (c.c == 0) {
        if (!c.tilde_unpaired_opposite) opposite_violations += 1;
        if (!c.tilde_unpaired_matched) matched_violations += 1;
      }
    }
    classes[{kept, pendant}].emplace_back(t, std::move(c));
  }

  std::map<std::string, AuditBucket> buckets;
  auto observe = [&](const std::string& key, const std::string& witness) {
    auto& b = buckets[key];
    b.key = key;
    b.observed += 1;
    if (b.witness.empty()) b.witness = witness;
  };
  auto fail = [&](std::string msg) { audit.failures.push_back(std::move(msg)); };

  Integer polynomial_mismatches = 0;
  Integer orientation_mismatches = 0;
  for (const auto& [key, members_] : classes) {
    const std::string witness = format_oriented(m, members_.front().first);
    const TreeShape s = shape_of(members_.front().second);
    for (const auto& [t, c] : members_) {
      const TreeShape u = shape_of(c);
      if (u.even != s.even || u.l != s.l || u.p != s.p || u.q != s.q || u.tilde != s.tilde) {
        fail("shape differs inside one modified tree: " + format_oriented(m, t));
      }
    }
    const std::string tag = (s.even ? "even" : "odd") + std::string(" l=") + std::to_string(s.l) +
                            " p=" + std::to_string(s.p) + " q=" + std::to_string(s.q);
    observe(tag, witness);
    observe(tag + " tilde=" + kind_name(s.tilde), witness);

    std::vector<Integer> poly(static_cast<std::size_t>(2 * n + 1), 0);
    for (const auto& [t, c] : members_) poly[static_cast<std::size_t>(c.away)] += 1;
    const IntPolynomial observed(std::move(poly));
    IntPolynomial expected;
    if (s.even) {
      expected = pow(Integer(2), static_cast<unsigned long>(n - 2 * s.l)) *
                 f_pql(s.p, s.q, s.l).shifted(static_cast<std::size_t>(n - 2 * s.l));
    } else {
      const IntPolynomial tail = s.tilde == PairKind::alpha ? IntPolynomial{1, 0, 1} : IntPolynomial{0, 2};
      expected = pow(Integer(2), static_cast<unsigned long>(n - 2 * s.l - 1)) *
                 f_pql(s.p, s.q, s.l).shifted(static_cast<std::size_t>(n - 2 * s.l - 1)) * tail;
    }
    if (observed != expected) {
      polynomial_mismatches += 1;
      if (polynomial_mismatches <= 3) {
        fail("summand mismatch for " + witness + ": " + to_string(observed) + " vs " + to_string(expected));
      }
    }

    // i alpha pairs in L and j in R point away from u1.
    if (s.even) {
      std::map<std::pair<int, int>, Integer> seen;
      const int rest = 2 * s.l - s.p - s.q;
      for (const auto& [t, c] : members_) {
        int i = 0, j = 0;
        for (const auto& p : c.pairs)
          if (p.kind == PairKind::alpha && p.away == 2) (p.side == Side::left ? i : j) += 1;
        if (c.tilde_pair && c.tilde_pair->kind == PairKind::alpha && c.tilde_pair->away == 2) j += 1;
        if (c.away != (n - 2 * s.l) + 2 * (i + j) + rest) orientation_mismatches += 1;
        seen[{i, j}] += 1;
      }
      for (int i = 0; i <= s.p; ++i)
        for (int j = 0; j <= s.q; ++j) {
          const Integer want = pow(Integer(2), static_cast<unsigned long>(n - 2 * s.l)) * binomial(s.p, i) *
                               binomial(s.q, j) * binomial(rest, s.l - s.q - i + j);
          auto it = seen.find({i, j});
          const Integer got = it == seen.end() ? Integer(0) : it->second;
          if (got != want) orientation_mismatches += 1;
        }
    }
  }

  // Expected tree counts from the counting argument.
  for (int l = 0; 2 * l <= n; ++l) {
    for (int p = 0; p <= 2 * l; ++p) {
      for (int q = 0; p + q <= 2 * l; ++q) {
        const std::string tag = " l=" + std::to_string(l) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
        const Integer even_total = binomial(n, 2 * l) * binomial(2 * l + 1, p + q + 1);
        buckets["even" + tag].expected = even_total;
        Integer a = 0, b = 0;
        for (int i = 0; i <= n - 1; ++i) {
          a += binomial(n - i - 1, p) * binomial(i, q - 1) * binomial(n - (p + q), 2 * l - (p + q));
          b += binomial(n - i - 1, p) * binomial(i, q) * binomial(n - 1 - (p + q), 2 * l - 1 - (p + q));
        }
        buckets["even" + tag + " tilde=alpha"].expected = q >= 1 ? a : Integer(0);
        buckets["even" + tag + " tilde=beta"].expected =
            q >= 1 ? b : binomial(n, 2 * l) * binomial(2 * l, p + 1);
        buckets["even" + tag + " tilde=none"].expected = q == 0 ? binomial(n, 2 * l) * binomial(2 * l, p) : Integer(0);
        const Integer odd_each = binomial(n, 2 * l + 1) * binomial(2 * l + 1, p + q + 1);
        buckets["odd" + tag].expected = 2 * odd_each;
        buckets["odd" + tag + " tilde=alpha"].expected = odd_each;
        buckets["odd" + tag + " tilde=beta"].expected = odd_each;
      }
    }
  }
  for (auto& [key, b] : buckets) {
    if (b.key.empty()) b.key = key;
    if (!b.ok()) {
      fail("bucket " + key + ": expected " + to_string(b.expected) + ", observed " + to_string(b.observed));
    }
    if (b.expected != 0 || b.observed != 0) audit.buckets.push_back(b);
  }
  auto summary = [&](const std::string& key, const Integer& expected, const Integer& observed) {
    AuditBucket b;
    b.key = key;
    b.expected = expected;
    b.observed = observed;
    if (!b.ok()) fail(key + ": expected " + to_string(expected) + ", observed " + to_string(observed));
    audit.buckets.push_back(b);
  };
  summary("oriented trees = volume", closed_volume(n), Integer(audit.oriented_trees));
  summary("chordless trees with the unpaired edge parallel to the distinguished edge", 0, opposite_violations);
  summary("chordless trees with the unpaired edge and the distinguished edge not mutually away or toward", 0,
          matched_violations);
  summary("per-tree summand mismatches", 0, polynomial_mismatches);
  summary("orientation bucket mismatches", 0, orientation_mismatches);
  return audit;
}

}  // namespace sepkit
