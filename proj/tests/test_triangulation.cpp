#include <gtest/gtest.h>

#include <random>

#include "sepkit/ehrhart.hpp"
#include "sepkit/linalg.hpp"
#include "sepkit/triangulation.hpp"

using namespace sepkit;

namespace {

Graph wheel(int spokes) {
  Graph g(spokes + 1);
  for (int i = 0; i < spokes; ++i) {
    g.add_edge(0, i + 1);
    g.add_edge(i + 1, (i + 1) % spokes + 1);
  }
  return g;
}

Graph prism() {
  Graph g(6);
  for (int i = 0; i < 3; ++i) {
    g.add_edge(i, (i + 1) % 3);
    g.add_edge(i + 3, (i + 1) % 3 + 3);
    g.add_edge(i, i + 3);
  }
  return g;
}

Graph bowtie() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 2);
  return g;
}

std::vector<Graph> small_graphs() {
  return {cycle_graph(3), cycle_graph(5),        cycle_graph(6), complete_graph(4), complete_graph(5),
          wheel(5),       complete_bipartite(2, 3), complete_bipartite(3, 3), prism(), bowtie(), path_graph(5)};
}

IntVector signed_sum(const Matroid& m, const OrientedSet& s) {
  IntVector v = IntVector::Zero(m.rank());
  for (int e : members(s.plus)) v += m.column(e);
  for (int e : members(s.minus)) v -= m.column(e);
  return v;
}

}  // namespace

TEST(Triangulation, GeneratorsAreExactBinomials) {
  for (const Graph& g : small_graphs()) {
    const Matroid m = cycle_matroid(g);
    const InitialMonomialSet gens = initial_monomials(m, VariableOrder::ground(m.size()));
    EXPECT_EQ(gens.discarded, 0);
    for (const auto& gen : gens.generators) {
      EXPECT_FALSE(gen.initial.with_origin);
      EXPECT_EQ(gen.initial.size(), gen.trailing.size());
      EXPECT_EQ(signed_sum(m, gen.initial), signed_sum(m, gen.trailing));
      EXPECT_GT(grevlex_compare(gen.initial, gen.trailing, VariableOrder::ground(m.size())), 0);
    }
  }
}

TEST(Triangulation, ThresholdOracleMatchesDivisibility) {
  // Exhaustive over every consistent oriented subset.
  for (const Matroid& m : {cycle_matroid(complete_graph(4)), cycle_matroid(bowtie()), dual_k3n(3)}) {
    const VariableOrder order = VariableOrder::ground(m.size());
    const InitialMonomialSet gens = initial_monomials(m, order);
    const StandardnessOracle fast(m, order);
    long pow3 = 1;
    for (int i = 0; i < m.size(); ++i) pow3 *= 3;
    for (long code = 0; code < pow3; ++code) {
      OrientedSet s;
      long c = code;
      for (int e = 0; e < m.size(); ++e, c /= 3) {
        if (c % 3 == 1) s.plus |= singleton(e);
        if (c % 3 == 2) s.minus |= singleton(e);
      }
      ASSERT_EQ(fast.is_standard(s), is_standard(s, gens)) << format_oriented(m, s);
    }
  }
}

TEST(Triangulation, FacetsAreUnimodularSimplices) {
  for (const Graph& g : small_graphs()) {
    const Matroid m = cycle_matroid(g);
    for (const auto& f : enumerate_facets(m, VariableOrder::ground(m.size()))) {
      ASSERT_EQ(cardinality(f.support()), m.rank());
      IntMatrix cols(m.rank(), m.rank());
      int k = 0;
      for (int e : members(f.support())) cols.col(k++) = f.sign(e) * m.column(e);
      const Integer d = determinant(cols);
      EXPECT_TRUE(d == 1 || d == -1);
    }
  }
}

TEST(Triangulation, StandardSetsAreDownwardClosed) {
  std::mt19937 rng(3);
  for (const Graph& g : small_graphs()) {
    const Matroid m = cycle_matroid(g);
    const VariableOrder order = VariableOrder::ground(m.size());
    const StandardnessOracle oracle(m, order);
    for (const auto& f : enumerate_facets(m, order)) {
      OrientedSet s = f;
      for (int e : members(f.support())) {
        if (rng() % 2 == 0) continue;
        s.plus &= ~singleton(e);
        s.minus &= ~singleton(e);
        ASSERT_TRUE(oracle.is_standard(s));
      }
    }
  }
}

TEST(Triangulation, FacetCountAndHVectorMatchEhrhart) {
  for (const Graph& g : small_graphs()) {
    const Matroid m = cycle_matroid(g);
    const TriangulationSummary t = triangulate(m, VariableOrder::ground(m.size()));
    const IntPolynomial h = hstar_bruteforce(m);
    EXPECT_EQ(t.h_vector, h) << g.vertex_count() << " vertices, " << g.edge_count() << " edges";
    EXPECT_EQ(t.facet_count, h(Integer(1)));
    EXPECT_EQ(t.facet_count, t.f_vector.back());
    EXPECT_TRUE(is_symmetric(h));
  }
}

TEST(Triangulation, HVectorIndependentOfElementOrder) {
  const Matroid m = cycle_matroid(wheel(4));
  const IntPolynomial base = triangulate(m, VariableOrder::ground(m.size())).h_vector;
  std::vector<int> perm(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) perm[static_cast<std::size_t>(i)] = m.size() - 1 - i;
  EXPECT_EQ(triangulate(m, VariableOrder(perm)).h_vector, base);
  std::rotate(perm.begin(), perm.begin() + 3, perm.end());
  EXPECT_EQ(triangulate(m, VariableOrder(perm)).h_vector, base);
}

TEST(Triangulation, PointingInvariantUnderBaseVertex) {
  for (const Graph& g : small_graphs()) {
    const Matroid m = cycle_matroid(g);
    const auto facets = enumerate_facets(m, VariableOrder::ground(m.size()));
    const IntPolynomial h = triangulate(m, VariableOrder::ground(m.size())).h_vector;
    for (int v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(hstar_by_pointing(g, v, facets), h) << "v = " << v;
  }
}

TEST(Triangulation, DeterministicAcrossWorkers) {
  const Matroid m = cycle_matroid(complete_graph(5));
  const auto order = VariableOrder::ground(m.size());
  EXPECT_EQ(enumerate_facets(m, order, {2e8, 1}), enumerate_facets(m, order, {2e8, 6}));
  EXPECT_EQ(triangulate(m, order, {2e8, 1}).f_vector, triangulate(m, order, {2e8, 6}).f_vector);
}

TEST(Triangulation, BudgetRefusesLargeRuns) {
  const Matroid m = dual_k3n(4);
  EXPECT_THROW(triangulate(m, VariableOrder::ground(m.size()), {100, 1}), BudgetExceeded);
}

TEST(Triangulation, HFromFKnownSimplex) {
  // Boundary of the 3-dimensional cross-polytope: f = (1, 6, 12, 8).
  EXPECT_EQ(h_from_f({1, 6, 12, 8}, 3), (IntPolynomial{1, 3, 3, 1}));
}
