#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sepkit/ehrhart.hpp"
#include "sepkit/matroid.hpp"

using namespace sepkit;

namespace {

std::vector<oracle::SimpleEdge> simple_edges(const Graph& g) {
  std::vector<oracle::SimpleEdge> out;
  for (const auto& e : g.edges()) out.push_back({e.tail, e.head});
  return out;
}

Graph kite() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  return g;
}

}  // namespace

TEST(Ehrhart, CountsMatchTransportOracle) {
  for (const Graph& g : {cycle_graph(3), cycle_graph(4), complete_graph(4), kite(), path_graph(4)}) {
    const LatticePolytope p = sep_of(cycle_matroid(g));
    const int d = g.vertex_count() - 1;
    for (int m = 0; m <= d; ++m) {
      EXPECT_EQ(count_points(p, m), oracle::sep_lattice_count(g.vertex_count(), simple_edges(g), m))
          << g.vertex_count() << " vertices, m = " << m;
    }
  }
}

TEST(Ehrhart, HstarMatchesSeriesOracle) {
  for (const Graph& g : {cycle_graph(5), complete_graph(4), complete_bipartite(2, 3)}) {
    const EhrhartData data = ehrhart_data(sep_of(cycle_matroid(g)));
    const auto expect = oracle::hstar_from_series(data.counts, data.dim);
    EXPECT_EQ(data.hstar.coefficients(), std::vector<Integer>(expect.begin(), expect.end()));
  }
}

TEST(Ehrhart, TreeGivesCrossPolytope) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(hstar_bruteforce(cycle_matroid(path_graph(n))), pow(IntPolynomial::one_plus_t(), n - 1));
  }
}

TEST(Ehrhart, KnownSmallValues) {
  // Frozen after agreement with the transport oracle above.
  EXPECT_EQ(hstar_bruteforce(cycle_matroid(cycle_graph(3))), (IntPolynomial{1, 4, 1}));
  EXPECT_EQ(hstar_bruteforce(cycle_matroid(cycle_graph(4))), (IntPolynomial{1, 5, 5, 1}));
  EXPECT_EQ(hstar_bruteforce(cycle_matroid(complete_graph(4))), (IntPolynomial{1, 9, 9, 1}));
}

TEST(Ehrhart, CountBasics) {
  const LatticePolytope p = sep_of(cycle_matroid(complete_graph(4)));
  EXPECT_TRUE(is_centrally_symmetric(p));
  EXPECT_EQ(count_points(p, 0), 1);
  Integer prev = 0;
  for (int m = 0; m <= 4; ++m) {
    const Integer c = count_points(p, m);
    EXPECT_GE(c, prev);
    prev = c;
  }
}

TEST(Ehrhart, DeterministicAcrossWorkers) {
  const LatticePolytope p = sep_of(cycle_matroid(complete_bipartite(2, 3)));
  const EhrhartData one = ehrhart_data(p, {5e7, 1});
  const EhrhartData many = ehrhart_data(p, {5e7, 4});
  EXPECT_EQ(one.counts, many.counts);
  EXPECT_EQ(one.hstar, many.hstar);
}

TEST(Ehrhart, LoopsDroppedAndDimensionChecked) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  g.add_edge(1, 2);
  const Matroid m = cycle_matroid(g);
  const LatticePolytope p = sep_of(m);
  EXPECT_EQ(p.dropped_loops, 1);
  EXPECT_EQ(p.vertex_count(), 4);
  EXPECT_TRUE(dim_check(p, m));
  EXPECT_EQ(affine_dimension(p), 2);
}

TEST(Ehrhart, BudgetRefusesLargeBoxes) {
  const LatticePolytope p = sep_of(dual_k3n(4));
  EXPECT_THROW(count_points(p, 6, {10, 1}), BudgetExceeded);
}

TEST(Gamma, RoundTripAndSymmetryGuard) {
  const std::vector<IntPolynomial> samples{{1, 4, 1}, {1, 10, 22, 10, 1}, {1, 26, 297, 1908, 6264, 9108, 6264, 1908, 297, 26, 1}};
  for (const auto& h : samples) {
    const RationalPolynomial g = gamma_from_hstar(h);
    EXPECT_EQ(expand_gamma(g, static_cast<int>(h.degree())), to_rational(h));
  }
  EXPECT_EQ(gamma_from_hstar(IntPolynomial{1, 10, 22, 10, 1}), to_rational(IntPolynomial{1, 6, 4}));
  EXPECT_THROW(gamma_from_hstar(IntPolynomial{1, 2}), InputError);
}

TEST(Gamma, PredicatesFlagNegativeEntries) {
  const Predicates p = predicates(IntPolynomial{1, 26, 297, 1908, 6264, 9108, 6264, 1908, 297, 26, 1});
  EXPECT_TRUE(p.symmetric);
  EXPECT_TRUE(p.unimodal);
  EXPECT_FALSE(p.gamma_nonnegative);
  const Predicates q = predicates(IntPolynomial{1, 3, 1, 1});
  EXPECT_FALSE(q.symmetric);
  EXPECT_FALSE(q.gamma_nonnegative);
}

TEST(ProductIdentities, HoldOnSmallInstances) {
  EXPECT_TRUE(free_sum_check(cycle_matroid(cycle_graph(3)), coloops(1)).holds);
  EXPECT_TRUE(contraction_check(cycle_matroid(cycle_graph(4)), 0).holds);
  const Matroid k3 = relabel(cycle_matroid(cycle_graph(3)), {{"e2", "f2"}, {"e3", "f3"}});
  EXPECT_TRUE(parallel_check(cycle_matroid(cycle_graph(4)), k3, "e1").holds);
}

TEST(ProductIdentities, ContractionNeedsBipartite) {
  EXPECT_THROW(contraction_check(cycle_matroid(cycle_graph(3)), 0), InputError);
}
