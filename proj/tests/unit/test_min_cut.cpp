#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "cutlab/error.hpp"
#include "cutlab/graph_families.hpp"
#include "cutlab/min_cut.hpp"
#include "cutlab/random.hpp"

using namespace cutlab;

TEST(MinCut, Triangle) {
  auto g = cycle_graph(3);
  EXPECT_EQ(global_min_cut(g).value, 2.0);
  EXPECT_EQ(stoer_wagner_min_cut(g).value, 2.0);
}

TEST(MinCut, TwoCliquesOneEdge) {
  auto g = clique_bridge(10, 1);
  auto r = global_min_cut(g);
  EXPECT_EQ(r.value, 1.0);
  EXPECT_EQ(r.witness, NodeSet({0, 1, 2, 3, 4}));
  EXPECT_EQ(cut_size(g, r.witness), 1u);
}

TEST(MinCut, DisconnectedIsZero) {
  UndirectedGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  auto r = global_min_cut(g);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.witness, NodeSet({0, 1}));
}

TEST(MinCut, NeedsTwoVertices) { EXPECT_THROW(global_min_cut(UndirectedGraph(1)), Error); }

TEST(MinCut, SymmetricDirected) {
  DirectedWeightedGraph g(3);
  g.add_edge(0, 1, 2.5);
  g.add_edge(1, 0, 2.5);
  g.add_edge(1, 2, 1.5);
  g.add_edge(2, 1, 1.5);
  EXPECT_EQ(global_min_cut(g).value, 1.5);
  DirectedWeightedGraph h(2);
  h.add_edge(0, 1, 1.0);
  EXPECT_THROW(global_min_cut(h), Error);
}

// Brute-force oracle equivalence on random graphs with n <= 14.
TEST(MinCutProperty, MatchesBruteForce) {
  Rng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng.below(13);
    const double p = 0.15 + 0.7 * rng.uniform();
    auto g = random_gnp(n, p, rng.next());
    const double brute = oracle::brute_min_cut(g);
    auto fast = global_min_cut(g);
    auto sw = stoer_wagner_min_cut(g);
    ASSERT_EQ(fast.value, brute) << "n=" << n << " trial " << trial;
    ASSERT_EQ(sw.value, brute);
    ASSERT_TRUE(fast.witness.contains(0));
    if (brute > 0) {
      ASSERT_EQ(static_cast<double>(cut_size(g, fast.witness)), brute);
      ASSERT_EQ(static_cast<double>(cut_size(g, sw.witness)), brute);
    }
  }
}

TEST(MinCutProperty, WeightedMatchesDense) {
  Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng.below(11);
    std::vector<UndirectedWeightedEdge> es;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.bernoulli(0.5)) es.push_back({u, v, static_cast<double>(1 + rng.below(5))});
    double brute = 1e300;
    for (std::uint32_t bits = 1; bits < (1u << (n - 1)); ++bits) {
      double c = 0;
      for (auto& e : es) c += (((bits >> e.u) & 1u) != ((bits >> e.v) & 1u)) ? e.weight : 0.0;
      brute = std::min(brute, c);
    }
    EXPECT_EQ(global_min_cut(n, es).value, brute);
  }
}

TEST(MinCut, Families) {
  EXPECT_EQ(global_min_cut(complete_graph(7)).value, 6.0);
  EXPECT_EQ(global_min_cut(cycle_graph(50)).value, 2.0);
  EXPECT_EQ(global_min_cut(circulant_graph(40, 3)).value, 6.0);
  for (std::size_t k : {2u, 4u, 8u}) {
    auto g = cycle_chords(120, k, 600, 5 + k);
    EXPECT_EQ(g.edge_count(), 600u);
    EXPECT_EQ(global_min_cut(g, false).value, static_cast<double>(k));
  }
  EXPECT_EQ(global_min_cut(clique_bridge(20, 3)).value, 3.0);
}

TEST(EdgeConnectivity, Basics) {
  auto p = path_graph(3);
  EXPECT_EQ(edge_connectivity(p, 0, 2), 1);
  auto k4 = complete_graph(4);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 0; v < 4; ++v)
      if (u != v) EXPECT_EQ(edge_connectivity(k4, u, v), 3);
  try {
    edge_connectivity(k4, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
}

TEST(EdgeConnectivityProperty, MatchesBruteForce) {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng.below(11);
    auto g = random_gnp(n, 0.2 + 0.6 * rng.uniform(), rng.next());
    const auto s = static_cast<Vertex>(rng.below(n));
    auto t = static_cast<Vertex>(rng.below(n - 1));
    if (t >= s) ++t;
    EXPECT_EQ(edge_connectivity(g, s, t), oracle::brute_st_cut(g, s, t));
  }
}

TEST(EdgeConnectivity, PairwiseMinEqualsGlobalMinCut) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_gnp(9, 0.5, rng.next());
    EXPECT_EQ(static_cast<double>(min_pairwise_edge_connectivity(g)), global_min_cut(g).value);
  }
}
