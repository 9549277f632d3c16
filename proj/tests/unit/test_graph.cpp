#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "brute_force.hpp"
#include "cutlab/edge_list.hpp"
#include "cutlab/error.hpp"
#include "cutlab/graph.hpp"
#include "cutlab/random.hpp"

using namespace cutlab;

TEST(NodeSet, CanonicalForm) {
  NodeSet s({5, 1, 3, 1, 5});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.members()[0], 1u);
  EXPECT_EQ(s.members()[2], 5u);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s, NodeSet({3, 5, 1}));
  auto c = s.complement(6);
  EXPECT_EQ(c, NodeSet({0, 2, 4}));
}

TEST(CutWeight, SingleEdge) {
  DirectedWeightedGraph g(2);
  g.add_edge(0, 1, 3.0);
  EXPECT_EQ(cut_weight(g, NodeSet({0})), 3.0);
  EXPECT_EQ(cut_weight(g, NodeSet({1})), 0.0);
}

TEST(CutWeight, RejectsImproperSides) {
  DirectedWeightedGraph g(2);
  g.add_edge(0, 1, 1.0);
  try {
    cut_weight(g, NodeSet{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
  EXPECT_THROW(cut_weight(g, NodeSet({0, 1})), Error);
}

TEST(DirectedGraph, Invariants) {
  DirectedWeightedGraph g(3);
  EXPECT_THROW(g.add_edge(0, 0, 1.0), Error);
  EXPECT_THROW(g.add_edge(0, 1, 0.0), Error);
  EXPECT_THROW(g.add_edge(0, 1, std::numeric_limits<double>::infinity()), Error);
  EXPECT_THROW(g.add_edge(0, 3, 1.0), Error);
  g.add_edge(0, 1, 1.0);
  EXPECT_THROW(g.add_edge(0, 1, 2.0), Error);
  g.add_edge(1, 0, 2.0);
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(UndirectedGraph, Simple) {
  UndirectedGraph g(3);
  g.add_edge(0, 2);
  g.add_edge(1, 0);
  EXPECT_THROW(g.add_edge(2, 0), Error);
  EXPECT_THROW(g.add_edge(1, 1), Error);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
  ASSERT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.neighbors(0)[0], 1u);
  EXPECT_EQ(g.neighbors(0)[1], 2u);
}

TEST(Balance, TwoCycle) {
  DirectedWeightedGraph g(2);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 0, 1.0);
  EXPECT_TRUE(is_beta_balanced_exhaustive(g, 1.0));
  EXPECT_EQ(edge_reverse_ratio(g), 1.0);
}

TEST(Balance, SingleEdgeNeverBalanced) {
  DirectedWeightedGraph g(2);
  g.add_edge(0, 1, 1.0);
  EXPECT_FALSE(is_beta_balanced_exhaustive(g, 1e12));
  EXPECT_EQ(edge_reverse_ratio(g), std::numeric_limits<double>::infinity());
}

TEST(Balance, RatioExample) {
  DirectedWeightedGraph g(2);
  g.add_edge(0, 1, 2.0);
  g.add_edge(1, 0, 1.0);
  EXPECT_EQ(edge_reverse_ratio(g), 2.0);
  EXPECT_TRUE(is_beta_balanced_exhaustive(g, 2.0));
  EXPECT_FALSE(is_beta_balanced_exhaustive(g, 1.9));
}

TEST(Balance, SizeCap) {
  DirectedWeightedGraph g(21);
  try {
    is_beta_balanced_exhaustive(g, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeCap);
  }
}

namespace {

DirectedWeightedGraph random_bidirected(std::size_t n, double density, Rng& rng) {
  DirectedWeightedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(density)) {
        g.add_edge(u, v, 0.5 + 4.0 * rng.uniform());
        g.add_edge(v, u, 0.5 + 4.0 * rng.uniform());
      }
  return g;
}

}  // namespace

// Property: the reverse ratio certifies balance, and forward + backward equals the crossing total.
TEST(BalanceProperty, RatioCertifiesBalance) {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(8);
    auto g = random_bidirected(n, 0.6, rng);
    const double ratio = edge_reverse_ratio(g);
    if (std::isfinite(ratio) && g.edge_count() > 0) EXPECT_TRUE(is_beta_balanced_exhaustive(g, ratio));
    for (std::uint32_t bits = 1; bits + 1 < (1u << n); ++bits) {
      const NodeSet s = oracle::set_from_bits(bits, n);
      double crossing = 0;
      for (const auto& e : g.edges()) crossing += (s.contains(e.from) != s.contains(e.to)) ? e.weight : 0.0;
      EXPECT_TRUE(nearly_equal(cut_weight(g, s) + cut_weight(g, s.complement(n)), crossing));
      EXPECT_EQ(cut_weight(g, s), oracle::brute_directed_cut(g, bits));
    }
  }
}

TEST(EdgeList, RoundTripDirected) {
  DirectedWeightedGraph g(3);
  g.add_edge(0, 1, 0.1);
  g.add_edge(2, 1, std::log(3.0));
  const std::string text = to_edge_list(g);
  EXPECT_EQ(text.substr(0, 13), "n 3 directed\n");
  auto back = std::get<DirectedWeightedGraph>(parse_edge_list(text));
  ASSERT_EQ(back.edge_count(), 2u);
  EXPECT_EQ(back.edges()[1].weight, std::log(3.0));
}

TEST(EdgeList, RoundTripUndirected) {
  auto parsed = parse_edge_list("# comment\nn 3 undirected\n0 1\n1 2\n");
  auto& g = std::get<UndirectedGraph>(parsed);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(to_edge_list(g), "n 3 undirected\n0 1\n1 2\n");
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edge_list("m 3 directed\n"), Error);
  EXPECT_THROW(parse_edge_list("n 3 sideways\n"), Error);
  EXPECT_THROW(parse_edge_list("n 3 directed\n0 1\n"), Error);
  EXPECT_THROW(parse_edge_list("n 3 undirected\n0 5\n"), Error);
  EXPECT_THROW(load_edge_list("/nonexistent/graph.txt"), Error);
}
