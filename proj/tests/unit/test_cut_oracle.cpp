#include <gtest/gtest.h>

#include <cmath>

#include "brute_force.hpp"
#include "cutlab/cut_oracle.hpp"
#include "cutlab/error.hpp"
#include "cutlab/foreach.hpp"
#include "cutlab/random.hpp"

using namespace cutlab;

namespace {

DirectedWeightedGraph random_digraph(std::size_t n, double density, std::uint64_t seed) {
  Rng rng(seed);
  DirectedWeightedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && rng.bernoulli(density)) g.add_edge(u, v, 0.25 + rng.uniform());
  return g;
}

NodeSet random_side(std::size_t n, Rng& rng) {
  while (true) {
    std::vector<Vertex> m;
    for (Vertex v = 0; v < n; ++v)
      if (rng.bernoulli(0.5)) m.push_back(v);
    if (!m.empty() && m.size() < n) return NodeSet(m);
  }
}

}  // namespace

TEST(ExactOracle, MatchesCutWeightAndCounts) {
  auto g = random_digraph(10, 0.4, 1);
  ExactOracle o(g);
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    auto s = random_side(10, rng);
    EXPECT_EQ(o.query(s), cut_weight(g, s));
    EXPECT_EQ(o.query(s), o.query(s));
  }
  EXPECT_EQ(o.query_count(), 60u);
}

TEST(NoisyOracle, ZeroNoiseIsExact) {
  auto g = random_digraph(8, 0.5, 2);
  for (auto mode : {NoiseMode::kFresh, NoiseMode::kHashed}) {
    NoisyOracle o(g, {0.0, mode, {}}, 11);
    Rng rng(4);
    for (int i = 0; i < 10; ++i) {
      auto s = random_side(8, rng);
      EXPECT_EQ(o.query(s), cut_weight(g, s));
    }
  }
}

TEST(NoisyOracle, EnvelopeHolds) {
  auto g = random_digraph(12, 0.4, 5);
  Rng rng(6);
  for (auto spec : {"noise:0.3:fresh", "noise:0.3:hashed", "noise:0.3:signs=+-"}) {
    auto o = make_oracle(g, parse_oracle_spec(spec), 17);
    for (int i = 0; i < 200; ++i) {
      auto s = random_side(12, rng);
      const double truth = cut_weight(g, s);
      const double got = o->query(s);
      EXPECT_GE(got, 0.7 * truth - 1e-12);
      EXPECT_LE(got, 1.3 * truth + 1e-12);
    }
  }
}

TEST(NoisyOracle, HashedIsDeterministicAndOrderInvariant) {
  auto g = random_digraph(10, 0.5, 8);
  NoisyOracle a(g, {0.2, NoiseMode::kHashed, {}}, 99);
  NoisyOracle b(g, {0.2, NoiseMode::kHashed, {}}, 99);
  NodeSet s1({4, 1, 7, 2});
  NodeSet s2({2, 7, 1, 4, 4});
  EXPECT_EQ(a.query(s1), a.query(s1));
  EXPECT_EQ(a.query(s1), b.query(s2));
  EXPECT_EQ(hash_node_set(s1, 5), hash_node_set(s2, 5));
  EXPECT_NE(hash_node_set(s1, 5), hash_node_set(s1, 6));
  EXPECT_NE(hash_node_set(NodeSet({1}), 5), hash_node_set(NodeSet({1, 0}), 5));
}

TEST(NoisyOracle, Errors) {
  auto g = random_digraph(4, 0.5, 1);
  EXPECT_THROW(NoisyOracle(g, {1.0, NoiseMode::kHashed, {}}, 1), Error);
  EXPECT_THROW(NoisyOracle(g, {-0.1, NoiseMode::kHashed, {}}, 1), Error);
  EXPECT_THROW(NoisyOracle(g, {0.1, NoiseMode::kSigns, {}}, 1), Error);
}

// Expanding the 4-term combination: signs (+,-,-,+) push the estimate up by eps'(V1+V2+V3+V4).
TEST(NoisyOracle, AdversarialSignsOnForEachDecoder) {
  ForEachParams p{2, 1, 8, 2.0, 0.25};
  Rng rng(12);
  auto s = random_signs(p.capacity(), rng);
  auto enc = build_foreach_graph(s, p);
  const double eps_prime = 0.01;
  for (std::size_t q = 0; q < p.capacity(); ++q) {
    ExactOracle exact(enc.graph);
    NoisyOracle adv(enc.graph, {eps_prime, NoiseMode::kSigns, {1, -1, -1, 1}}, 0);
    auto clean = decode_bit(exact, q, p, enc.block_success);
    auto noisy = decode_bit(adv, q, p, enc.block_success);
    double total = 0;
    for (double v : clean.answers) total += v;
    EXPECT_NEAR(noisy.estimate - clean.estimate, eps_prime * total, 1e-9);
  }
}

TEST(SparsifierOracle, FullKeepIsExact) {
  auto g = random_digraph(10, 0.5, 21);
  SparsifierOracle o(g, 1.0, 4);
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    auto s = random_side(10, rng);
    EXPECT_EQ(o.query(s), cut_weight(g, s));
  }
  EXPECT_THROW(SparsifierOracle(g, 0.0, 1), Error);
  EXPECT_THROW(SparsifierOracle(g, 1.5, 1), Error);
}

TEST(SparsifierOracle, UnbiasedOnAverage) {
  auto g = random_digraph(20, 0.5, 33);
  NodeSet s({0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  const double truth = cut_weight(g, s);
  double sum = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) sum += SparsifierOracle(g, 0.5, seed).query(s);
  EXPECT_NEAR(sum / 200.0, truth, 0.05 * truth);
}

TEST(SparsifierOracle, KeptEdgeCountBinomial) {
  auto g = random_digraph(30, 0.5, 8);
  const double m = static_cast<double>(g.edge_count());
  const double p = 0.3;
  const double sigma = std::sqrt(m * p * (1 - p));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SparsifierOracle o(g, p, seed);
    EXPECT_NEAR(static_cast<double>(o.kept_edges()), p * m, 3 * sigma);
  }
}

TEST(OracleSpec, Parsing) {
  EXPECT_EQ(parse_oracle_spec("exact").kind, OracleSpec::Kind::kExact);
  auto n = parse_oracle_spec("noise:0.1");
  EXPECT_EQ(n.kind, OracleSpec::Kind::kNoise);
  EXPECT_EQ(n.noise.mode, NoiseMode::kHashed);
  EXPECT_DOUBLE_EQ(n.noise.eps_prime, 0.1);
  auto f = parse_oracle_spec("noise:0.2:fresh");
  EXPECT_EQ(f.noise.mode, NoiseMode::kFresh);
  auto s = parse_oracle_spec("noise:0.05:signs=+--+");
  EXPECT_EQ(s.noise.signs, (std::vector<int>{1, -1, -1, 1}));
  auto sp = parse_oracle_spec("sparsifier:0.5");
  EXPECT_EQ(sp.kind, OracleSpec::Kind::kSparsifier);
  for (auto bad : {"", "noise", "noise:abc", "noise:1.0", "noise:0.1:weird", "sparsifier:0",
                   "sparsifier:2", "noise:0.1:signs=", "noise:0.1:signs=+x", "random"})
    EXPECT_THROW(parse_oracle_spec(bad), Error) << bad;
}
