#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "cutlab/error.hpp"
#include "cutlab/graph_families.hpp"
#include "cutlab/local_query.hpp"
#include "cutlab/min_cut.hpp"
#include "cutlab/mincut_estimator.hpp"

using namespace cutlab;

namespace {

std::vector<std::size_t> degrees_of(const UndirectedGraph& g) {
  std::vector<std::size_t> d(g.vertex_count());
  for (Vertex v = 0; v < d.size(); ++v) d[v] = g.degree(v);
  return d;
}

EstimatorConfig desk(double eps, std::uint64_t seed) {
  EstimatorConfig c;
  c.eps = eps;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(LocalOracle, PathQueries) {
  AdjacencyOracle o(path_graph(3));
  EXPECT_EQ(query_cost_report(o), (QueryCounts{0, 0, 0}));
  EXPECT_EQ(o.degree(1), 2u);
  EXPECT_EQ(o.neighbor(1, 1), std::optional<Vertex>(0));
  EXPECT_EQ(o.neighbor(1, 2), std::optional<Vertex>(2));
  EXPECT_EQ(o.neighbor(0, 2), std::nullopt);
  EXPECT_EQ(o.neighbor(0, 0), std::nullopt);
  EXPECT_FALSE(o.adjacent(0, 2));
  EXPECT_TRUE(o.adjacent(2, 1));
  EXPECT_EQ(query_cost_report(o), (QueryCounts{1, 4, 2}));
}

TEST(Sampling, RetentionProbabilityMatchesFormula) {
  // Fixed 100-edge graph; each undirected edge appears in two slots.
  auto g = cycle_chords(50, 2, 100, 3);
  ASSERT_EQ(g.edge_count(), 100u);
  const auto deg = degrees_of(g);
  const double q = 0.2;
  const double p_eff = 1 - (1 - q) * (1 - q);
  const int runs = 400;
  Rng rng(9);
  std::size_t kept = 0;
  AdjacencyOracle o(g);
  for (int r = 0; r < runs; ++r) kept += sample_edges(o, deg, q, rng).size();
  const double trials = 100.0 * runs;
  const double sigma = std::sqrt(trials * p_eff * (1 - p_eff));
  EXPECT_NEAR(static_cast<double>(kept), trials * p_eff, 3 * sigma);
  EXPECT_NEAR(static_cast<double>(o.counts().neighbor), 200.0 * runs * q,
              3 * std::sqrt(200.0 * runs * q * (1 - q)));
}

TEST(VerifyGuess, FullRateIsExact) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto g = random_gnp(30, 0.3, seed);
    AdjacencyOracle o(g);
    Rng rng(seed);
    auto r = verify_guess(o, degrees_of(g), 1.0, 0.2, desk(0.2, seed), rng);
    EXPECT_EQ(r.p_hat, 1.0);
    EXPECT_EQ(r.p_eff, 1.0);
    EXPECT_EQ(r.k_hat, global_min_cut(g).value);
    EXPECT_EQ(r.accepted, global_min_cut(g).value >= 0.5);
  }
}

TEST(VerifyGuess, RejectsCycleAtLargeGuess) {
  auto g = cycle_graph(100);
  int rejects = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    AdjacencyOracle o(g);
    Rng rng(seed);
    rejects += !verify_guess(o, degrees_of(g), 50, 0.3, desk(0.3, seed), rng).accepted;
  }
  EXPECT_GE(rejects, 95);
}

TEST(VerifyGuess, AcceptsCompleteGraph) {
  auto g = complete_graph(20);
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    AdjacencyOracle o(g);
    Rng rng(seed);
    auto r = verify_guess(o, degrees_of(g), 10, 0.3, desk(0.3, seed), rng);
    good += r.accepted && r.k_hat >= 0.7 * 19 && r.k_hat <= 1.3 * 19;
  }
  EXPECT_GE(good, 95);
}

TEST(VerifyGuess, ContractOnCalibrationGraphs) {
  auto cfg = desk(0.3, 0);
  const double kappa = cfg.kappa(100);
  auto cyc = cycle_graph(100);
  auto chords = cycle_chords(200, 8, 1200, 4);
  for (const auto* g : {&cyc, &chords}) {
    const double k = global_min_cut(*g, false).value;
    int accept_low = 0, reject_high = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      AdjacencyOracle o(*g);
      Rng rng(seed);
      accept_low += verify_guess(o, degrees_of(*g), k, 0.3, cfg, rng).accepted;
      reject_high += !verify_guess(o, degrees_of(*g), kappa * k, 0.3, cfg, rng).accepted;
    }
    EXPECT_GE(accept_low, 95);
    EXPECT_GE(reject_high, 95);
  }
}

TEST(VerifyGuess, BadGuess) {
  AdjacencyOracle o(cycle_graph(5));
  Rng rng(1);
  EXPECT_THROW(verify_guess(o, {2, 2, 2, 2, 2}, 0.5, 0.2, desk(0.2, 1), rng), Error);
}

TEST(Estimate, SmallExamples) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    AdjacencyOracle k6(complete_graph(6));
    auto e = estimate_min_cut(k6, desk(0.2, seed));
    EXPECT_GE(e.k_hat, 0.8 * 5);
    EXPECT_LE(e.k_hat, 1.2 * 5);
    EXPECT_EQ(e.counts.degree, 6u);
    AdjacencyOracle bridge(clique_bridge(16, 1));
    EXPECT_EQ(std::lround(estimate_min_cut(bridge, desk(0.2, seed)).k_hat), 1);
  }
}

TEST(Estimate, CycleWithChordsAccuracy) {
  int good = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = cycle_with_random_chords(200, 10, seed);
    const double k = global_min_cut(g, false).value;
    AdjacencyOracle o(g);
    auto e = estimate_min_cut(o, desk(0.2, seed));
    good += std::fabs(e.k_hat - k) <= 0.2 * k;
  }
  EXPECT_GE(good, 45);
}

TEST(Estimate, TraceHasOneFinalCallAtEps) {
  auto g = cycle_chords(300, 8, 2400, 2);
  AdjacencyOracle o(g);
  auto cfg = desk(0.15, 3);
  auto e = estimate_min_cut(o, cfg);
  int at_eps = 0;
  for (const auto& t : e.trace) {
    if (t.accuracy == cfg.eps) ++at_eps;
    else EXPECT_EQ(t.accuracy, cfg.beta0);
  }
  EXPECT_EQ(at_eps, 1);
  EXPECT_TRUE(e.trace.back().final_call);
  EXPECT_EQ(e.counts.degree, 300u);
  EXPECT_EQ(e.counts.adjacency, 0u);
}

TEST(Estimate, KappaModeAndDisconnected) {
  auto g = cycle_chords(200, 4, 800, 1);
  AdjacencyOracle o(g);
  auto cfg = desk(0.2, 1);
  cfg.final_mode = FinalMode::kKappa;
  auto e = estimate_min_cut(o, cfg);
  EXPECT_NEAR(e.k_hat, 4.0, 0.8);
  EXPECT_EQ(e.t_final, std::max(1.0, e.t_accepted / cfg.kappa(200)));

  UndirectedGraph split(6);
  split.add_edge(0, 1);
  split.add_edge(1, 2);
  split.add_edge(0, 2);
  split.add_edge(3, 4);
  split.add_edge(4, 5);
  split.add_edge(3, 5);
  AdjacencyOracle so(split);
  auto d = estimate_min_cut(so, desk(0.2, 1));
  EXPECT_EQ(d.k_hat, 0.0);
  EXPECT_TRUE(d.exact_fallback);
}

namespace {

// Claims degree 2 everywhere but hides every edge.
class LyingOracle final : public LocalGraphOracle {
 public:
  std::size_t vertex_count() const override { return 4; }

 protected:
  std::size_t do_degree(Vertex) override { return 2; }
  std::optional<Vertex> do_neighbor(Vertex, std::size_t) override { return std::nullopt; }
  bool do_adjacent(Vertex, Vertex) override { return false; }
};

}  // namespace

TEST(Estimate, InconsistentOracle) {
  LyingOracle o;
  try {
    estimate_min_cut(o, desk(0.2, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInconsistentOracle);
  }
}

TEST(EstimatorConfig, Validation) {
  EstimatorConfig c;
  c.eps = 1.0;
  EXPECT_THROW(c.validate(), Error);
  c.eps = 0.2;
  c.c_kappa = 0.5;
  EXPECT_THROW(c.validate(), Error);
  EXPECT_EQ(parse_final_mode("kappa"), FinalMode::kKappa);
  EXPECT_THROW(parse_final_mode("median"), Error);
}
