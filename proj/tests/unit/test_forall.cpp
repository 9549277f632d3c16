#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "cutlab/error.hpp"
#include "cutlab/forall.hpp"
#include "cutlab/random.hpp"

using namespace cutlab;

namespace {

ForAllParams params(int beta, int d, std::size_t blocks = 2) {
  ForAllParams p;
  p.beta = beta;
  p.d = d;
  p.n = blocks * static_cast<std::size_t>(beta * d);
  return p;
}

// Additive hashed error of at most `bound` per distinct set.
class AdditiveNoiseOracle final : public CutOracle {
 public:
  AdditiveNoiseOracle(const DirectedWeightedGraph& g, double bound, std::uint64_t seed)
      : CutOracle(g), bound_(bound), seed_(seed) {}
  double declared_eps() const override { return std::nan(""); }
  std::string describe() const override { return "additive"; }

 private:
  double do_query(const NodeSet& s) override {
    const double u = static_cast<double>(hash_node_set(s, seed_) >> 11) * 0x1.0p-53;
    return cut_weight(graph_, s) + bound_ * (2 * u - 1);
  }
  double bound_;
  std::uint64_t seed_;
};

}  // namespace

TEST(ForAll, Binomial) {
  EXPECT_EQ(binomial(16, 8), 12870u);
  EXPECT_EQ(binomial(4, 2), 6u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}

TEST(ForAll, UnrankMatchesIteration) {
  std::vector<std::size_t> c = {0, 1, 2};
  std::uint64_t rank = 0;
  do {
    ASSERT_EQ(unrank_combination(rank, 7, 3), c);
    ++rank;
  } while (next_combination(c, 7));
  EXPECT_EQ(rank, binomial(7, 3));
}

TEST(ForAll, IntersectionIdentity) {
  BitString s = {1, 1, 0, 0}, t = {1, 0, 1, 0};
  EXPECT_EQ(hamming_intersection_identity(s, t), (std::pair<int, int>{2, 1}));
  EXPECT_EQ(hamming_intersection_identity(s, s), (std::pair<int, int>{0, 2}));
  BitString u = {0, 0, 1, 1};
  EXPECT_EQ(hamming_intersection_identity(s, u), (std::pair<int, int>{4, 0}));
  BitString bad = {1, 1, 1, 0};
  EXPECT_THROW(hamming_intersection_identity(bad, t), Error);
}

TEST(ForAll, GapHammingSmallCase) {
  // d = 4, c/eps = 2: only distance 0 (low) or 4 (high) qualify.
  auto p = params(1, 4);
  p.c = 1.0;
  int high = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto inst = sample_gap_hamming(p, seed);
    EXPECT_TRUE(inst.distance == 0 || inst.distance == 4);
    EXPECT_EQ(inst.high, inst.distance == 4);
    high += inst.high;
  }
  EXPECT_GT(high, 60);
  EXPECT_LT(high, 140);
}

TEST(ForAll, GapHammingWeightsAndSides) {
  auto p = params(2, 8);
  int high = 0;
  const int samples = 10000;
  for (int seed = 0; seed < samples; ++seed) {
    auto inst = sample_gap_hamming(p, seed);
    high += inst.high;
    if (seed % 100 == 0) {
      for (const auto& s : inst.strings) EXPECT_EQ(std::count(s.begin(), s.end(), 1), 4);
      const auto [delta, both] = hamming_intersection_identity(
          inst.strings[forall_string_index(p, inst.block, inst.i, inst.j)], inst.bob_string);
      EXPECT_EQ(delta, inst.distance);
      EXPECT_EQ(delta, 8 - 2 * both);
      if (inst.high) EXPECT_GE(delta, 4 + p.gap());
      else EXPECT_LE(delta, 4 - p.gap());
    }
  }
  const double frac = static_cast<double>(high) / samples;
  EXPECT_GE(frac, 0.47);
  EXPECT_LE(frac, 0.53);
}

TEST(ForAll, InfeasibleGap) {
  auto p = params(1, 4);
  p.c = 1.5;  // gap 3 > d/2
  EXPECT_THROW(sample_gap_hamming(p, 1), Error);
  auto q = params(1, 4);
  q.n = 12;
  q.d = 3;
  EXPECT_THROW(q.validate(), Error);
}

TEST(ForAll, EncodeCountsAndRatio) {
  auto p = params(1, 4);
  auto inst = sample_gap_hamming(p, 3);
  auto enc = encode_forall(inst.strings, p);
  EXPECT_EQ(enc.graph.edge_count(), 32u);
  EXPECT_EQ(edge_reverse_ratio(enc.graph), 2.0);
  for (auto beta : {1, 2, 4}) {
    auto q = params(beta, 4);
    auto e = encode_forall(sample_gap_hamming(q, 9).strings, q);
    EXPECT_EQ(edge_reverse_ratio(e.graph), 2.0 * beta);
  }
  auto bad = inst.strings;
  bad.pop_back();
  EXPECT_THROW(encode_forall(bad, p), Error);
}

TEST(ForAll, ForwardWeightMultiset) {
  auto p = params(2, 4);
  auto inst = sample_gap_hamming(p, 4);
  auto enc = encode_forall(inst.strings, p);
  std::size_t ones = 0, twos = 0;
  for (const auto& e : enc.graph.edges()) {
    if (e.from >= e.to) continue;
    ones += e.weight == 1.0;
    twos += e.weight == 2.0;
  }
  EXPECT_EQ(ones, twos);
}

TEST(ForAll, ExhaustiveBalance) {
  auto p = params(1, 4);
  auto enc = encode_forall(sample_gap_hamming(p, 5).strings, p);
  EXPECT_TRUE(is_beta_balanced_exhaustive(enc.graph, 2.0));
  auto q = params(1, 4, 3);
  auto e3 = encode_forall(sample_gap_hamming(q, 6).strings, q);
  EXPECT_TRUE(is_beta_balanced_exhaustive(e3.graph, 2.0));
}

TEST(ForAll, SubtractionClosedForm) {
  EXPECT_DOUBLE_EQ(forall_backward_subtraction(params(1, 4), 0), 4.0);
  auto p = params(1, 4, 3);
  EXPECT_DOUBLE_EQ(forall_backward_subtraction(p, 1), 4.0 + 8.0);
  EXPECT_DOUBLE_EQ(forall_backward_subtraction(p, 0), 4.0 + 8.0);
}

// Exact oracle: every enumerated estimate equals the forward weight w(U, T).
TEST(ForAll, ExactEstimatesEqualForwardWeight) {
  for (auto [beta, d, blocks] : {std::tuple{1, 4, 2}, std::tuple{1, 4, 3}, std::tuple{2, 4, 3}}) {
    auto p = params(beta, d, blocks);
    auto inst = sample_gap_hamming(p, 10 + blocks);
    auto enc = encode_forall(inst.strings, p);
    ForAllQuery q{inst.block, inst.j, inst.bob_string};
    std::vector<std::size_t> u;
    for (std::size_t i = 0; i < p.k() / 2; ++i) u.push_back(i);
    do {
      double forward = 0;
      for (std::size_t i : u)
        for (std::size_t v = 0; v < static_cast<std::size_t>(d); ++v)
          if (inst.bob_string[v])
            forward += 1.0 + inst.strings[forall_string_index(p, inst.block, i, inst.j)][v];
      const double est = cut_weight(enc.graph, forall_query_set(p, q, u)) -
                         forall_backward_subtraction(p, inst.block);
      ASSERT_NEAR(est, forward, 1e-9);
    } while (next_combination(u, p.k()));
  }
}

TEST(ForAll, ExactDecodeSmall) {
  auto p = params(1, 4);
  int correct = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto inst = sample_gap_hamming(p, seed);
    auto enc = encode_forall(inst.strings, p);
    ExactOracle o(enc.graph);
    auto r = decode_forall(o, {inst.block, inst.j, inst.bob_string}, inst.i, p);
    EXPECT_EQ(r.subsets, 6u);
    EXPECT_EQ(o.query_count(), 6u);
    // Q holds the two left nodes of largest intersection, ties to the lexicographically first.
    std::vector<std::pair<int, std::size_t>> score;
    for (std::size_t i = 0; i < 4; ++i)
      score.push_back({-hamming_intersection_identity(
                            inst.strings[forall_string_index(p, inst.block, i, inst.j)],
                            inst.bob_string).second, i});
    std::sort(score.begin(), score.end());
    std::vector<std::size_t> top = {score[0].second, score[1].second};
    std::sort(top.begin(), top.end());
    const bool strict = score[1].first != score[2].first;
    if (strict) EXPECT_EQ(r.best_subset, top);
    correct += r.decided_low == !inst.high;
  }
  EXPECT_GE(correct, 36);
}

TEST(ForAll, ParallelKeepsFirstMaximum) {
  auto p = params(1, 8);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto inst = sample_gap_hamming(p, seed);
    auto enc = encode_forall(inst.strings, p);
    ForAllQuery q{inst.block, inst.j, inst.bob_string};
    ExactOracle a(enc.graph), b(enc.graph);
    auto serial = decode_forall(a, q, inst.i, p, 1);
    auto parallel = decode_forall(b, q, inst.i, p, 7);
    EXPECT_EQ(serial.best_subset, parallel.best_subset);
    EXPECT_EQ(b.query_count(), binomial(8, 4));
  }
}

TEST(ForAll, EnumerationCap) {
  auto p = params(1, 16);
  p.enum_cap = 1000;
  auto inst = sample_gap_hamming(p, 1);
  auto enc = encode_forall(inst.strings, p);
  ExactOracle o(enc.graph);
  try {
    decode_forall(o, {inst.block, inst.j, inst.bob_string}, inst.i, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeCap);
  }
}

TEST(ForAll, LevelFractionBand) {
  auto p = params(1, 16);
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto f = forall_level_fractions(sample_gap_hamming(p, seed), p);
    inside += f.high >= 0.5 - 10 * p.c - 0.1 && f.high <= 0.6;
  }
  EXPECT_GE(inside, 180);
}

TEST(ForAll, AdditiveNoiseDecoderSuccess) {
  auto p = params(2, 8);
  const double bound = p.c1 * p.beta * std::pow(p.d, 1.5);
  int correct = 0;
  const int trials = 60;
  for (int seed = 0; seed < trials; ++seed) {
    auto inst = sample_gap_hamming(p, 500 + seed);
    auto enc = encode_forall(inst.strings, p);
    AdditiveNoiseOracle o(enc.graph, bound, seed);
    correct += decode_forall(o, {inst.block, inst.j, inst.bob_string}, inst.i, p).decided_low == !inst.high;
  }
  EXPECT_GE(correct * 3, trials * 2);
}
