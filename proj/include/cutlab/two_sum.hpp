#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cutlab/forall.hpp"
#include "cutlab/graph.hpp"
#include "cutlab/local_query.hpp"

namespace cutlab {

std::size_t int_count(const BitString& x, const BitString& y);
int disj(const BitString& x, const BitString& y);

struct TwoSumInstance {
  std::size_t t = 0;
  std::size_t L = 0;
  std::size_t alpha = 1;
  std::vector<BitString> x;
  std::vector<BitString> y;
  std::size_t r_true = 0;  // intersecting pairs

  std::size_t disj_sum() const { return t - r_true; }
  /// Every pair has INT in {0, alpha} and r_true matches.
  bool promise_holds(double fraction = 1.0 / 1000.0) const;
};

TwoSumInstance amplify(const TwoSumInstance& inst, std::size_t alpha);

/// Exactly r pairs (random positions) intersect in alpha random coordinates.
TwoSumInstance sample_two_sum(std::size_t t, std::size_t L, std::size_t alpha, std::size_t r,
                              std::uint64_t seed, double promise_fraction = 1.0 / 1000.0);

/// Random pair of length n with exactly `gamma` common ones.
std::pair<BitString, BitString> random_pair_with_int(std::size_t n, std::size_t gamma, Rng& rng);

BitString parse_bits(const std::string& s);
std::string format_bits(const BitString& b);

struct PairedStrings {
  BitString x;
  BitString y;
  std::size_t ell = 0;
  PairedStrings(BitString x, BitString y);
  std::size_t N() const { return x.size(); }
  std::size_t index(std::size_t i, std::size_t j) const { return i * ell + j; }  // 0-based
};

/// a_i = i, a'_j = l + j, b_i = 2l + i, b'_j = 3l + j (0-based).
struct GxyLayout {
  std::size_t ell;
  Vertex a(std::size_t i) const { return static_cast<Vertex>(i); }
  Vertex a_prime(std::size_t j) const { return static_cast<Vertex>(ell + j); }
  Vertex b(std::size_t i) const { return static_cast<Vertex>(2 * ell + i); }
  Vertex b_prime(std::size_t j) const { return static_cast<Vertex>(3 * ell + j); }
};

struct GxyGraph {
  UndirectedGraph graph;
  std::size_t ell = 0;
  std::size_t gamma = 0;
};

GxyGraph build_gxy(const PairedStrings& p);

/// Number of edges between A + A' and B + B'.
std::size_t gxy_side_cut(const GxyGraph& g);

struct LemmaCheck {
  bool holds = false;
  double mincut = 0.0;
  std::size_t intersection = 0;
  bool condition_met = false;
};

LemmaCheck check_mincut_lemma(const PairedStrings& p);

struct ConnectivityCheck {
  bool holds = false;
  int min_connectivity = 0;
  std::size_t gamma = 0;
};

ConnectivityCheck check_connectivity(const PairedStrings& p);

/// Local oracle over G_{x,y} answering from x (Alice) and y (Bob) directly.
/// The j-th neighbor of a_i is a'_j or b'_j, and symmetrically for the other parts.
class GxyOracle final : public LocalGraphOracle {
 public:
  explicit GxyOracle(PairedStrings p);
  std::size_t vertex_count() const override { return 4 * p_.ell; }
  /// Bits actually exchanged: 2 per query that needs (x_ij, y_ij).
  std::uint64_t transcript_bits() const { return bits_.load(); }

 protected:
  std::size_t do_degree(Vertex v) override;
  std::optional<Vertex> do_neighbor(Vertex v, std::size_t i) override;
  bool do_adjacent(Vertex u, Vertex v) override;

 private:
  bool both(std::size_t i, std::size_t j);
  PairedStrings p_;
  GxyLayout lay_;
  std::atomic<std::uint64_t> bits_{0};
};

/// 2 * (neighbor + adjacency); degree queries are free.
std::uint64_t communication_account(const LocalGraphOracle& o);

enum class FeasibilityRule { kWorstCase, kInstance };

struct ReductionInput {
  double eps = 0.25;
  double lambda = 1.0;
  FeasibilityRule rule = FeasibilityRule::kWorstCase;
};

struct ReductionOutput {
  double estimate = 0.0;
  double mincut_value = 0.0;
  std::size_t truth = 0;  // sum of DISJ
  std::size_t total_len = 0;
  std::size_t intersection = 0;
  double alpha_eff = 1.0;  // max(eps^2 lambda, 1)
};

/// Min-cut algorithm A: receives the built graph and its local oracle.
using MinCutAlgorithm = std::function<double(const GxyGraph&, GxyOracle&)>;

ReductionOutput reduce_two_sum(const TwoSumInstance& inst, const MinCutAlgorithm& algo,
                               const ReductionInput& in);

/// Output of the reduction for a given min-cut value.
double reduction_formula(double eps, double lambda, double mincut);

}  // namespace cutlab
