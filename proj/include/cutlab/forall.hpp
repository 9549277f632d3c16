#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cutlab/cut_oracle.hpp"
#include "cutlab/graph.hpp"

namespace cutlab {

using BitString = std::vector<std::uint8_t>;

/// d = 1/eps^2 (even), k = beta*d vertices per block, n a multiple of k.
struct ForAllParams {
  int d = 16;
  int beta = 1;
  std::size_t n = 32;
  double c = 0.05;
  double c1 = 0.1;
  double c2 = 0.5;
  std::uint64_t enum_cap = 20000;

  void validate() const;
  std::size_t k() const { return static_cast<std::size_t>(beta) * static_cast<std::size_t>(d); }
  std::size_t blocks() const { return n / k(); }
  std::size_t string_count() const { return (blocks() - 1) * k() * static_cast<std::size_t>(beta); }
  /// c / eps
  double gap() const;
  /// Oracle error the calibrated decoder is run against: c2 * eps.
  double oracle_eps() const;
};

/// C(n, r), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

struct GapHammingInstance {
  std::vector<BitString> strings;  // index (block*k + i)*beta + j
  std::size_t block = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  BitString bob_string;
  bool high = false;  // promise side: high distance
  int distance = 0;
  std::uint64_t draws = 0;
};

std::size_t forall_string_index(const ForAllParams& p, std::size_t block, std::size_t i, std::size_t j);

GapHammingInstance sample_gap_hamming(const ForAllParams& p, std::uint64_t seed);

/// Returns (Delta(s, t), |N cap T|) and checks Delta = d - 2|N cap T|.
std::pair<int, int> hamming_intersection_identity(const BitString& s, const BitString& t);

Vertex forall_left_vertex(const ForAllParams& p, std::size_t block, std::size_t i);
Vertex forall_right_vertex(const ForAllParams& p, std::size_t block, std::size_t j, std::size_t v);

struct ForAllEncoding {
  DirectedWeightedGraph graph;
};

ForAllEncoding encode_forall(const std::vector<BitString>& strings, const ForAllParams& p);

/// Backward weight inside every decoder query for a bit in `block`.
double forall_backward_subtraction(const ForAllParams& p, std::size_t block);

struct ForAllQuery {
  std::size_t block = 0;
  std::size_t j = 0;
  BitString t;
};

/// S = U + (V_{block+1} \ T) + V_{block+2..}. `left` lists left-node indices in [0, k).
NodeSet forall_query_set(const ForAllParams& p, const ForAllQuery& q,
                         const std::vector<std::size_t>& left);

struct ForAllDecode {
  bool decided_low = false;
  std::vector<std::size_t> best_subset;  // left-node indices of Q
  double best_estimate = 0.0;
  std::uint64_t subsets = 0;
};

/// Enumerates all k/2-subsets in lexicographic order and keeps the first maximum.
/// `jobs` > 1 splits the rank range; the tie-break is preserved.
ForAllDecode decode_forall(CutOracle& oracle, const ForAllQuery& q, std::size_t i,
                           const ForAllParams& p, unsigned jobs = 1);

struct LevelFractions {
  double high = 0.0;  // |N cap T| >= d/4 + gap/2
  double low = 0.0;   // |N cap T| <= d/4 - gap/2
};

/// Fractions of left nodes of Bob's block that are high or low against T.
LevelFractions forall_level_fractions(const GapHammingInstance& inst, const ForAllParams& p);

/// Lexicographic unranking of r-subsets of [0, n).
std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t r);
bool next_combination(std::vector<std::size_t>& c, std::size_t n);

}  // namespace cutlab
