#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cutlab/cut_oracle.hpp"
#include "cutlab/graph.hpp"
#include "cutlab/hadamard.hpp"

namespace cutlab {

/// eps = 2^-k, beta a perfect square, n a multiple of k_block = sqrt(beta) * 2^k.
struct ForEachParams {
  int k = 1;
  int beta = 1;
  std::size_t n = 4;
  double c1 = 2.0;
  double c2 = 0.25;

  void validate() const;
  double eps() const { return 1.0 / static_cast<double>(inv_eps()); }
  std::size_t inv_eps() const { return std::size_t{1} << k; }
  std::size_t sqrt_beta() const;
  std::size_t k_block() const { return sqrt_beta() * inv_eps(); }
  std::size_t blocks() const { return n / k_block(); }
  std::size_t rows_per_pair() const { return (inv_eps() - 1) * (inv_eps() - 1); }
  std::size_t cluster_pairs() const { return (blocks() - 1) * static_cast<std::size_t>(beta); }
  std::size_t capacity() const { return cluster_pairs() * rows_per_pair(); }
  /// ln(1/eps)
  double log_inv_eps() const;
};

/// Suggests legal neighbours for an illegal (beta, n) combination.
std::string foreach_suggestion(int k, int beta, std::size_t n);

struct BlockEncoding {
  std::vector<double> w;  // indexed by column (a-1)*2^k + (b-1)
  bool success = true;
  std::int64_t x_inf = 0;
};

BlockEncoding encode_block(std::span<const std::int8_t> z, int k, double c1,
                           bool force_failure = false);

struct BitLocation {
  std::size_t block = 0;  // left block index, 0-based
  std::size_t i = 0;      // cluster in the left block
  std::size_t j = 0;      // cluster in the right block
  std::size_t t = 1;      // encoding-matrix row, 1-based
  std::size_t pair = 0;   // cluster-pair index used by block_success
};

BitLocation locate_bit(const ForEachParams& p, std::size_t q);

/// Vertex id of position a (0-based) in cluster c of block b.
Vertex foreach_vertex(const ForEachParams& p, std::size_t b, std::size_t c, std::size_t a);

struct ForEachEncoding {
  DirectedWeightedGraph graph;
  std::vector<std::uint8_t> block_success;
  std::vector<std::vector<double>> weight_vectors;
  std::size_t failed_blocks() const;
};

ForEachEncoding build_foreach_graph(std::span<const std::int8_t> s, const ForEachParams& p);

struct DecoderQueries {
  std::array<NodeSet, 4> sets;  // (A,B), (A',B), (A,B'), (A',B')
  std::array<int, 4> coefficients{1, -1, -1, 1};
  double subtraction = 0.0;
};

DecoderQueries decoder_cut_set(const ForEachParams& p, std::size_t q);

/// Backward weight removed from every decoder query of a bit in `block`.
double foreach_backward_subtraction(const ForEachParams& p, std::size_t block);

/// Upper bound on the four true decoder cut values of a successful block.
double foreach_vmax_bound(const ForEachParams& p, std::size_t block);

struct BitDecode {
  int sign = 0;
  double estimate = 0.0;
  std::array<double, 4> answers{};
};

/// Throws kEncodingFailed when the bit's block failed.
BitDecode decode_bit(CutOracle& oracle, std::size_t q, const ForEachParams& p,
                     std::span<const std::uint8_t> block_success);

std::vector<std::int8_t> random_signs(std::size_t count, Rng& rng);

}  // namespace cutlab
