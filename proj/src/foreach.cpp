#include "cutlab/foreach.hpp"

#include <cmath>
#include <numbers>

#include "cutlab/error.hpp"

namespace cutlab {
namespace {

std::size_t isqrt(std::size_t v) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

std::size_t ForEachParams::sqrt_beta() const { return isqrt(static_cast<std::size_t>(beta)); }

double ForEachParams::log_inv_eps() const { return k * std::numbers::ln2; }

std::string foreach_suggestion(int k, int beta, std::size_t n) {
  std::string msg;
  if (beta >= 1) {
    std::size_t r = isqrt(static_cast<std::size_t>(beta));
    if (r * r != static_cast<std::size_t>(beta)) {
      msg += "beta must be a perfect square; nearest legal values " + std::to_string(r * r) +
             " and " + std::to_string((r + 1) * (r + 1)) + ". ";
      return msg;
    }
    if (k >= 1 && k <= 12) {
      std::size_t kb = r << k;
      std::size_t lo = std::max<std::size_t>(2, n / kb) * kb;
      std::size_t hi = lo + kb;
      if (n % kb != 0 || n / kb < 2)
        msg += "n must be a multiple of sqrt(beta)*2^k = " + std::to_string(kb) +
               " with at least 2 blocks; try n = " + std::to_string(lo) + " or " +
               std::to_string(hi) + ". ";
    }
  }
  return msg;
}

void ForEachParams::validate() const {
  require(k >= 1 && k <= 6, ErrorCode::kInfeasible,
          "k must lie in [1, 6] (eps = 2^-k), got " + std::to_string(k));
  require(beta >= 1, ErrorCode::kInfeasible, "beta must be a positive integer");
  std::size_t r = sqrt_beta();
  if (r * r != static_cast<std::size_t>(beta) || n % k_block() != 0 || n / k_block() < 2)
    fail(ErrorCode::kInfeasible, "illegal for-each parameters: " + foreach_suggestion(k, beta, n));
  require(c1 > 0.0, ErrorCode::kInvalidArgument, "c1 must be positive");
}

BlockEncoding encode_block(std::span<const std::int8_t> z, int k, double c1, bool force_failure) {
  EncodingMatrix m(k);
  require(z.size() == m.row_count(), ErrorCode::kInvalidArgument,
          "block sign string must have length (2^k-1)^2 = " + std::to_string(m.row_count()));
  const std::size_t s = m.side();
  HadamardMatrix h(k);
  // x = H^T Z H restricted to rows/cols 2..2^k, computed as two products.
  std::vector<std::int64_t> zh(s * s, 0);  // (i, c): sum_j Z[i][j] H_j[c]
  for (std::size_t i = 2; i <= s; ++i)
    for (std::size_t j = 2; j <= s; ++j) {
      const int zt = z[m.row_of_pair(i, j) - 1];
      require(zt == 1 || zt == -1, ErrorCode::kInvalidArgument, "signs must be +1 or -1");
      for (std::size_t c = 1; c <= s; ++c) zh[(i - 1) * s + (c - 1)] += zt * h.entry(j, c);
    }
  std::vector<std::int64_t> x(s * s, 0);
  for (std::size_t a = 1; a <= s; ++a)
    for (std::size_t i = 2; i <= s; ++i) {
      const int ha = h.entry(i, a);
      for (std::size_t c = 0; c < s; ++c) x[(a - 1) * s + c] += ha * zh[(i - 1) * s + c];
    }

  BlockEncoding out;
  for (auto v : x) out.x_inf = std::max<std::int64_t>(out.x_inf, v < 0 ? -v : v);
  const double log_inv = k * std::numbers::ln2;
  const double inv_eps = static_cast<double>(s);
  const double base = 2.0 * c1 * log_inv;
  out.success = !force_failure && static_cast<double>(out.x_inf) <= c1 * log_inv * inv_eps;
  out.w.assign(s * s, base);
  if (out.success)
    for (std::size_t col = 0; col < s * s; ++col) out.w[col] = static_cast<double>(x[col]) / inv_eps + base;
  return out;
}

BitLocation locate_bit(const ForEachParams& p, std::size_t q) {
  require(q < p.capacity(), ErrorCode::kInvalidArgument,
          "bit index " + std::to_string(q) + " out of range [0, " + std::to_string(p.capacity()) + ")");
  BitLocation loc;
  const std::size_t rows = p.rows_per_pair();
  const std::size_t sb = p.sqrt_beta();
  loc.pair = q / rows;
  loc.t = q % rows + 1;
  loc.j = loc.pair % sb;
  loc.i = (loc.pair / sb) % sb;
  loc.block = loc.pair / (sb * sb);
  return loc;
}

Vertex foreach_vertex(const ForEachParams& p, std::size_t b, std::size_t c, std::size_t a) {
  return static_cast<Vertex>(b * p.k_block() + c * p.inv_eps() + a);
}

std::size_t ForEachEncoding::failed_blocks() const {
  std::size_t f = 0;
  for (auto ok : block_success) f += !ok;
  return f;
}

ForEachEncoding build_foreach_graph(std::span<const std::int8_t> s, const ForEachParams& p) {
  p.validate();
  require(s.size() == p.capacity(), ErrorCode::kInvalidArgument,
          "sign string length " + std::to_string(s.size()) + " does not match capacity " +
              std::to_string(p.capacity()));
  ForEachEncoding enc{DirectedWeightedGraph(p.n), {}, {}};
  const std::size_t sb = p.sqrt_beta();
  const std::size_t side = p.inv_eps();
  const std::size_t rows = p.rows_per_pair();
  const double back = 1.0 / p.beta;
  std::size_t pair = 0;
  for (std::size_t b = 0; b + 1 < p.blocks(); ++b)
    for (std::size_t i = 0; i < sb; ++i)
      for (std::size_t j = 0; j < sb; ++j, ++pair) {
        auto blk = encode_block(s.subspan(pair * rows, rows), p.k, p.c1);
        for (std::size_t a = 0; a < side; ++a)
          for (std::size_t c = 0; c < side; ++c) {
            const Vertex u = foreach_vertex(p, b, i, a);
            const Vertex v = foreach_vertex(p, b + 1, j, c);
            enc.graph.add_edge(u, v, blk.w[a * side + c]);
            enc.graph.add_edge(v, u, back);
          }
        enc.block_success.push_back(blk.success);
        enc.weight_vectors.push_back(std::move(blk.w));
      }
  return enc;
}

double foreach_backward_subtraction(const ForEachParams& p, std::size_t block) {
  const double kb = static_cast<double>(p.k_block());
  const double half = static_cast<double>(p.inv_eps()) / 2.0;
  const double beta = p.beta;
  double sub = (kb - half) * (kb - half) / beta;
  if (block >= 1) sub += kb * half / beta;           // X back into the previous block
  if (block + 2 < p.blocks()) sub += kb * half / beta;  // block+2 back into Y
  return sub;
}

double foreach_vmax_bound(const ForEachParams& p, std::size_t block) {
  const double inv = static_cast<double>(p.inv_eps());
  return 3.0 * p.c1 * p.log_inv_eps() * inv * inv / 4.0 + foreach_backward_subtraction(p, block);
}

DecoderQueries decoder_cut_set(const ForEachParams& p, std::size_t q) {
  p.validate();
  const BitLocation loc = locate_bit(p, q);
  const EncodingRow row = encoding_row(p.k, loc.t);
  const std::size_t side = p.inv_eps();

  std::vector<Vertex> a_pos, a_neg, b_pos, b_neg;
  for (std::size_t a = 0; a < side; ++a)
    (row.h_a[a] > 0 ? a_pos : a_neg).push_back(foreach_vertex(p, loc.block, loc.i, a));
  for (std::size_t c = 0; c < side; ++c)
    (row.h_b[c] > 0 ? b_pos : b_neg).push_back(foreach_vertex(p, loc.block + 1, loc.j, c));

  std::vector<Vertex> tail;
  for (std::size_t v = (loc.block + 2) * p.k_block(); v < p.n; ++v) tail.push_back(static_cast<Vertex>(v));
  const std::size_t next_lo = (loc.block + 1) * p.k_block();
  const std::size_t next_hi = next_lo + p.k_block();

  auto make = [&](const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
    std::vector<Vertex> m = x;
    NodeSet ys(y);
    for (std::size_t v = next_lo; v < next_hi; ++v)
      if (!ys.contains(static_cast<Vertex>(v))) m.push_back(static_cast<Vertex>(v));
    m.insert(m.end(), tail.begin(), tail.end());
    return NodeSet(std::move(m));
  };

  DecoderQueries dq;
  dq.sets = {make(a_pos, b_pos), make(a_neg, b_pos), make(a_pos, b_neg), make(a_neg, b_neg)};
  dq.subtraction = foreach_backward_subtraction(p, loc.block);
  return dq;
}

BitDecode decode_bit(CutOracle& oracle, std::size_t q, const ForEachParams& p,
                     std::span<const std::uint8_t> block_success) {
  const BitLocation loc = locate_bit(p, q);
  require(block_success.size() == p.cluster_pairs(), ErrorCode::kInvalidArgument,
          "block flag count mismatch");
  if (!block_success[loc.pair])
    fail(ErrorCode::kEncodingFailed, "bit " + std::to_string(q) + " lies in a failed block");
  require(oracle.vertex_count() == p.n, ErrorCode::kInvalidArgument, "oracle graph size mismatch");
  const DecoderQueries dq = decoder_cut_set(p, q);
  BitDecode out;
  for (std::size_t r = 0; r < 4; ++r) {
    out.answers[r] = oracle.query(dq.sets[r]);
    out.estimate += dq.coefficients[r] * (out.answers[r] - dq.subtraction);
  }
  out.sign = out.estimate >= 0.0 ? 1 : -1;
  return out;
}

std::vector<std::int8_t> random_signs(std::size_t count, Rng& rng) {
  std::vector<std::int8_t> s(count);
  for (auto& v : s) v = static_cast<std::int8_t>(rng.sign());
  return s;
}

}  // namespace cutlab
