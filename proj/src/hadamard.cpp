#include "cutlab/hadamard.hpp"

#include <bit>
#include <string>

#include "cutlab/error.hpp"

namespace cutlab {

HadamardMatrix::HadamardMatrix(int k) : k_(k) {
  require(k >= 0 && k <= 12, ErrorCode::kInvalidArgument,
          "hadamard order exponent must be in [0, 12], got " + std::to_string(k));
}

int HadamardMatrix::entry(std::size_t row, std::size_t col) const {
  require(row >= 1 && row <= order() && col >= 1 && col <= order(), ErrorCode::kInvalidArgument,
          "hadamard index out of range");
  return (std::popcount((row - 1) & (col - 1)) & 1) ? -1 : 1;
}

SignVector HadamardMatrix::row(std::size_t i) const {
  require(i >= 1 && i <= order(), ErrorCode::kInvalidArgument, "hadamard row out of range");
  SignVector r(order());
  for (std::size_t b = 0; b < order(); ++b) r[b] = (std::popcount((i - 1) & b) & 1) ? -1 : 1;
  return r;
}

HadamardMatrix hadamard(int k) { return HadamardMatrix(k); }

EncodingMatrix::EncodingMatrix(int k) : k_(k) {
  require(k >= 1 && k <= 12, ErrorCode::kInvalidArgument,
          "encoding matrix exponent must be in [1, 12], got " + std::to_string(k));
}

std::pair<std::size_t, std::size_t> EncodingMatrix::row_index_pair(std::size_t t) const {
  require(t >= 1 && t <= row_count(), ErrorCode::kInvalidArgument,
          "row index " + std::to_string(t) + " out of range [1, " + std::to_string(row_count()) + "]");
  const std::size_t w = side() - 1;
  return {(t - 1) / w + 2, (t - 1) % w + 2};
}

std::size_t EncodingMatrix::row_of_pair(std::size_t i, std::size_t j) const {
  require(i >= 2 && i <= side() && j >= 2 && j <= side(), ErrorCode::kInvalidArgument,
          "index pair out of range");
  return (i - 2) * (side() - 1) + (j - 2) + 1;
}

EncodingRow EncodingMatrix::row(std::size_t t) const {
  auto [i, j] = row_index_pair(t);
  HadamardMatrix h(k_);
  EncodingRow r;
  r.i = i;
  r.j = j;
  r.h_a = h.row(i);
  r.h_b = h.row(j);
  const std::size_t s = side();
  r.entries.resize(s * s);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b)
      r.entries[a * s + b] = static_cast<std::int8_t>(r.h_a[a] * r.h_b[b]);
  return r;
}

int EncodingMatrix::entry(std::size_t t, std::size_t column) const {
  auto [i, j] = row_index_pair(t);
  require(column < dimension(), ErrorCode::kInvalidArgument, "column out of range");
  const std::size_t a = column / side();
  const std::size_t b = column % side();
  return ((std::popcount((i - 1) & a) + std::popcount((j - 1) & b)) & 1) ? -1 : 1;
}

std::pair<std::size_t, std::size_t> row_index_pair(int k, std::size_t t) {
  return EncodingMatrix(k).row_index_pair(t);
}

EncodingRow encoding_row(int k, std::size_t t) { return EncodingMatrix(k).row(t); }

std::int64_t dot(const SignVector& a, const SignVector& b) {
  require(a.size() == b.size(), ErrorCode::kInvalidArgument, "dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace cutlab
