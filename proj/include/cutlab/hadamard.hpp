#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cutlab {

using SignVector = std::vector<std::int8_t>;

/// Sylvester-order Hadamard matrix of order 2^k. Rows and columns are 1-based.
class HadamardMatrix {
 public:
  explicit HadamardMatrix(int k);

  int k() const { return k_; }
  std::size_t order() const { return std::size_t{1} << k_; }
  int entry(std::size_t row, std::size_t col) const;
  SignVector row(std::size_t i) const;

 private:
  int k_;
};

HadamardMatrix hadamard(int k);

struct EncodingRow {
  std::size_t i = 0;
  std::size_t j = 0;
  SignVector entries;  // length 4^k; column (a-1)*2^k + (b-1) holds H_i[a]*H_j[b]
  SignVector h_a;      // H_i
  SignVector h_b;      // H_j
};

/// Implicit (2^k - 1)^2 x 4^k sign matrix whose rows are tensor products of
/// non-constant Hadamard rows. Rows are 1-based.
class EncodingMatrix {
 public:
  explicit EncodingMatrix(int k);

  int k() const { return k_; }
  std::size_t side() const { return std::size_t{1} << k_; }
  std::size_t row_count() const { return (side() - 1) * (side() - 1); }
  std::size_t dimension() const { return side() * side(); }

  std::pair<std::size_t, std::size_t> row_index_pair(std::size_t t) const;
  std::size_t row_of_pair(std::size_t i, std::size_t j) const;
  EncodingRow row(std::size_t t) const;
  int entry(std::size_t t, std::size_t column) const;

 private:
  int k_;
};

std::pair<std::size_t, std::size_t> row_index_pair(int k, std::size_t t);
EncodingRow encoding_row(int k, std::size_t t);

std::int64_t dot(const SignVector& a, const SignVector& b);

}  // namespace cutlab
