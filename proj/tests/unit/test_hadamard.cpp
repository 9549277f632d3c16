#include <gtest/gtest.h>

#include "cutlab/error.hpp"
#include "cutlab/hadamard.hpp"

using namespace cutlab;

namespace {

// Sylvester recursion built literally, as an independent reference.
std::vector<std::vector<int>> sylvester(int k) {
  std::vector<std::vector<int>> h{{1}};
  for (int s = 0; s < k; ++s) {
    const std::size_t m = h.size();
    std::vector<std::vector<int>> next(2 * m, std::vector<int>(2 * m));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        next[r][c] = h[r][c];
        next[r][c + m] = h[r][c];
        next[r + m][c] = h[r][c];
        next[r + m][c + m] = -h[r][c];
      }
    h = std::move(next);
  }
  return h;
}

}  // namespace

TEST(Hadamard, MatchesRecursion) {
  for (int k = 0; k <= 6; ++k) {
    auto ref = sylvester(k);
    HadamardMatrix h(k);
    for (std::size_t r = 0; r < ref.size(); ++r)
      for (std::size_t c = 0; c < ref.size(); ++c) ASSERT_EQ(h.entry(r + 1, c + 1), ref[r][c]);
  }
}

TEST(Hadamard, Examples) {
  auto h1 = hadamard(1);
  EXPECT_EQ(h1.row(1), (SignVector{1, 1}));
  EXPECT_EQ(h1.row(2), (SignVector{1, -1}));
  EXPECT_EQ(hadamard(2).row(3), (SignVector{1, 1, -1, -1}));
  auto h3 = hadamard(3);
  for (std::size_t i = 1; i <= 8; ++i)
    for (std::size_t j = 1; j <= 8; ++j) EXPECT_EQ(dot(h3.row(i), h3.row(j)), i == j ? 8 : 0);
}

TEST(Hadamard, Range) {
  EXPECT_THROW(hadamard(-1), Error);
  EXPECT_THROW(hadamard(13), Error);
  EXPECT_NO_THROW(hadamard(12));
}

TEST(EncodingMatrix, RowIndexPair) {
  EXPECT_EQ(row_index_pair(2, 1), (std::pair<std::size_t, std::size_t>{2, 2}));
  EXPECT_EQ(row_index_pair(2, 4), (std::pair<std::size_t, std::size_t>{3, 2}));
  EXPECT_EQ(row_index_pair(1, 1), (std::pair<std::size_t, std::size_t>{2, 2}));
  EXPECT_THROW(row_index_pair(2, 0), Error);
  EXPECT_THROW(row_index_pair(2, 10), Error);
  EncodingMatrix m(3);
  for (std::size_t t = 1; t <= m.row_count(); ++t) {
    auto [i, j] = m.row_index_pair(t);
    EXPECT_EQ(m.row_of_pair(i, j), t);
  }
}

TEST(EncodingMatrix, K1Row) {
  auto r = encoding_row(1, 1);
  EXPECT_EQ(r.entries, (SignVector{1, -1, -1, 1}));
  EXPECT_EQ(r.h_a, (SignVector{1, -1}));
  EXPECT_EQ(r.h_b, (SignVector{1, -1}));
}

TEST(EncodingMatrix, OrthogonalityExplicit) {
  for (int k = 1; k <= 4; ++k) {
    EncodingMatrix m(k);
    std::vector<SignVector> rows;
    const SignVector ones(m.dimension(), 1);
    for (std::size_t t = 1; t <= m.row_count(); ++t) {
      rows.push_back(m.row(t).entries);
      ASSERT_EQ(dot(rows.back(), ones), 0);
      ASSERT_EQ(dot(rows.back(), rows.back()), static_cast<std::int64_t>(m.dimension()));
    }
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = a + 1; b < rows.size(); ++b) ASSERT_EQ(dot(rows[a], rows[b]), 0);
  }
}

TEST(EncodingMatrix, TensorColumnConvention) {
  EncodingMatrix m(2);
  for (std::size_t t = 1; t <= m.row_count(); ++t) {
    auto r = m.row(t);
    EXPECT_EQ(dot(r.h_a, SignVector(4, 1)), 0);
    EXPECT_EQ(dot(r.h_b, SignVector(4, 1)), 0);
    for (std::size_t a = 1; a <= 4; ++a)
      for (std::size_t b = 1; b <= 4; ++b) {
        const std::size_t col = (a - 1) * 4 + (b - 1);
        EXPECT_EQ(r.entries[col], r.h_a[a - 1] * r.h_b[b - 1]);
        EXPECT_EQ(m.entry(t, col), r.entries[col]);
      }
  }
  EXPECT_EQ(dot(m.row(1).entries, m.row(5).entries), 0);
}
