// Copyright 2026 The ekrlab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "ekrlab/exact_linalg.hpp"

namespace ekrlab {
namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed, int spread = 5) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-spread, spread);
  IntMatrix m(rows, std::vector<BigInt>(cols));
  for (auto& row : m) {
    for (auto& x : row) x = entry(rng);
  }
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.size(), std::vector<BigInt>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

TEST(ExactLinalg, PivotColumnsOfRankDeficientMatrix) {
  const IntMatrix m{{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 1, 1}};
  EXPECT_EQ(pivot_columns(m), (std::vector<std::size_t>{0, 2}));
  EXPECT_TRUE(pivot_columns(IntMatrix{{0, 0}, {0, 0}}).empty());
}

TEST(ExactLinalg, FractionFreeInverse) {
  for (unsigned seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 7;
    const IntMatrix m = random_matrix(n, n, seed);
    if (pivot_columns(m).size() != n) continue;
    const FractionFreeInverse inv = fraction_free_inverse(m);
    ASSERT_NE(inv.scale, 0);
    const IntMatrix product = multiply(m, inv.adj);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(product[i][j], i == j ? inv.scale : BigInt(0));
    }
  }
  EXPECT_THROW(fraction_free_inverse(IntMatrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST(ExactLinalg, IntegerNullspace) {
  for (unsigned seed = 0; seed < 40; ++seed) {
    const std::size_t rows = 1 + seed % 4;
    const std::size_t cols = rows + 1 + seed % 3;
    IntMatrix m = random_matrix(rows, cols, 100 + seed, 3);
    if (seed % 5 == 0) m.push_back(m[0]);  // a repeated row
    const IntMatrix basis = integer_nullspace(m);
    EXPECT_EQ(basis.size(), cols - pivot_columns(m).size());
    for (const auto& v : basis) {
      for (const auto& row : m) {
        BigInt dot = 0;
        for (std::size_t j = 0; j < cols; ++j) dot += row[j] * v[j];
        EXPECT_EQ(dot, 0);
      }
    }
    if (!basis.empty()) {
      // Basis vectors are independent: the basis as a matrix has full row rank.
      IntMatrix transposed(cols, std::vector<BigInt>(basis.size()));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) transposed[j][i] = basis[i][j];
      }
      EXPECT_EQ(pivot_columns(transposed).size(), basis.size());
    }
  }
}

}  // namespace
}  // namespace ekrlab
