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

#include "ekrlab/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ekrlab {

std::vector<std::size_t> pivot_columns(IntMatrix m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  if (rows == 0) return pivots;
  const std::size_t cols = m[0].size();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

FractionFreeInverse fraction_free_inverse(IntMatrix m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("fraction_free_inverse: not square");
    m[i].resize(2 * n, 0);
    m[i][n + i] = 1;
  }
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("fraction_free_inverse: singular matrix");
    std::swap(m[k], m[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  FractionFreeInverse out;
  out.scale = n == 0 ? BigInt(1) : m[0][0];
  out.adj.assign(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != out.scale) {
      throw IdentityViolation("fraction-free Gauss-Jordan: unequal diagonal");
    }
    for (std::size_t j = 0; j < n; ++j) out.adj[i][j] = std::move(m[i][n + j]);
  }
  return out;
}

IntMatrix integer_nullspace(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::vector<BigRational>> r(rows, std::vector<BigRational>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) r[i][j] = m[i][j];
  }
  // Reduced row echelon form.
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && r[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(r[rank], r[pivot]);
    const BigRational inv = 1 / r[rank][c];
    for (std::size_t j = c; j < cols; ++j) r[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || r[i][c] == 0) continue;
      const BigRational factor = r[i][c];
      for (std::size_t j = c; j < cols; ++j) r[i][j] -= factor * r[rank][j];
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  IntMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRational> v(cols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r[k][free];
    BigInt lcm = 1;
    for (const auto& x : v) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<BigInt> scaled(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      scaled[j] = v[j].get_num() * (lcm / v[j].get_den());
    }
    basis.push_back(std::move(scaled));
  }
  return basis;
}

}  // namespace ekrlab
