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

#include "ekrlab/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ekrlab {

BigInt double_factorial(int k) {
  if (k < -1) throw std::invalid_argument("double_factorial: k < -1");
  BigInt result = 1;
  for (int i = k; i > 1; i -= 2) result *= i;
  return result;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n < 0");
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigInt derangement_count(int n) {
  if (n < 0) throw std::invalid_argument("derangement_count: n < 0");
  BigInt d = 1;  // d_0
  for (int i = 1; i <= n; ++i) {
    d *= i;
    if (i % 2 == 0) {
      d += 1;
    } else {
      d -= 1;
    }
  }
  return d;
}

BigInt matching_derangement_degree(int n) {
  if (n < 1) throw std::invalid_argument("matching_derangement_degree: n < 1");
  BigInt total = 0;
  for (int i = 0; i <= n; ++i) {
    BigInt term = binomial(n, i) * double_factorial(2 * n - 2 * i - 1);
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::uint8_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint8_t image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw std::invalid_argument("Permutation: images are not a bijection");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<std::uint8_t>(i);
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) {
    throw std::invalid_argument("Permutation::compose: size mismatch");
  }
  std::vector<std::uint8_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[i] = images_[other.images_[i]];
  }
  return Permutation(std::move(out));
}

bool Permutation::is_derangement() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == i) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i != 0) out << ',';
    out << images_[i] + 1;
  }
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------
// PerfectMatching

PerfectMatching::PerfectMatching(std::vector<Pair> pairs)
    : pairs_(std::move(pairs)) {
  std::vector<bool> seen(2 * pairs_.size(), false);
  for (auto& [a, b] : pairs_) {
    if (a > b) std::swap(a, b);
    if (a == b || b >= seen.size() || seen[a] || seen[b]) {
      throw std::invalid_argument("PerfectMatching: pairs do not partition {1..2n}");
    }
    seen[a] = seen[b] = true;
  }
  std::sort(pairs_.begin(), pairs_.end());
}

PerfectMatching PerfectMatching::from_partners(
    std::span<const std::uint8_t> partner) {
  if (partner.size() % 2 != 0) {
    throw std::invalid_argument("PerfectMatching: odd partner array");
  }
  std::vector<Pair> pairs;
  pairs.reserve(partner.size() / 2);
  for (std::size_t x = 0; x < partner.size(); ++x) {
    const std::size_t y = partner[x];
    if (y >= partner.size() || partner[y] != x || y == x) {
      throw std::invalid_argument("PerfectMatching: partner array is not an involution");
    }
    if (x < y) pairs.emplace_back(static_cast<std::uint8_t>(x), partner[x]);
  }
  return PerfectMatching(std::move(pairs));
}

std::vector<std::uint8_t> PerfectMatching::partners() const {
  std::vector<std::uint8_t> partner(2 * pairs_.size());
  for (auto [a, b] : pairs_) {
    partner[a] = b;
    partner[b] = a;
  }
  return partner;
}

bool PerfectMatching::contains(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(
      pairs_.begin(), pairs_.end(),
      Pair{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
}

std::string PerfectMatching::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i != 0) out << ',';
    out << '(' << pairs_[i].first + 1 << ',' << pairs_[i].second + 1 << ')';
  }
  out << '}';
  return out.str();
}

// ---------------------------------------------------------------------------
// Ranking

std::uint64_t permutation_count(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("permutation_count: n outside [0, 20]");
  std::uint64_t result = 1;
  for (int i = 2; i <= n; ++i) result *= static_cast<std::uint64_t>(i);
  return result;
}

std::uint64_t matching_count(int n) {
  if (n < 0 || n > 17) throw std::out_of_range("matching_count: n outside [0, 17]");
  std::uint64_t result = 1;
  for (int i = 2 * n - 1; i > 1; i -= 2) result *= static_cast<std::uint64_t>(i);
  return result;
}

Permutation unrank_permutation(int n, std::uint64_t rank) {
  const std::uint64_t total = permutation_count(n);
  if (rank >= total) throw std::out_of_range("unrank_permutation: rank out of range");
  std::vector<std::uint8_t> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), std::uint8_t{0});
  std::vector<std::uint8_t> images;
  images.reserve(pool.size());
  std::uint64_t block = total;
  for (int remaining = n; remaining > 0; --remaining) {
    block /= static_cast<std::uint64_t>(remaining);
    const std::uint64_t digit = rank / block;
    rank %= block;
    images.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(images));
}

std::uint64_t rank_permutation(const Permutation& sigma) {
  const int n = sigma.size();
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    const int image = sigma(i);
    const int smaller_unused =
        image - std::popcount(used & ((std::uint32_t{1} << image) - 1));
    rank = rank * static_cast<std::uint64_t>(n - i) +
           static_cast<std::uint64_t>(smaller_unused);
    used |= std::uint32_t{1} << image;
  }
  return rank;
}

PerfectMatching unrank_matching(int n, std::uint64_t rank) {
  const std::uint64_t total = matching_count(n);
  if (rank >= total) throw std::out_of_range("unrank_matching: rank out of range");
  std::vector<std::uint8_t> free_vertices(static_cast<std::size_t>(2 * n));
  std::iota(free_vertices.begin(), free_vertices.end(), std::uint8_t{0});
  std::vector<PerfectMatching::Pair> pairs;
  std::uint64_t block = total;
  for (int m = n; m > 0; --m) {
    block /= static_cast<std::uint64_t>(2 * m - 1);
    const std::uint64_t j = rank / block;
    rank %= block;
    const std::uint8_t a = free_vertices[0];
    const std::uint8_t b = free_vertices[1 + j];
    pairs.emplace_back(a, b);
    free_vertices.erase(free_vertices.begin() + 1 + static_cast<std::ptrdiff_t>(j));
    free_vertices.erase(free_vertices.begin());
  }
  return PerfectMatching(std::move(pairs));
}

std::uint64_t rank_matching(const PerfectMatching& m) {
  const int n = m.size();
  const auto partner = m.partners();
  std::vector<bool> used(partner.size(), false);
  std::uint64_t rank = 0;
  for (int remaining = n; remaining > 0; --remaining) {
    std::size_t a = 0;
    while (used[a]) ++a;
    const std::size_t b = partner[a];
    std::uint64_t j = 0;
    for (std::size_t x = a + 1; x < b; ++x) {
      if (!used[x]) ++j;
    }
    rank = rank * static_cast<std::uint64_t>(2 * remaining - 1) + j;
    used[a] = used[b] = true;
  }
  return rank;
}

bool relative_derangement(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) {
    throw std::invalid_argument("relative_derangement: size mismatch");
  }
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma(i) == tau(i)) return false;
  }
  return true;
}

int common_edge_count(const PerfectMatching& p, const PerfectMatching& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("common_edge_count: size mismatch");
  }
  int shared = 0;
  for (auto pair : p.pairs()) {
    if (q.contains(pair.first, pair.second)) ++shared;
  }
  return shared;
}

}  // namespace ekrlab
