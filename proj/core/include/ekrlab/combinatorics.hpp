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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ekrlab/numeric.hpp"

namespace ekrlab {

// Counting oracles. All exact.

/// k!! = k (k-2) (k-4) ... down to 1 or 2; the empty product for k in {-1, 0}.
BigInt double_factorial(int k);
BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Number of fixed-point-free permutations of n points, by the integer
/// recurrence d_n = n d_{n-1} + (-1)^n.
BigInt derangement_count(int n);

/// Degree of the perfect matching graph: the number of perfect matchings of
/// K_{2n} sharing no edge with a fixed one (inclusion-exclusion).
BigInt matching_derangement_degree(int n);

/// Permutation of {0, ..., n-1}, stored by images. Printed 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint8_t> images);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const std::uint8_t> images() const noexcept { return images_; }

  Permutation inverse() const;
  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  bool is_derangement() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// Perfect matching of K_{2n} on vertices {0, ..., 2n-1}, held in canonical
/// form: each pair (a, b) has a < b and pairs ascend by first element.
class PerfectMatching {
 public:
  using Pair = std::pair<std::uint8_t, std::uint8_t>;

  explicit PerfectMatching(std::vector<Pair> pairs);
  /// From a partner array: partner[partner[x]] == x, partner[x] != x.
  static PerfectMatching from_partners(std::span<const std::uint8_t> partner);

  int size() const noexcept { return static_cast<int>(pairs_.size()); }
  std::span<const Pair> pairs() const noexcept { return pairs_; }
  /// partner(x) for every vertex x of K_{2n}.
  std::vector<std::uint8_t> partners() const;
  bool contains(int a, int b) const;

  std::string to_string() const;

  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;

 private:
  std::vector<Pair> pairs_;
};

// Ranks are lexicographic on image sequences for permutations and follow the
// "match the smallest free vertex to each larger partner in turn" order for
// matchings. Both fit in 64 bits for every size the library enumerates.
std::uint64_t permutation_count(int n);
std::uint64_t matching_count(int n);

Permutation unrank_permutation(int n, std::uint64_t rank);
std::uint64_t rank_permutation(const Permutation& sigma);

PerfectMatching unrank_matching(int n, std::uint64_t rank);
std::uint64_t rank_matching(const PerfectMatching& m);

/// True iff sigma tau^{-1} has no fixed point.
bool relative_derangement(const Permutation& sigma, const Permutation& tau);

/// Number of edges shared by two matchings.
int common_edge_count(const PerfectMatching& p, const PerfectMatching& q);

}  // namespace ekrlab
