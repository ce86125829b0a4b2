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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ekrlab {

/// Dense subset of {0, ..., universe-1} held as 64-bit words with a cached
/// cardinality. Ordering compares the sorted index lists lexicographically,
/// which is the canonical order used in every enumerated report.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  static VertexSet from_indices(std::size_t universe,
                                std::span<const std::size_t> indices);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(std::size_t i) const;
  void insert(std::size_t i);
  void erase(std::size_t i);

  std::vector<std::size_t> indices() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::size_t intersection_count(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  VertexSet set_union(const VertexSet& other) const;
  VertexSet set_difference(const VertexSet& other) const;
  VertexSet symmetric_difference(const VertexSet& other) const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        fn(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b);

 private:
  void check_compatible(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ekrlab
