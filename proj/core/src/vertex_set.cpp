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

#include "ekrlab/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ekrlab {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet VertexSet::from_indices(std::size_t universe,
                                  std::span<const std::size_t> indices) {
  VertexSet s(universe);
  for (std::size_t i : indices) s.insert(i);
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  s.count_ = universe;
  return s;
}

bool VertexSet::contains(std::size_t i) const {
  if (i >= universe_) throw std::out_of_range("VertexSet: index out of range");
  return (words_[i / 64] >> (i % 64)) & 1U;
}

void VertexSet::insert(std::size_t i) {
  if (i >= universe_) throw std::out_of_range("VertexSet: index out of range");
  std::uint64_t& w = words_[i / 64];
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if ((w & mask) == 0) {
    w |= mask;
    ++count_;
  }
}

void VertexSet::erase(std::size_t i) {
  if (i >= universe_) throw std::out_of_range("VertexSet: index out of range");
  std::uint64_t& w = words_[i / 64];
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if ((w & mask) != 0) {
    w &= ~mask;
    --count_;
  }
}

std::vector<std::size_t> VertexSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count_);
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

void VertexSet::check_compatible(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw std::invalid_argument("VertexSet: universe mismatch");
  }
}

std::size_t VertexSet::intersection_count(const VertexSet& other) const {
  check_compatible(other);
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
  }
  return total;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

namespace {

template <typename Op>
VertexSet combine(const VertexSet& a, const VertexSet& b, Op op) {
  VertexSet out(a.universe());
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    std::uint64_t bits = op(wa[w], wb[w]);
    while (bits != 0) {
      out.insert(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace

VertexSet VertexSet::set_union(const VertexSet& other) const {
  check_compatible(other);
  return combine(*this, other, [](auto x, auto y) { return x | y; });
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
  check_compatible(other);
  return combine(*this, other, [](auto x, auto y) { return x & ~y; });
}

VertexSet VertexSet::symmetric_difference(const VertexSet& other) const {
  check_compatible(other);
  return combine(*this, other, [](auto x, auto y) { return x ^ y; });
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  if (auto cmp = a.universe_ <=> b.universe_; cmp != 0) return cmp;
  // Lexicographic on sorted index lists: scan for the first differing element.
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const std::uint64_t low = diff & (~diff + 1);
    // The set that owns the lowest differing index has the smaller element
    // at that position, unless the other set has already run out.
    const bool a_owns = (a.words_[w] & low) != 0;
    const std::uint64_t above = ~((low << 1) - 1);
    bool other_has_more = false;
    const auto& other = a_owns ? b : a;
    if ((other.words_[w] & above) != 0) {
      other_has_more = true;
    } else {
      for (std::size_t v = w + 1; v < other.words_.size(); ++v) {
        if (other.words_[v] != 0) {
          other_has_more = true;
          break;
        }
      }
    }
    if (!other_has_more) {
      // The other set is a prefix of the owner's list, so it sorts first.
      return a_owns ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a_owns ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace ekrlab
