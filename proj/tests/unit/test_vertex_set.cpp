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

#include <vector>

#include "ekrlab/vertex_set.hpp"

namespace ekrlab {
namespace {

TEST(VertexSet, InsertEraseCount) {
  VertexSet s(130);
  s.insert(0);
  s.insert(64);
  s.insert(129);
  s.insert(64);
  EXPECT_EQ(s.count(), 3u);
  EXPECT_TRUE(s.contains(129));
  s.erase(0);
  s.erase(0);
  EXPECT_EQ(s.count(), 2u);
  EXPECT_EQ(s.indices(), (std::vector<std::size_t>{64, 129}));
  EXPECT_THROW(s.insert(130), std::out_of_range);
}

TEST(VertexSet, SetAlgebra) {
  const std::vector<std::size_t> ai{1, 2, 3, 70};
  const std::vector<std::size_t> bi{3, 4, 70, 99};
  const VertexSet a = VertexSet::from_indices(100, ai);
  const VertexSet b = VertexSet::from_indices(100, bi);
  EXPECT_EQ(a.intersection_count(b), 2u);
  EXPECT_EQ(a.set_union(b).count(), 6u);
  EXPECT_EQ(a.set_difference(b).indices(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(a.symmetric_difference(b).count(), 4u);
  EXPECT_TRUE(a.set_difference(b).is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_EQ(VertexSet::full(100).count(), 100u);
  EXPECT_THROW(a.intersection_count(VertexSet(99)), std::invalid_argument);
}

TEST(VertexSet, ForEachVisitsInOrder) {
  const std::vector<std::size_t> idx{0, 5, 63, 64, 127, 128};
  const VertexSet s = VertexSet::from_indices(200, idx);
  std::vector<std::size_t> seen;
  s.for_each([&](std::size_t v) { seen.push_back(v); });
  EXPECT_EQ(seen, idx);
}

TEST(VertexSet, OrderingIsLexicographicOnIndices) {
  const std::vector<std::size_t> x{1, 5};
  const std::vector<std::size_t> y{1, 2, 9};
  const std::vector<std::size_t> z{1};
  const VertexSet a = VertexSet::from_indices(10, x);
  const VertexSet b = VertexSet::from_indices(10, y);
  const VertexSet c = VertexSet::from_indices(10, z);
  EXPECT_LT(b, a);  // (1,2,9) < (1,5)
  EXPECT_LT(c, b);  // proper prefix first
  EXPECT_EQ(a <=> a, std::strong_ordering::equal);
}

}  // namespace
}  // namespace ekrlab
