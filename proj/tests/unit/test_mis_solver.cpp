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
#include <vector>

#include "ekrlab/dense_graph.hpp"
#include "ekrlab/graph_oracle.hpp"
#include "ekrlab/mis_solver.hpp"

namespace ekrlab {
namespace {

DenseGraph random_graph(std::size_t v, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  DenseGraph g(v);
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

// All independent sets by subset enumeration; small graphs only.
std::vector<VertexSet> brute_independent_sets(const DenseGraph& g) {
  std::vector<VertexSet> out;
  const std::size_t v = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << v); ++mask) {
    VertexSet s(v);
    for (std::size_t i = 0; i < v; ++i) {
      if (mask >> i & 1u) s.insert(i);
    }
    if (g.is_independent(s)) out.push_back(s);
  }
  return out;
}

bool is_maximal(const DenseGraph& g, const VertexSet& s) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v)) continue;
    VertexSet t = s;
    t.insert(v);
    if (g.is_independent(t)) return false;
  }
  return true;
}

TEST(MaxIndependentSet, EmptyAndCompleteGraphs) {
  EXPECT_EQ(max_independent_set(DenseGraph(10)).size, 10u);
  DenseGraph k5(5);
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = a + 1; b < 5; ++b) k5.add_edge(a, b);
  }
  EXPECT_EQ(max_independent_set(k5).size, 1u);
  EXPECT_EQ(enumerate_maximum_independent_sets(k5).size(), 5u);
  EXPECT_EQ(max_independent_set(DenseGraph(0)).size, 0u);
}

TEST(MaxIndependentSet, FamilyGraphs) {
  const FamilyGraph g3({Family::kPermutation, 3});
  const DenseGraph d3 = materialize(g3);
  EXPECT_EQ(max_independent_set(d3).size, 2u);
  const auto gamma3 = enumerate_maximum_independent_sets(d3);
  EXPECT_EQ(gamma3.size(), 9u);
  for (const auto& s : gamma3) EXPECT_TRUE(contained_in_star(g3, s));

  const FamilyGraph m3({Family::kMatching, 3});
  const DenseGraph dm3 = materialize(m3);
  const auto at_least = enumerate_independent_sets_at_least(dm3, 3);
  EXPECT_EQ(at_least.size(), 15u);
  for (const auto& s : at_least) EXPECT_TRUE(contained_in_star(m3, s));
  EXPECT_TRUE(enumerate_independent_sets_at_least(dm3, 4).empty());
  EXPECT_EQ(enumerate_independent_sets_at_least(d3, 2).size(), 9u);

  const FamilyGraph m4({Family::kMatching, 4});
  const MisResult r = max_independent_set(materialize(m4), 15);
  EXPECT_EQ(r.size, 15u);
  EXPECT_TRUE(contained_in_star(m4, r.witness));

  const FamilyGraph g4({Family::kPermutation, 4});
  const auto gamma4 = enumerate_maximum_independent_sets(materialize(g4));
  EXPECT_EQ(gamma4.size(), 16u);
}

TEST(MaxIndependentSet, AgreesWithBruteForceOnRandomGraphs) {
  for (unsigned seed = 0; seed < 40; ++seed) {
    const std::size_t v = 6 + seed % 9;
    const DenseGraph g = random_graph(v, 0.15 + 0.02 * (seed % 20), seed);
    const auto all = brute_independent_sets(g);
    std::size_t alpha = 0;
    for (const auto& s : all) alpha = std::max(alpha, s.count());

    for (std::size_t hint : {std::size_t{0}, alpha, alpha + 2}) {
      const MisResult r = max_independent_set(g, hint);
      EXPECT_EQ(r.size, alpha) << "seed " << seed << " hint " << hint;
      EXPECT_EQ(r.witness.count(), alpha);
      EXPECT_TRUE(g.is_independent(r.witness));
    }

    std::vector<VertexSet> maximum, big, maximal;
    const std::size_t t = alpha > 1 ? alpha - 1 : 1;
    for (const auto& s : all) {
      if (s.count() == alpha) maximum.push_back(s);
      if (s.count() >= t) big.push_back(s);
      if (is_maximal(g, s) && s.count() >= 2) maximal.push_back(s);
    }
    std::sort(maximum.begin(), maximum.end());
    std::sort(big.begin(), big.end());
    std::sort(maximal.begin(), maximal.end());
    EXPECT_EQ(enumerate_maximum_independent_sets(g), maximum) << seed;
    EXPECT_EQ(enumerate_independent_sets_at_least(g, t), big) << seed;
    EXPECT_EQ(enumerate_maximal_independent_sets(g, 2), maximal) << seed;
  }
}

TEST(MaxIndependentSet, Budgets) {
  Budgets tight;
  tight.enumeration_cap = 3;
  const FamilyGraph m3({Family::kMatching, 3});
  EXPECT_THROW(enumerate_maximum_independent_sets(materialize(m3), tight), BudgetExceeded);
  tight.mis_vertex_max = 10;
  EXPECT_THROW(max_independent_set(materialize(m3), 0, tight), BudgetExceeded);
}

}  // namespace
}  // namespace ekrlab
