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

#include <cmath>

#include "ekrlab/graph_oracle.hpp"
#include "ekrlab/threshold.hpp"

namespace ekrlab {
namespace {

TEST(CriticalProbability, Values) {
  EXPECT_NEAR(critical_probability(Family::kPermutation, 6), 0.18831, 1e-5);
  EXPECT_NEAR(critical_probability(Family::kMatching, 4), 0.78320, 1e-5);
  EXPECT_NEAR(critical_probability(Family::kPermutation, 5), 0.70756, 1e-5);
  EXPECT_NEAR(critical_probability(Family::kMatching, 4), std::log(2520.0) / 10, 1e-12);
  EXPECT_GT(critical_probability(Family::kPermutation, 4), 1.0);  // reported, not clamped
  for (int n = 3; n <= 20; ++n) {
    EXPECT_NO_THROW(critical_probability(Family::kPermutation, n));
    if (n <= 17) EXPECT_NO_THROW(critical_probability(Family::kMatching, n));
  }
}

TEST(Expectations, SuperstarCount) {
  EXPECT_NEAR(expected_superstar_count(Family::kPermutation, 4, 0.5), 36.0, 1e-9);
  EXPECT_NEAR(expected_superstar_count(Family::kMatching, 3, 0.5), 45.0, 1e-9);
  EXPECT_EQ(expected_superstar_count(Family::kMatching, 5, 1.0), 0.0);
}

TEST(Expectations, FauxStarBound) {
  const double expected = 25.0 * 24 * 120 * std::pow(0.2, 10) * 0.8;
  EXPECT_NEAR(fauxstar_expectation_bound(Family::kPermutation, 5, 0.8, 1, 1), expected,
              1e-12 * expected);
  EXPECT_EQ(fauxstar_expectation_bound(Family::kMatching, 4, 1.0, 2, 3), 0.0);
  const double pc = critical_probability(Family::kPermutation, 5);
  for (std::size_t j = 2; j < 12; ++j) {
    EXPECT_LT(fauxstar_expectation_bound(Family::kPermutation, 5, pc, 1, j),
              fauxstar_expectation_bound(Family::kPermutation, 5, pc, 1, j - 1));
  }
  EXPECT_THROW(fauxstar_expectation_bound(Family::kPermutation, 5, 0.5, 0, 1),
               std::invalid_argument);
  EXPECT_THROW(fauxstar_expectation_bound(Family::kPermutation, 5, 0.5, 3, 2),
               std::invalid_argument);
  EXPECT_THROW(fauxstar_expectation_bound(Family::kPermutation, 6, 0.999999, 120, 120),
               std::overflow_error);
}

TEST(Coins, DeterministicAndMonotone) {
  for (std::uint32_t u = 0; u < 30; ++u) {
    const double x = edge_uniform(99, 4, u, u + 1);
    EXPECT_EQ(x, edge_uniform(99, 4, u, u + 1));
    EXPECT_FALSE(edge_survives(99, 4, u, u + 1, 0.0));
    EXPECT_TRUE(edge_survives(99, 4, u, u + 1, 1.0));
    EXPECT_EQ(edge_survives(99, 4, u, u + 1, 0.5), x < 0.5);
  }
  EXPECT_NE(edge_uniform(1, 0, 2, 3), edge_uniform(1, 1, 2, 3));
  EXPECT_NE(edge_uniform(1, 0, 2, 3), edge_uniform(2, 0, 2, 3));
  EXPECT_THROW(edge_survives(1, 0, 3, 2, 0.5), std::invalid_argument);
}

TEST(Trials, ExplicitAndImplicitSuperstarCountsAgree) {
  for (Family f : {Family::kPermutation, Family::kMatching}) {
    const FamilyGraph g({f, 4});
    for (std::uint64_t t = 0; t < 25; ++t) {
      const double p = 0.2 + 0.03 * static_cast<double>(t);
      const TrialOutcome o = trial_alpha(g, p, 1234, t);
      EXPECT_EQ(o.superstars, superstar_scan(g, p, 1234, t)) << t;
      EXPECT_TRUE(o.star_independent);
      ASSERT_TRUE(o.alpha.has_value());
      EXPECT_GE(*o.alpha, g.star_size());
      EXPECT_EQ(o.implied_faux_star, *o.alpha > g.star_size() && o.superstars == 0);
      EXPECT_EQ(o, trial_alpha(g, p, 1234, t));
    }
  }
}

TEST(Trials, AlphaAtTheExtremes) {
  const FamilyGraph g({Family::kMatching, 3});
  EXPECT_EQ(*trial_alpha(g, 0.0, 1, 0).alpha, 15u);
  const TrialOutcome full = trial_alpha(g, 1.0, 1, 0);
  EXPECT_EQ(*full.alpha, 3u);
  EXPECT_TRUE(full.alpha_witness_is_star);
  EXPECT_EQ(full.superstars, 0u);
  ASSERT_TRUE(full.faux_star_counts.has_value());
  for (std::size_t x : *full.faux_star_counts) EXPECT_EQ(x, 0u);
}

TEST(Trials, FauxStarCountsWhenEnumerable) {
  const FamilyGraph g4({Family::kPermutation, 4});
  const TrialOutcome o = trial_alpha(g4, 0.6, 5, 3);
  ASSERT_TRUE(o.faux_star_counts.has_value());
  EXPECT_EQ(o.faux_star_counts->size(), g4.star_size());
  std::size_t total = 0;
  for (std::size_t x : *o.faux_star_counts) total += x;
  if (*o.alpha == g4.star_size()) EXPECT_EQ(total, 0u);
  if (*o.alpha > g4.star_size() && o.superstars == 0) EXPECT_GT(total, 0u);

  const FamilyGraph m4({Family::kMatching, 4});
  EXPECT_FALSE(trial_alpha(m4, 0.6, 5, 3).faux_star_counts.has_value());
  const FamilyGraph g5({Family::kPermutation, 5});
  EXPECT_THROW(superstar_scan(FamilyGraph({Family::kPermutation, 7}), 0.5, 1, 0), BudgetExceeded);
  EXPECT_NO_THROW(trial_alpha(g5, 0.9, 1, 0));
}

TEST(Trials, MeanSuperstarCountMatchesExpectation) {
  const FamilyGraph g({Family::kPermutation, 4});
  for (double p : {0.3, 0.5, 0.7}) {
    double sum = 0, sum_sq = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
      const double y = static_cast<double>(superstar_scan(g, p, 2024, static_cast<std::uint64_t>(t)));
      sum += y;
      sum_sq += y * y;
    }
    const double mean = sum / trials;
    const double se = std::sqrt((sum_sq / trials - mean * mean) / (trials - 1));
    EXPECT_LT(std::abs(mean - expected_superstar_count(Family::kPermutation, 4, p)), 3 * se)
        << p;
  }
}

TEST(Wilson, Intervals) {
  const WilsonInterval none = wilson_interval(0, 200);
  EXPECT_EQ(none.low, 0.0);
  EXPECT_NEAR(none.high, 0.018845, 1e-6);
  EXPECT_EQ(wilson_interval(200, 200).high, 1.0);
  const WilsonInterval half = wilson_interval(5, 10);
  EXPECT_NEAR(half.low, 0.236593, 1e-6);
  EXPECT_NEAR(half.high, 0.763407, 1e-6);
}

TEST(Grid, Parsing) {
  const auto g = parse_grid("0.3:0.95:11");
  ASSERT_EQ(g.size(), 11u);
  EXPECT_DOUBLE_EQ(g.front(), 0.3);
  EXPECT_DOUBLE_EQ(g.back(), 0.95);
  EXPECT_DOUBLE_EQ(g[1], 0.365);
  EXPECT_EQ(parse_grid("0.5"), std::vector<double>{0.5});
  EXPECT_EQ(parse_grid("0.2:0.9:1"), std::vector<double>{0.2});
  EXPECT_THROW(parse_grid("0.2:0.9"), std::invalid_argument);
  EXPECT_THROW(parse_grid("0.2:x:3"), std::invalid_argument);
  EXPECT_THROW(parse_grid("0.2:0.9:0"), std::invalid_argument);
}

TEST(Sweep, ThreadCountInvariantAndMonotone) {
  SimConfig config;
  config.family = Family::kMatching;
  config.n = 4;
  config.p_grid = parse_grid("0.4:0.9:6");
  config.trials = 40;
  config.seed = 77;
  config.threads = 1;
  const ThresholdReport one = threshold_sweep(config);
  config.threads = 4;
  const ThresholdReport four = threshold_sweep(config);
  EXPECT_EQ(one.to_csv(), four.to_csv());
  // Coins are shared across p, so successes never decrease along the grid.
  for (std::size_t i = 1; i < one.rows.size(); ++i) {
    EXPECT_GE(one.rows[i].successes, one.rows[i - 1].successes);
  }
  EXPECT_EQ(one.to_csv().substr(0, one.to_csv().find('\n')),
            "family,n,p,trials,successes,p_hat,wilson_lo,wilson_hi,mean_Y,pc,p_over_pc");

  config.alpha_mode = false;
  const ThresholdReport scan = threshold_sweep(config);
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    // alpha = N forces Y = 0, so the superstar-free count is at least as large.
    EXPECT_GE(scan.rows[i].successes, one.rows[i].successes);
    EXPECT_EQ(scan.rows[i].mean_superstars, one.rows[i].mean_superstars);
  }
  config.p_grid = {1.5};
  EXPECT_THROW(threshold_sweep(config), std::invalid_argument);
}

}  // namespace
}  // namespace ekrlab
