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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ekrlab/graph_oracle.hpp"
#include "ekrlab/numeric.hpp"

namespace ekrlab {

/// Threshold probability for alpha(G_p) = N. The family closed form
/// ((n-1) ln(n! n(n-1)) / d_n, or (2n-2) ln(n(2n-2)(2n-1)!!) / dd_n) is
/// returned after checking it against ln(K (V - N)) / M to 1e-12 relative.
double critical_probability(Family family, int n);

/// Deterministic coin for the edge {u, v} (u < v) in trial `trial`: a Philox
/// block keyed by the seed with counter (u, v, trial), mapped to [0, 1) and
/// compared with p. The same trial index is used at every p, so the sampled
/// subgraphs are nested as p grows.
bool edge_survives(std::uint64_t seed, std::uint64_t trial, std::uint32_t u, std::uint32_t v,
                   double p);
double edge_uniform(std::uint64_t seed, std::uint64_t trial, std::uint32_t u, std::uint32_t v);

/// Number of superstars S_x + v whose M edges between v and S_x were all
/// deleted.
std::size_t superstar_scan(const FamilyGraph& g, double p, std::uint64_t seed,
                           std::uint64_t trial, const Budgets& budgets = default_budgets());

struct TrialOutcome {
  std::uint64_t trial = 0;
  std::size_t superstars = 0;             // Y
  std::optional<std::size_t> alpha;
  bool alpha_witness_is_star = false;
  bool star_independent = false;          // some star spans no surviving edge
  /// X_i for i = 1..N (index i-1): independent faux stars whose largest
  /// star intersection is N - i. Only filled when exhaustive enumeration fits.
  std::optional<std::vector<std::size_t>> faux_star_counts;
  /// alpha > N with no independent superstar, which forces a faux star.
  bool implied_faux_star = false;

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

/// Materialises the surviving subgraph and solves it exactly.
TrialOutcome trial_alpha(const FamilyGraph& g, double p, std::uint64_t seed,
                         std::uint64_t trial, const Budgets& budgets = default_budgets());

struct SimConfig {
  Family family = Family::kMatching;
  int n = 4;
  std::vector<double> p_grid;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  /// Solve alpha per trial. When off, a trial counts as a success when it has
  /// no independent superstar (a necessary condition for alpha = N).
  bool alpha_mode = true;
};

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

/// Two-sided 95% Wilson score interval.
WilsonInterval wilson_interval(std::size_t successes, std::size_t trials);

struct ThresholdRow {
  double p = 0.0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double p_hat = 0.0;
  WilsonInterval interval;
  double mean_superstars = 0.0;
  double pc = 0.0;
  double p_over_pc = 0.0;
  std::size_t implied_faux_stars = 0;
};

struct ThresholdReport {
  Family family = Family::kMatching;
  int n = 0;
  std::vector<ThresholdRow> rows;

  /// family,n,p,trials,successes,p_hat,wilson_lo,wilson_hi,mean_Y,pc,p_over_pc
  std::string to_csv() const;
};

ThresholdReport threshold_sweep(const SimConfig& config,
                                const Budgets& budgets = default_budgets());

/// "a:b:k" -> k evenly spaced points from a to b inclusive; a single number
/// is a one-point grid.
std::vector<double> parse_grid(const std::string& text);

/// K (V - N) (1 - p)^M.
double expected_superstar_count(Family family, int n, double p);

/// K C(N, i) C(V, j) (1 - p)^{j (M - i)} (j p)^i, evaluated in log space.
double fauxstar_expectation_bound(Family family, int n, double p, std::size_t i,
                                  std::size_t j);

}  // namespace ekrlab
