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

#include "ekrlab/threshold.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ekrlab/combinatorics.hpp"
#include "ekrlab/dense_graph.hpp"
#include "ekrlab/mis_solver.hpp"
#include "ekrlab/philox.hpp"

namespace ekrlab {

namespace {

constexpr double kWilsonZ = 1.959963984540054;

std::string fmt(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

// Members of every star, in rank order.
std::vector<std::vector<std::uint32_t>> star_members(const FamilyGraph& g) {
  std::vector<std::vector<std::uint32_t>> members(g.star_count());
  std::vector<std::size_t> stars(static_cast<std::size_t>(g.stars_per_vertex()));
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    g.stars_of(v, stars.data());
    for (std::size_t x : stars) members[x].push_back(static_cast<std::uint32_t>(v));
  }
  return members;
}

}  // namespace

double critical_probability(Family family, int n) {
  if (n < 3) throw std::invalid_argument("critical_probability: n >= 3 required");
  const GraphParams params = graph_params({family, n});
  double closed = 0.0;
  if (family == Family::kPermutation) {
    closed = (n - 1) * log_bigint(factorial(n) * n * (n - 1)) / params.d.get_d();
  } else {
    closed = (2 * n - 2) * log_bigint(BigInt(n) * (2 * n - 2) * double_factorial(2 * n - 1)) /
             params.d.get_d();
  }
  const double generic = threshold_probability(params);
  if (std::abs(closed - generic) > 1e-12 * std::abs(generic)) {
    throw IdentityViolation("critical probability forms disagree");
  }
  return closed;
}

double edge_uniform(std::uint64_t seed, std::uint64_t trial, std::uint32_t u, std::uint32_t v) {
  const PhiloxKey key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  const PhiloxCounter counter{u, v, static_cast<std::uint32_t>(trial),
                              static_cast<std::uint32_t>(trial >> 32)};
  return philox_uniform(philox4x32_10(counter, key));
}

bool edge_survives(std::uint64_t seed, std::uint64_t trial, std::uint32_t u, std::uint32_t v,
                   double p) {
  if (u >= v) throw std::invalid_argument("edge_survives: need u < v");
  return edge_uniform(seed, trial, u, v) < p;
}

std::size_t superstar_scan(const FamilyGraph& g, double p, std::uint64_t seed,
                           std::uint64_t trial, const Budgets& budgets) {
  if (g.vertex_count() > budgets.superstar_scan_vertex_max) {
    throw BudgetExceeded("superstar_scan_vertex_max", budgets.superstar_scan_vertex_max,
                         g.vertex_count());
  }
  const auto members = star_members(g);
  std::size_t count = 0;
  for (std::size_t x = 0; x < g.star_count(); ++x) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (g.in_star(v, x)) continue;
      bool isolated = true;
      for (std::uint32_t u : members[x]) {
        if (!g.adjacent(u, v)) continue;
        const auto vv = static_cast<std::uint32_t>(v);
        if (edge_survives(seed, trial, std::min(u, vv), std::max(u, vv), p)) {
          isolated = false;
          break;
        }
      }
      if (isolated) ++count;
    }
  }
  return count;
}

TrialOutcome trial_alpha(const FamilyGraph& g, double p, std::uint64_t seed,
                         std::uint64_t trial, const Budgets& budgets) {
  if (g.vertex_count() > budgets.trial_alpha_vertex_max) {
    throw BudgetExceeded("trial_alpha_vertex_max", budgets.trial_alpha_vertex_max,
                         g.vertex_count());
  }
  const DenseGraph sample = materialize_subgraph(
      g,
      [&](std::size_t u, std::size_t v) {
        return edge_survives(seed, trial, static_cast<std::uint32_t>(u),
                             static_cast<std::uint32_t>(v), p);
      },
      budgets);
  const std::size_t star_size = g.star_size();

  TrialOutcome out;
  out.trial = trial;
  for (std::size_t x = 0; x < g.star_count(); ++x) {
    const VertexSet star = star_set(g, g.star_center(x));
    if (sample.induced_edge_count(star) == 0) out.star_independent = true;
    const auto star_words = star.words();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (star.contains(v)) continue;
      const auto row = sample.row(v);
      bool isolated = true;
      for (std::size_t w = 0; w < row.size(); ++w) {
        if ((row[w] & star_words[w]) != 0) {
          isolated = false;
          break;
        }
      }
      if (isolated) ++out.superstars;
    }
  }

  const MisResult mis = max_independent_set(sample, star_size, budgets);
  out.alpha = mis.size;
  out.alpha_witness_is_star = mis.size == star_size && contained_in_star(g, mis.witness);
  out.implied_faux_star = mis.size > star_size && out.superstars == 0;

  if (g.vertex_count() <= budgets.faux_star_vertex_max) {
    Budgets local = budgets;
    local.enumeration_cap = budgets.faux_star_enumeration_cap;
    try {
      const auto sets = enumerate_independent_sets_at_least(sample, star_size + 1, local);
      std::vector<std::size_t> counts(star_size, 0);
      for (const auto& s : sets) {
        const std::size_t overlap = max_star_overlap(g, s).value.get_ui();
        if (overlap < star_size) ++counts[star_size - overlap - 1];
      }
      out.faux_star_counts = std::move(counts);
    } catch (const BudgetExceeded&) {
      // Too many independent sets to list; X stays unavailable for this trial.
    }
  }
  return out;
}

WilsonInterval wilson_interval(std::size_t successes, std::size_t trials) {
  if (trials == 0) return {};
  const double n = static_cast<double>(trials);
  const double p_hat = static_cast<double>(successes) / n;
  const double z2 = kWilsonZ * kWilsonZ;
  const double denom = 1 + z2 / n;
  const double center = (p_hat + z2 / (2 * n)) / denom;
  const double half = kWilsonZ * std::sqrt(p_hat * (1 - p_hat) / n + z2 / (4 * n * n)) / denom;
  // The endpoints are exactly 0 and 1 at the extremes; skip the rounding noise.
  const double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

std::string ThresholdReport::to_csv() const {
  std::ostringstream out;
  out << "family,n,p,trials,successes,p_hat,wilson_lo,wilson_hi,mean_Y,pc,p_over_pc\n";
  for (const auto& row : rows) {
    out << family_name(family) << ',' << n << ',' << fmt(row.p) << ',' << row.trials << ','
        << row.successes << ',' << fmt(row.p_hat) << ',' << fmt(row.interval.low) << ','
        << fmt(row.interval.high) << ',' << fmt(row.mean_superstars) << ',' << fmt(row.pc)
        << ',' << fmt(row.p_over_pc) << '\n';
  }
  return out.str();
}

ThresholdReport threshold_sweep(const SimConfig& config, const Budgets& budgets) {
  if (config.p_grid.empty()) throw std::invalid_argument("threshold_sweep: empty p grid");
  for (double p : config.p_grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("threshold_sweep: p outside [0, 1]");
  }
  if (config.trials == 0) throw std::invalid_argument("threshold_sweep: trials must be >= 1");
  const FamilyGraph g({config.family, config.n}, budgets);
  const double pc = critical_probability(config.family, config.n);
  const std::size_t star_size = g.star_size();

  struct Unit {
    bool success = false;
    std::size_t superstars = 0;
    bool implied_faux = false;
  };
  const std::size_t total = config.p_grid.size() * config.trials;
  std::vector<Unit> units(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= total) return;
      const double p = config.p_grid[index / config.trials];
      const std::uint64_t trial = index % config.trials;
      try {
        Unit& unit = units[index];
        if (config.alpha_mode) {
          const TrialOutcome outcome = trial_alpha(g, p, config.seed, trial, budgets);
          unit.superstars = outcome.superstars;
          unit.success = outcome.alpha == star_size;
          unit.implied_faux = outcome.implied_faux_star;
        } else {
          unit.superstars = superstar_scan(g, p, config.seed, trial, budgets);
          unit.success = unit.superstars == 0;
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(total);
        return;
      }
    }
  };
  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }
  if (failure) std::rethrow_exception(failure);

  ThresholdReport report;
  report.family = config.family;
  report.n = config.n;
  for (std::size_t pi = 0; pi < config.p_grid.size(); ++pi) {
    ThresholdRow row;
    row.p = config.p_grid[pi];
    row.trials = config.trials;
    std::size_t superstar_total = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
      const Unit& unit = units[pi * config.trials + t];
      row.successes += unit.success ? 1 : 0;
      superstar_total += unit.superstars;
      row.implied_faux_stars += unit.implied_faux ? 1 : 0;
    }
    row.p_hat = static_cast<double>(row.successes) / static_cast<double>(row.trials);
    row.interval = wilson_interval(row.successes, row.trials);
    row.mean_superstars = static_cast<double>(superstar_total) / static_cast<double>(row.trials);
    row.pc = pc;
    row.p_over_pc = row.p / pc;
    report.rows.push_back(row);
  }
  return report;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> fields;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ':')) fields.push_back(field);
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    const double value = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number in grid: " + s);
    return value;
  };
  if (fields.size() == 1) return {number(fields[0])};
  if (fields.size() != 3) throw std::invalid_argument("grid must be 'a:b:k' or a single value");
  const double a = number(fields[0]);
  const double b = number(fields[1]);
  std::size_t used = 0;
  const long k = std::stol(fields[2], &used);
  if (used != fields[2].size() || k < 1) throw std::invalid_argument("grid point count must be >= 1");
  if (k == 1) return {a};
  std::vector<double> grid;
  for (long i = 0; i < k; ++i) grid.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(k - 1));
  return grid;
}

double expected_superstar_count(Family family, int n, double p) {
  const GraphParams params = graph_params({family, n});
  if (p >= 1.0) return 0.0;
  return std::exp(log_bigint(params.K * (params.V - params.N)) +
                  params.M.get_d() * std::log1p(-p));
}

double fauxstar_expectation_bound(Family family, int n, double p, std::size_t i, std::size_t j) {
  const GraphParams params = graph_params({family, n});
  const double big_n = params.N.get_d();
  const double big_v = params.V.get_d();
  const double big_m = params.M.get_d();
  if (i < 1 || static_cast<double>(i) > big_n || j < i) {
    throw std::invalid_argument("fauxstar_expectation_bound: need 1 <= i <= N and j >= i");
  }
  const double di = static_cast<double>(i);
  const double dj = static_cast<double>(j);
  const double exponent = dj * (big_m - di);
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) {
    if (exponent > 0) return 0.0;
    if (exponent < 0) throw std::overflow_error("fauxstar_expectation_bound: (1-p)^negative at p = 1");
  }
  double log_value = log_bigint(params.K) + log_binomial(big_n, di) + log_binomial(big_v, dj) +
                     di * std::log(dj * p);
  if (exponent != 0) log_value += exponent * std::log1p(-p);
  if (log_value > std::log(std::numeric_limits<double>::max())) {
    throw std::overflow_error("fauxstar_expectation_bound: value overflows a double");
  }
  return std::exp(log_value);
}

}  // namespace ekrlab
