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

#include "ekrlab/stability.hpp"

#include <stdexcept>

#include "ekrlab/dense_graph.hpp"
#include "ekrlab/mis_solver.hpp"

namespace ekrlab {

StabilityReport stability_check(int n, const BigRational& delta, const Budgets& budgets) {
  if (n < 2) throw std::invalid_argument("stability_check: n >= 2 required");
  if (delta < 0 || delta > 1) throw std::invalid_argument("stability_check: delta outside [0, 1]");
  const FamilyGraph g({Family::kMatching, n}, budgets);
  const DenseGraph dense = materialize(g, budgets);
  const std::size_t star_size = g.star_size();

  StabilityReport report;
  report.n = n;
  report.delta = delta;
  BigRational scaled = (1 - delta) * static_cast<unsigned long>(star_size);
  BigInt ceiling;
  mpz_cdiv_q(ceiling.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  report.threshold = ceiling.get_ui();

  const auto maximal = enumerate_maximal_independent_sets(dense, 0, budgets);
  report.maximal_sets = maximal.size();
  for (const auto& s : maximal) {
    const bool in_star = contained_in_star(g, s);
    if (s.count() >= report.threshold) {
      ++report.maximal_sets_at_threshold;
      if (!in_star) ++report.non_star_at_threshold;
    }
    if (!in_star && s.count() > report.max_non_star_size) {
      report.max_non_star_size = s.count();
      report.max_non_star_witness = s;
    }
  }

  const auto maximum = enumerate_maximum_independent_sets(dense, budgets);
  report.maximum_sets = maximum.size();
  report.maximum_sets_are_stars = maximum.size() == g.star_count();
  for (const auto& s : maximum) {
    if (s.count() != star_size || !contained_in_star(g, s)) report.maximum_sets_are_stars = false;
  }

  // A vertex v outside S_f has exactly M neighbours in S_f, none of which can
  // join v in an independent set.
  std::vector<VertexSet> stars;
  for (std::size_t x = 0; x < g.star_count(); ++x) stars.push_back(star_set(g, g.star_center(x)));
  const auto family = n == 3 ? enumerate_independent_sets_at_least(dense, 1, budgets) : maximal;
  const std::size_t m = g.params().M.get_ui();
  report.outside_vertex_bound_holds = true;
  for (const auto& s : family) {
    for (const auto& star : stars) {
      if (s.is_subset_of(star)) continue;
      ++report.outside_vertex_pairs_checked;
      if (star.set_difference(s).count() < m) report.outside_vertex_bound_holds = false;
    }
  }
  return report;
}

}  // namespace ekrlab
