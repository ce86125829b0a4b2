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
#include <optional>

#include "ekrlab/graph_oracle.hpp"
#include "ekrlab/numeric.hpp"
#include "ekrlab/vertex_set.hpp"

namespace ekrlab {

/// Exhaustive stability probe on M_n (n = 3, 4).
struct StabilityReport {
  int n = 0;
  BigRational delta;
  std::size_t threshold = 0;  // ceil((1 - delta) (2n-3)!!)
  std::size_t maximal_sets = 0;               // all maximal independent sets
  std::size_t maximal_sets_at_threshold = 0;  // those of size >= threshold
  std::size_t non_star_at_threshold = 0;      // ... not contained in any star
  std::size_t maximum_sets = 0;               // independent sets of size (2n-3)!!
  bool maximum_sets_are_stars = false;
  /// Largest independent set contained in no star; 0 when every independent
  /// set lies in a star.
  std::size_t max_non_star_size = 0;
  std::optional<VertexSet> max_non_star_witness;
  /// Every independent S and star S_f with S not inside S_f has
  /// |S_f \ S| >= M. Exhaustive over all independent sets at n = 3 and over
  /// maximal ones (which implies the rest) above that.
  bool outside_vertex_bound_holds = false;
  std::size_t outside_vertex_pairs_checked = 0;
};

StabilityReport stability_check(int n, const BigRational& delta,
                                const Budgets& budgets = default_budgets());

}  // namespace ekrlab
