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
#include <vector>

#include "ekrlab/dense_graph.hpp"
#include "ekrlab/numeric.hpp"
#include "ekrlab/vertex_set.hpp"

namespace ekrlab {

struct MisResult {
  std::size_t size = 0;
  VertexSet witness;
};

/// Exact independence number with a witness. Runs a bitset max-clique
/// branch-and-bound on the complement with greedy colouring bounds.
/// lower_hint > 0 restricts the first pass to sets of at least that size;
/// when none exists the search reruns without it, so the answer is exact
/// for any hint.
MisResult max_independent_set(const DenseGraph& g, std::size_t lower_hint = 0,
                              const Budgets& budgets = default_budgets());

/// Every independent set of maximum size, canonically ordered.
std::vector<VertexSet> enumerate_maximum_independent_sets(
    const DenseGraph& g, const Budgets& budgets = default_budgets());

/// Every independent set of size >= t (maximal or not), canonically ordered.
std::vector<VertexSet> enumerate_independent_sets_at_least(
    const DenseGraph& g, std::size_t t,
    const Budgets& budgets = default_budgets());

/// Every maximal independent set of size >= min_size, canonically ordered.
std::vector<VertexSet> enumerate_maximal_independent_sets(
    const DenseGraph& g, std::size_t min_size = 0,
    const Budgets& budgets = default_budgets());

}  // namespace ekrlab
