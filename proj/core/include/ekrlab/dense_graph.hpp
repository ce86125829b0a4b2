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
#include <functional>
#include <span>
#include <vector>

#include "ekrlab/numeric.hpp"
#include "ekrlab/vertex_set.hpp"

namespace ekrlab {

class FamilyGraph;

/// Explicit simple graph as V rows of adjacency bits.
class DenseGraph {
 public:
  DenseGraph() = default;
  explicit DenseGraph(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool has_edge(std::size_t u, std::size_t v) const;
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  std::span<const std::uint64_t> row(std::size_t v) const {
    return {bits_.data() + v * words_, words_};
  }
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  std::size_t induced_edge_count(const VertexSet& s) const;
  bool is_independent(const VertexSet& s) const;

 private:
  std::size_t vertex_count_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Explicit copy of Gamma_n or M_n. Refused above the explicit-adjacency
/// budget.
DenseGraph materialize(const FamilyGraph& g,
                       const Budgets& budgets = default_budgets());

/// Explicit spanning subgraph keeping the edges {u, v} (u < v) for which
/// keep(u, v) is true.
DenseGraph materialize_subgraph(
    const FamilyGraph& g,
    const std::function<bool(std::size_t, std::size_t)>& keep,
    const Budgets& budgets = default_budgets());

}  // namespace ekrlab
