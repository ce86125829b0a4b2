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

#include "ekrlab/dense_graph.hpp"

#include <bit>
#include <stdexcept>

#include "ekrlab/graph_oracle.hpp"

namespace ekrlab {

DenseGraph::DenseGraph(std::size_t vertex_count)
    : vertex_count_(vertex_count),
      words_((vertex_count + 63) / 64),
      bits_(vertex_count * ((vertex_count + 63) / 64), 0) {}

bool DenseGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= vertex_count_ || v >= vertex_count_) {
    throw std::out_of_range("DenseGraph: vertex out of range");
  }
  return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

void DenseGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count_ || v >= vertex_count_ || u == v) {
    throw std::invalid_argument("DenseGraph: invalid edge");
  }
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void DenseGraph::remove_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count_ || v >= vertex_count_) {
    throw std::out_of_range("DenseGraph: vertex out of range");
  }
  bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

std::size_t DenseGraph::degree(std::size_t v) const {
  std::size_t total = 0;
  for (std::uint64_t w : row(v)) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t DenseGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < vertex_count_; ++v) total += degree(v);
  return total / 2;
}

std::size_t DenseGraph::induced_edge_count(const VertexSet& s) const {
  if (s.universe() != vertex_count_) {
    throw std::invalid_argument("DenseGraph: universe mismatch");
  }
  const auto members = s.words();
  std::size_t total = 0;
  s.for_each([&](std::size_t v) {
    const auto r = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
      total += static_cast<std::size_t>(std::popcount(r[w] & members[w]));
    }
  });
  return total / 2;
}

bool DenseGraph::is_independent(const VertexSet& s) const {
  return induced_edge_count(s) == 0;
}

DenseGraph materialize(const FamilyGraph& g, const Budgets& budgets) {
  return materialize_subgraph(
      g, [](std::size_t, std::size_t) { return true; }, budgets);
}

DenseGraph materialize_subgraph(
    const FamilyGraph& g,
    const std::function<bool(std::size_t, std::size_t)>& keep,
    const Budgets& budgets) {
  const std::size_t vertices = g.vertex_count();
  if (vertices > budgets.explicit_adjacency_max) {
    throw BudgetExceeded("explicit_adjacency_max", budgets.explicit_adjacency_max,
                         vertices);
  }
  DenseGraph out(vertices);
  for (std::size_t u = 0; u < vertices; ++u) {
    for (std::size_t v = u + 1; v < vertices; ++v) {
      if (g.adjacent(u, v) && keep(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

}  // namespace ekrlab
