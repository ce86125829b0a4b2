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

#include "ekrlab/combinatorics.hpp"
#include "ekrlab/numeric.hpp"
#include "ekrlab/vertex_set.hpp"

namespace ekrlab {

enum class Family { kPermutation, kMatching };

std::string family_name(Family family);  // "perm" or "pm"
Family parse_family(const std::string& name);

/// Gamma_n (permutations, adjacent when they disagree everywhere) or M_n
/// (perfect matchings of K_{2n}, adjacent when edge-disjoint).
struct GraphFamily {
  Family kind;
  int n;
};

/// The parameter quintuple of a family: vertex count, valency, independence
/// number, minus the least eigenvalue, and the number of stars.
struct GraphParams {
  BigInt V;
  BigInt d;
  BigInt N;
  BigInt M;
  BigInt K;
};

GraphParams graph_params(const GraphFamily& g,
                         const Budgets& budgets = default_budgets());

/// ln(K (V - N)) / M, the threshold probability of the random subgraph model.
double threshold_probability(const GraphParams& params);

/// Star centre, stored 0-based. For permutations (a, b) means a -> b; for
/// matchings it is the edge {a, b} with a < b.
struct StarCenter {
  int a = 0;
  int b = 0;
  friend bool operator==(const StarCenter&, const StarCenter&) = default;
};

/// Text form, 1-based: "1->2" or "{1,2}".
std::string to_string(Family family, const StarCenter& center);

/// Vertex table for one family member. Vertices are ranks; each vertex keeps
/// a code row (images, or partner array) so adjacency is a row comparison.
class FamilyGraph {
 public:
  explicit FamilyGraph(GraphFamily g, const Budgets& budgets = default_budgets());

  const GraphFamily& family() const noexcept { return family_; }
  Family kind() const noexcept { return family_.kind; }
  int n() const noexcept { return family_.n; }
  const GraphParams& params() const noexcept { return params_; }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t star_count() const noexcept { return star_count_; }
  std::size_t star_size() const noexcept { return star_size_; }
  /// Each vertex lies in exactly this many stars (n for both families).
  int stars_per_vertex() const noexcept { return family_.n; }

  bool adjacent(std::size_t u, std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;

  /// Canonical star index: a*n + b for permutations, lexicographic edge
  /// index for matchings.
  std::size_t star_index(const StarCenter& center) const;
  StarCenter star_center(std::size_t index) const;
  bool valid_center(const StarCenter& center) const;

  /// Writes the n star indices containing v, ascending.
  void stars_of(std::size_t v, std::size_t* out) const;
  bool in_star(std::size_t v, std::size_t star) const;

  std::span<const std::uint8_t> code(std::size_t v) const {
    return {codes_.data() + v * width_, width_};
  }

  Permutation permutation(std::size_t v) const;
  PerfectMatching matching(std::size_t v) const;
  std::string vertex_to_string(std::size_t v) const;

  /// Matching family only: edge index of {a, b} in K_{2n}; the star index.
  std::size_t edge_index(int a, int b) const;
  int edge_count_of_complete_graph() const { return 2 * n() * (2 * n() - 1) / 2; }

 private:
  GraphFamily family_;
  GraphParams params_;
  std::size_t vertex_count_ = 0;
  std::size_t star_count_ = 0;
  std::size_t star_size_ = 0;
  std::size_t width_ = 0;
  std::vector<std::uint8_t> codes_;
  std::vector<std::int32_t> edge_index_;  // (2n) x (2n), -1 on the diagonal
  std::vector<StarCenter> edges_;
};

VertexSet star_set(const FamilyGraph& g, const StarCenter& center);

/// Star plus one outside vertex.
VertexSet superstar_set(const FamilyGraph& g, const StarCenter& center,
                        std::size_t v);

/// Number of edges of the induced subgraph, by the implicit predicate.
BigInt induced_edge_count(const FamilyGraph& g, const VertexSet& s,
                          const Budgets& budgets = default_budgets());

struct StarOverlap {
  BigInt value;
  StarCenter witness;
};

StarOverlap max_star_overlap(const FamilyGraph& g, const VertexSet& a);

bool is_faux_star(const FamilyGraph& g, const VertexSet& a);

/// Whether s lies inside some star.
bool contained_in_star(const FamilyGraph& g, const VertexSet& s);

/// |N(v) ∩ star| by direct count.
std::size_t neighbors_in_star(const FamilyGraph& g, std::size_t star,
                              std::size_t v);

}  // namespace ekrlab
