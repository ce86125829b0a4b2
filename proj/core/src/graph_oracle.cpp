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

#include "ekrlab/graph_oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ekrlab {

std::string family_name(Family family) {
  return family == Family::kPermutation ? "perm" : "pm";
}

Family parse_family(const std::string& name) {
  if (name == "perm") return Family::kPermutation;
  if (name == "pm") return Family::kMatching;
  throw std::invalid_argument("unknown family '" + name + "' (expected perm or pm)");
}

GraphParams graph_params(const GraphFamily& g, const Budgets& budgets) {
  if (g.n < 2) throw std::invalid_argument("graph family requires n >= 2");
  if (g.n > budgets.parameter_n_max) {
    throw BudgetExceeded("parameter_n_max",
                         static_cast<std::size_t>(budgets.parameter_n_max),
                         static_cast<std::size_t>(g.n));
  }
  const int n = g.n;
  GraphParams p;
  BigInt divisor;
  if (g.kind == Family::kPermutation) {
    p.V = factorial(n);
    p.d = derangement_count(n);
    p.N = factorial(n - 1);
    p.K = BigInt(n) * n;
    divisor = n - 1;
  } else {
    p.V = double_factorial(2 * n - 1);
    p.d = matching_derangement_degree(n);
    p.N = double_factorial(2 * n - 3);
    p.K = binomial(2 * n, 2);
    divisor = 2 * n - 2;
  }
  if (p.d % divisor != 0) {
    throw IdentityViolation("least eigenvalue is not integral");
  }
  p.M = p.d / divisor;
  return p;
}

double threshold_probability(const GraphParams& params) {
  return log_bigint(params.K * (params.V - params.N)) / params.M.get_d();
}

std::string to_string(Family family, const StarCenter& center) {
  std::ostringstream out;
  if (family == Family::kPermutation) {
    out << center.a + 1 << "->" << center.b + 1;
  } else {
    out << '{' << center.a + 1 << ',' << center.b + 1 << '}';
  }
  return out.str();
}

FamilyGraph::FamilyGraph(GraphFamily g, const Budgets& budgets)
    : family_(g), params_(graph_params(g, budgets)) {
  if (!params_.V.fits_ulong_p() ||
      params_.V.get_ui() > budgets.vertex_table_max) {
    throw BudgetExceeded(
        "vertex_table_max", budgets.vertex_table_max,
        params_.V.fits_ulong_p() ? params_.V.get_ui() : ~std::size_t{0});
  }
  const int n = g.n;
  vertex_count_ = params_.V.get_ui();
  star_count_ = params_.K.get_ui();
  star_size_ = params_.N.get_ui();

  if (g.kind == Family::kPermutation) {
    width_ = static_cast<std::size_t>(n);
    codes_.resize(vertex_count_ * width_);
    std::vector<std::uint8_t> images(width_);
    for (std::size_t i = 0; i < width_; ++i) images[i] = static_cast<std::uint8_t>(i);
    std::size_t v = 0;
    do {
      std::copy(images.begin(), images.end(), codes_.begin() + static_cast<std::ptrdiff_t>(v * width_));
      ++v;
    } while (std::next_permutation(images.begin(), images.end()));
  } else {
    width_ = static_cast<std::size_t>(2 * n);
    codes_.resize(vertex_count_ * width_);
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      const auto partner = unrank_matching(n, v).partners();
      std::copy(partner.begin(), partner.end(), codes_.begin() + static_cast<std::ptrdiff_t>(v * width_));
    }
    edge_index_.assign(width_ * width_, -1);
    std::int32_t next = 0;
    for (int a = 0; a < 2 * n; ++a) {
      for (int b = a + 1; b < 2 * n; ++b) {
        edge_index_[static_cast<std::size_t>(a) * width_ + static_cast<std::size_t>(b)] = next;
        edge_index_[static_cast<std::size_t>(b) * width_ + static_cast<std::size_t>(a)] = next;
        edges_.push_back({a, b});
        ++next;
      }
    }
  }
}

bool FamilyGraph::adjacent(std::size_t u, std::size_t v) const {
  if (u >= vertex_count_ || v >= vertex_count_) {
    throw std::out_of_range("adjacent: rank out of range");
  }
  const std::uint8_t* a = codes_.data() + u * width_;
  const std::uint8_t* b = codes_.data() + v * width_;
  for (std::size_t i = 0; i < width_; ++i) {
    if (a[i] == b[i]) return false;
  }
  return true;
}

std::vector<std::size_t> FamilyGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < vertex_count_; ++u) {
    if (adjacent(u, v)) out.push_back(u);
  }
  return out;
}

std::size_t FamilyGraph::edge_index(int a, int b) const {
  if (family_.kind != Family::kMatching || a < 0 || b < 0 ||
      static_cast<std::size_t>(a) >= width_ || static_cast<std::size_t>(b) >= width_ || a == b) {
    throw std::invalid_argument("edge_index: not an edge of K_2n");
  }
  return static_cast<std::size_t>(
      edge_index_[static_cast<std::size_t>(a) * width_ + static_cast<std::size_t>(b)]);
}

bool FamilyGraph::valid_center(const StarCenter& c) const {
  const int n = family_.n;
  if (family_.kind == Family::kPermutation) {
    return c.a >= 0 && c.a < n && c.b >= 0 && c.b < n;
  }
  return c.a >= 0 && c.b >= 0 && c.a < 2 * n && c.b < 2 * n && c.a != c.b;
}

std::size_t FamilyGraph::star_index(const StarCenter& c) const {
  if (!valid_center(c)) throw std::invalid_argument("invalid star centre");
  if (family_.kind == Family::kPermutation) {
    return static_cast<std::size_t>(c.a * family_.n + c.b);
  }
  return edge_index(c.a, c.b);
}

StarCenter FamilyGraph::star_center(std::size_t index) const {
  if (index >= star_count_) throw std::out_of_range("star index out of range");
  if (family_.kind == Family::kPermutation) {
    const auto n = static_cast<std::size_t>(family_.n);
    return {static_cast<int>(index / n), static_cast<int>(index % n)};
  }
  return edges_[index];
}

void FamilyGraph::stars_of(std::size_t v, std::size_t* out) const {
  const std::uint8_t* row = codes_.data() + v * width_;
  if (family_.kind == Family::kPermutation) {
    for (std::size_t i = 0; i < width_; ++i) out[i] = i * width_ + row[i];
    return;
  }
  for (std::size_t x = 0; x < width_; ++x) {
    if (row[x] > x) {
      *out++ = static_cast<std::size_t>(edge_index_[x * width_ + row[x]]);
    }
  }
}

bool FamilyGraph::in_star(std::size_t v, std::size_t star) const {
  const StarCenter c = star_center(star);
  return codes_[v * width_ + static_cast<std::size_t>(c.a)] == c.b;
}

Permutation FamilyGraph::permutation(std::size_t v) const {
  if (family_.kind != Family::kPermutation) throw std::logic_error("not a permutation graph");
  const auto row = code(v);
  return Permutation(std::vector<std::uint8_t>(row.begin(), row.end()));
}

PerfectMatching FamilyGraph::matching(std::size_t v) const {
  if (family_.kind != Family::kMatching) throw std::logic_error("not a matching graph");
  return PerfectMatching::from_partners(code(v));
}

std::string FamilyGraph::vertex_to_string(std::size_t v) const {
  return family_.kind == Family::kPermutation ? permutation(v).to_string()
                                              : matching(v).to_string();
}

VertexSet star_set(const FamilyGraph& g, const StarCenter& center) {
  const std::size_t star = g.star_index(center);
  VertexSet s(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.in_star(v, star)) s.insert(v);
  }
  return s;
}

VertexSet superstar_set(const FamilyGraph& g, const StarCenter& center,
                        std::size_t v) {
  VertexSet s = star_set(g, center);
  if (v >= g.vertex_count()) throw std::out_of_range("superstar_set: rank out of range");
  if (s.contains(v)) throw std::invalid_argument("superstar_set: vertex lies in the star");
  s.insert(v);
  return s;
}

BigInt induced_edge_count(const FamilyGraph& g, const VertexSet& s,
                          const Budgets& budgets) {
  if (s.universe() != g.vertex_count()) {
    throw std::invalid_argument("induced_edge_count: universe mismatch");
  }
  if (s.count() > budgets.induced_edge_set_max) {
    throw BudgetExceeded("induced_edge_set_max", budgets.induced_edge_set_max, s.count());
  }
  const auto members = s.indices();
  std::uint64_t edges = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (g.adjacent(members[i], members[j])) ++edges;
    }
  }
  return BigInt(static_cast<unsigned long>(edges));
}

StarOverlap max_star_overlap(const FamilyGraph& g, const VertexSet& a) {
  if (a.empty()) throw std::invalid_argument("max_star_overlap: empty set");
  std::vector<std::size_t> counts(g.star_count(), 0);
  std::vector<std::size_t> stars(static_cast<std::size_t>(g.stars_per_vertex()));
  a.for_each([&](std::size_t v) {
    g.stars_of(v, stars.data());
    for (std::size_t s : stars) ++counts[s];
  });
  const auto best = std::max_element(counts.begin(), counts.end());
  const auto index = static_cast<std::size_t>(best - counts.begin());
  return {BigInt(static_cast<unsigned long>(*best)), g.star_center(index)};
}

bool is_faux_star(const FamilyGraph& g, const VertexSet& a) {
  if (a.count() <= g.star_size()) return false;
  return max_star_overlap(g, a).value < static_cast<unsigned long>(g.star_size());
}

bool contained_in_star(const FamilyGraph& g, const VertexSet& s) {
  if (s.empty()) return true;
  return max_star_overlap(g, s).value == static_cast<unsigned long>(s.count());
}

std::size_t neighbors_in_star(const FamilyGraph& g, std::size_t star,
                              std::size_t v) {
  std::size_t count = 0;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (g.in_star(u, star) && g.adjacent(u, v)) ++count;
  }
  return count;
}

}  // namespace ekrlab
