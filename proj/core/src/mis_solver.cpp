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

#include "ekrlab/mis_solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace ekrlab {

namespace {

using Bits = std::vector<std::uint64_t>;

inline bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
inline void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
inline void clear(Bits& b, std::size_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

inline bool any(const Bits& b) {
  for (auto w : b) {
    if (w != 0) return true;
  }
  return false;
}

inline std::size_t popcount(const Bits& b) {
  std::size_t total = 0;
  for (auto w : b) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

// Clique search on the complement of g, with vertices renumbered so that
// position 0 has the largest complement degree (ties by original rank).
class ComplementCliqueSearch {
 public:
  explicit ComplementCliqueSearch(const DenseGraph& g)
      : size_(g.vertex_count()), words_((size_ + 63) / 64), order_(size_) {
    std::vector<std::size_t> comp_degree(size_);
    for (std::size_t v = 0; v < size_; ++v) {
      comp_degree[v] = size_ - 1 - g.degree(v);
    }
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return comp_degree[a] > comp_degree[b];
    });
    comp_.assign(size_, Bits(words_, 0));
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = 0; j < size_; ++j) {
        if (i != j && !g.has_edge(order_[i], order_[j])) set(comp_[i], j);
      }
    }
  }

  Bits all() const {
    Bits b(words_, 0);
    for (std::size_t i = 0; i < size_; ++i) set(b, i);
    return b;
  }

  // Greedy sequential colouring of p. Fills vertices in colour order with the
  // colour of each; the largest colour bounds the clique number of p.
  void colour(const Bits& p, std::vector<std::size_t>& vertices,
              std::vector<std::size_t>& colours) const {
    vertices.clear();
    colours.clear();
    Bits uncoloured = p;
    std::size_t k = 0;
    Bits q(words_);
    while (any(uncoloured)) {
      ++k;
      q = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
          clear(q, v);
          clear(uncoloured, v);
          vertices.push_back(v);
          colours.push_back(k);
          const Bits& nv = comp_[v];
          for (std::size_t x = w; x < words_; ++x) q[x] &= ~nv[x];
        }
      }
    }
  }

  // Maximum clique with size > floor; returns false when none exists.
  bool maximum(std::size_t floor, std::vector<std::size_t>& best) {
    best_size_ = floor;
    found_ = false;
    std::vector<std::size_t> current;
    expand_max(all(), current);
    if (found_) best = best_clique_;
    return found_;
  }

  // Visits every clique C with |C| >= t exactly once. Stops once the visit
  // callback returns false.
  template <typename Visit>
  void all_at_least(std::size_t t, Visit&& visit) {
    std::vector<std::size_t> current;
    stop_ = false;
    expand_all(all(), current, t, visit);
  }

  std::size_t original(std::size_t position) const { return order_[position]; }
  const Bits& complement_row(std::size_t position) const { return comp_[position]; }
  std::size_t size() const { return size_; }
  std::size_t words() const { return words_; }

 private:
  void expand_max(Bits p, std::vector<std::size_t>& current) {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> colours;
    colour(p, vertices, colours);
    for (std::size_t i = vertices.size(); i-- > 0;) {
      if (current.size() + colours[i] <= best_size_) return;
      const std::size_t v = vertices[i];
      current.push_back(v);
      Bits next(words_);
      bool nonempty = false;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = p[w] & comp_[v][w];
        nonempty = nonempty || next[w] != 0;
      }
      if (nonempty) {
        expand_max(std::move(next), current);
      } else if (current.size() > best_size_) {
        best_size_ = current.size();
        best_clique_ = current;
        found_ = true;
      }
      current.pop_back();
      clear(p, v);
    }
  }

  template <typename Visit>
  void expand_all(Bits p, std::vector<std::size_t>& current, std::size_t t,
                  Visit& visit) {
    if (current.size() >= t && !visit(current)) {
      stop_ = true;
      return;
    }
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> colours;
    colour(p, vertices, colours);
    for (std::size_t i = vertices.size(); i-- > 0;) {
      if (stop_ || current.size() + colours[i] < t) return;
      const std::size_t v = vertices[i];
      current.push_back(v);
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & comp_[v][w];
      expand_all(std::move(next), current, t, visit);
      current.pop_back();
      clear(p, v);
    }
  }

  std::size_t size_;
  std::size_t words_;
  std::vector<std::size_t> order_;
  std::vector<Bits> comp_;
  std::size_t best_size_ = 0;
  bool found_ = false;
  bool stop_ = false;
  std::vector<std::size_t> best_clique_;
};

VertexSet to_vertex_set(const ComplementCliqueSearch& search,
                        const std::vector<std::size_t>& clique) {
  VertexSet s(search.size());
  for (std::size_t position : clique) s.insert(search.original(position));
  return s;
}

void check_enumeration_budget(const DenseGraph& g, const Budgets& budgets) {
  if (g.vertex_count() > budgets.enumeration_vertex_max) {
    throw BudgetExceeded("enumeration_vertex_max", budgets.enumeration_vertex_max,
                         g.vertex_count());
  }
}

std::vector<VertexSet> collect_at_least(const DenseGraph& g, std::size_t t,
                                        const Budgets& budgets) {
  ComplementCliqueSearch search(g);
  std::vector<VertexSet> out;
  bool over_cap = false;
  search.all_at_least(t, [&](const std::vector<std::size_t>& clique) {
    if (out.size() >= budgets.enumeration_cap) {
      over_cap = true;
      return false;
    }
    out.push_back(to_vertex_set(search, clique));
    return true;
  });
  if (over_cap) {
    throw BudgetExceeded("enumeration_cap", budgets.enumeration_cap, out.size() + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MisResult max_independent_set(const DenseGraph& g, std::size_t lower_hint,
                              const Budgets& budgets) {
  if (g.vertex_count() > budgets.mis_vertex_max) {
    throw BudgetExceeded("mis_vertex_max", budgets.mis_vertex_max, g.vertex_count());
  }
  MisResult result;
  result.witness = VertexSet(g.vertex_count());
  if (g.vertex_count() == 0) return result;
  ComplementCliqueSearch search(g);
  std::vector<std::size_t> best;
  const std::size_t floor = lower_hint > 0 ? lower_hint - 1 : 0;
  if (!search.maximum(floor, best) && floor > 0) search.maximum(0, best);
  result.size = best.size();
  result.witness = to_vertex_set(search, best);
  return result;
}

std::vector<VertexSet> enumerate_maximum_independent_sets(const DenseGraph& g,
                                                          const Budgets& budgets) {
  check_enumeration_budget(g, budgets);
  if (g.vertex_count() == 0) return {VertexSet(0)};
  const std::size_t alpha = max_independent_set(g, 0, budgets).size;
  return collect_at_least(g, alpha, budgets);
}

std::vector<VertexSet> enumerate_independent_sets_at_least(const DenseGraph& g,
                                                           std::size_t t,
                                                           const Budgets& budgets) {
  check_enumeration_budget(g, budgets);
  return collect_at_least(g, t, budgets);
}

std::vector<VertexSet> enumerate_maximal_independent_sets(const DenseGraph& g,
                                                          std::size_t min_size,
                                                          const Budgets& budgets) {
  check_enumeration_budget(g, budgets);
  ComplementCliqueSearch search(g);
  const std::size_t words = search.words();
  std::vector<VertexSet> out;
  std::vector<std::size_t> r;

  // Bron-Kerbosch with Tomita pivoting on the complement.
  auto recurse = [&](auto& self, Bits p, Bits x) -> void {
    if (!any(p) && !any(x)) {
      if (r.size() >= min_size) {
        if (out.size() >= budgets.enumeration_cap) {
          throw BudgetExceeded("enumeration_cap", budgets.enumeration_cap, out.size() + 1);
        }
        out.push_back(to_vertex_set(search, r));
      }
      return;
    }
    if (r.size() + popcount(p) < min_size) return;
    std::size_t pivot = 0;
    std::size_t pivot_score = 0;
    bool have_pivot = false;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = p[w] | x[w];
      while (bits != 0) {
        const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        std::size_t score = 0;
        const Bits& nu = search.complement_row(u);
        for (std::size_t k = 0; k < words; ++k) {
          score += static_cast<std::size_t>(std::popcount(p[k] & nu[k]));
        }
        if (!have_pivot || score > pivot_score) {
          pivot = u;
          pivot_score = score;
          have_pivot = true;
        }
      }
    }
    Bits candidates(words);
    const Bits& np = search.complement_row(pivot);
    for (std::size_t w = 0; w < words; ++w) candidates[w] = p[w] & ~np[w];
    for (std::size_t w = 0; w < words; ++w) {
      while (candidates[w] != 0) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(candidates[w]));
        candidates[w] &= candidates[w] - 1;
        const Bits& nv = search.complement_row(v);
        Bits p2(words);
        Bits x2(words);
        for (std::size_t k = 0; k < words; ++k) {
          p2[k] = p[k] & nv[k];
          x2[k] = x[k] & nv[k];
        }
        r.push_back(v);
        self(self, std::move(p2), std::move(x2));
        r.pop_back();
        clear(p, v);
        set(x, v);
      }
    }
  };
  recurse(recurse, search.all(), Bits(words, 0));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ekrlab
