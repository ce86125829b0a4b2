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

#include "ekrlab/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace ekrlab {

std::size_t Spectrum::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

const BigRational& Spectrum::second_least() const {
  if (entries.size() < 2) throw std::logic_error("spectrum has a single eigenvalue");
  return entries[entries.size() - 2].value;
}

std::size_t Spectrum::multiplicity_of(const BigRational& value) const {
  for (const auto& e : entries) {
    if (e.value == value) return e.multiplicity;
  }
  return 0;
}

BigRational gamma_eigenvalue(const IntegerPartition& lambda) {
  const int n = lambda.size();
  if (n < 2) throw std::invalid_argument("gamma_eigenvalue: n < 2");
  BigInt total = 0;
  for (const auto& mu : partitions(n)) {
    if (mu.has_part_one()) continue;
    total += class_size(mu) * mn_character(lambda, mu);
  }
  BigRational value(total, dimension(lambda));
  value.canonicalize();
  return value;
}

namespace {

Spectrum from_multiset(const std::map<BigRational, std::size_t, std::greater<>>& counts,
                       std::vector<double> raw) {
  Spectrum s;
  for (const auto& [value, multiplicity] : counts) {
    s.entries.push_back({value, value.get_d(), multiplicity});
  }
  std::sort(raw.begin(), raw.end(), std::greater<>());
  s.raw = std::move(raw);
  return s;
}

}  // namespace

Spectrum character_spectrum(int n) {
  std::map<BigRational, std::size_t, std::greater<>> counts;
  for (const auto& lambda : partitions(n)) {
    const BigInt dim = dimension(lambda);
    counts[gamma_eigenvalue(lambda)] += BigInt(dim * dim).get_ui();
  }
  // n! entries would not fit in memory beyond n = 11, so raw stays empty.
  return from_multiset(counts, {});
}

Spectrum dense_spectrum(const DenseGraph& g, const Budgets& budgets) {
  const std::size_t vertices = g.vertex_count();
  if (vertices > budgets.dense_spectrum_max) {
    throw BudgetExceeded("dense_spectrum_max", budgets.dense_spectrum_max, vertices);
  }
  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(vertices),
                                                    static_cast<Eigen::Index>(vertices));
  for (std::size_t u = 0; u < vertices; ++u) {
    for (std::size_t v = 0; v < vertices; ++v) {
      if (g.has_edge(u, v)) {
        adjacency(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1.0;
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense_spectrum: eigen solver did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  std::vector<double> raw(values.data(), values.data() + values.size());

  std::map<BigRational, std::size_t, std::greater<>> counts;
  std::map<BigRational, double, std::greater<>> sums;
  for (double x : raw) {
    const double rounded = std::round(x);
    if (std::abs(x - rounded) > 1e-6) {
      throw IdentityViolation("dense_spectrum: eigenvalue " + std::to_string(x) +
                              " is not within 1e-6 of an integer");
    }
    const BigRational key(static_cast<long>(rounded));
    counts[key] += 1;
    sums[key] += x;
  }
  Spectrum s = from_multiset(counts, std::move(raw));
  for (auto& e : s.entries) e.raw = sums[e.value] / static_cast<double>(e.multiplicity);

  // Audit the snapping against exact traces.
  BigRational trace = 0;
  BigRational trace_sq = 0;
  for (const auto& e : s.entries) {
    trace += e.value * static_cast<unsigned long>(e.multiplicity);
    trace_sq += e.value * e.value * static_cast<unsigned long>(e.multiplicity);
  }
  if (trace != 0 || trace_sq != 2 * static_cast<unsigned long>(g.edge_count())) {
    throw IdentityViolation("dense_spectrum: snapped spectrum fails the trace audit");
  }
  return s;
}

Spectrum dense_spectrum(const FamilyGraph& g, const Budgets& budgets) {
  if (g.vertex_count() > budgets.dense_spectrum_max) {
    throw BudgetExceeded("dense_spectrum_max", budgets.dense_spectrum_max, g.vertex_count());
  }
  return dense_spectrum(materialize(g, budgets), budgets);
}

SetFunction indicator(const VertexSet& s) {
  SetFunction f(s.universe(), 0);
  s.for_each([&](std::size_t v) { f[v] = 1; });
  return f;
}

BigRational inner_product(const SetFunction& f, const SetFunction& g) {
  if (f.size() != g.size() || f.empty()) {
    throw std::invalid_argument("inner_product: length mismatch");
  }
  BigRational total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) total += f[i] * g[i];
  return total / static_cast<unsigned long>(f.size());
}

BigRational norm_sq(const SetFunction& f) { return inner_product(f, f); }

namespace {

BigRational residual(const SetFunction& f, const SetFunction& f1) {
  BigRational total = 0;
  BigRational diff;
  for (std::size_t v = 0; v < f.size(); ++v) {
    diff = f[v] - f1[v];
    total += diff * diff;
  }
  return total / static_cast<unsigned long>(f.size());
}

std::vector<BigRational> apply_inverse(const FractionFreeInverse& inv,
                                       const std::vector<BigRational>& b) {
  std::vector<BigRational> c(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i] += inv.adj[i][j] * b[j];
    c[i] /= inv.scale;
  }
  return c;
}

}  // namespace

StarSpaceProjector::StarSpaceProjector(const FamilyGraph& g, const Budgets& budgets)
    : graph_(&g) {
  if (g.vertex_count() > budgets.projection_vertex_max) {
    throw BudgetExceeded("projection_vertex_max", budgets.projection_vertex_max,
                         g.vertex_count());
  }
  if (g.star_count() > budgets.projection_star_max) {
    throw BudgetExceeded("projection_star_max", budgets.projection_star_max, g.star_count());
  }
  const std::size_t k = g.star_count();
  const auto per_vertex = static_cast<std::size_t>(g.stars_per_vertex());
  std::vector<std::uint64_t> counts(k * k, 0);
  std::vector<std::size_t> stars(per_vertex);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    g.stars_of(v, stars.data());
    for (std::size_t x : stars) {
      for (std::size_t y : stars) ++counts[x * k + y];
    }
  }
  gram_.assign(k, std::vector<BigInt>(k));
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      gram_[x][y] = static_cast<unsigned long>(counts[x * k + y]);
    }
  }
  basis_ = pivot_columns(gram_);
  basis_position_.assign(k, -1);
  IntMatrix sub(basis_.size(), std::vector<BigInt>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    basis_position_[basis_[i]] = static_cast<std::ptrdiff_t>(i);
    for (std::size_t j = 0; j < basis_.size(); ++j) sub[i][j] = gram_[basis_[i]][basis_[j]];
  }
  inverse_ = fraction_free_inverse(std::move(sub));
}

Projection StarSpaceProjector::project(const SetFunction& f) const {
  const FamilyGraph& g = *graph_;
  if (f.size() != g.vertex_count()) throw std::invalid_argument("project: length mismatch");
  const auto per_vertex = static_cast<std::size_t>(g.stars_per_vertex());
  std::vector<std::size_t> stars(per_vertex);
  std::vector<BigRational> b(basis_.size(), 0);
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v] == 0) continue;
    g.stars_of(v, stars.data());
    for (std::size_t x : stars) {
      if (basis_position_[x] >= 0) b[static_cast<std::size_t>(basis_position_[x])] += f[v];
    }
  }
  const std::vector<BigRational> c = apply_inverse(inverse_, b);
  Projection out;
  out.f1.assign(f.size(), 0);
  for (std::size_t v = 0; v < f.size(); ++v) {
    g.stars_of(v, stars.data());
    for (std::size_t x : stars) {
      if (basis_position_[x] >= 0) out.f1[v] += c[static_cast<std::size_t>(basis_position_[x])];
    }
  }
  out.residual_sq = residual(f, out.f1);
  return out;
}

Projection project_star_space(const FamilyGraph& g, const SetFunction& f,
                              const Budgets& budgets) {
  return StarSpaceProjector(g, budgets).project(f);
}

ExtremalEigenspaceProjector::ExtremalEigenspaceProjector(const FamilyGraph& g,
                                                         const Spectrum& spectrum,
                                                         const Budgets& budgets)
    : graph_(&g) {
  const GraphParams& p = g.params();
  const BigRational k(p.d);
  const BigRational tau(-p.M);
  if (spectrum.largest() != k || spectrum.least() != tau) {
    throw IdentityViolation("spectrum extremes differ from the closed forms");
  }
  dimension_ = spectrum.multiplicity_of(k) + spectrum.multiplicity_of(tau);
  auto stars = std::make_unique<StarSpaceProjector>(g, budgets);
  if (stars->rank() == dimension_) {
    stars_ = std::move(stars);
    return;
  }
  const std::size_t vertices = g.vertex_count();
  if (vertices > budgets.eigenspace_fallback_max) {
    throw BudgetExceeded("eigenspace_fallback_max", budgets.eigenspace_fallback_max, vertices);
  }
  // Q = A^2 - (k + tau) A + k tau I; its kernel is exactly V_k + V_tau.
  const DenseGraph a = materialize(g, budgets);
  const BigInt k_int = p.d;
  const BigInt tau_int = -p.M;
  IntMatrix q(vertices, std::vector<BigInt>(vertices));
  for (std::size_t u = 0; u < vertices; ++u) {
    const auto ru = a.row(u);
    for (std::size_t v = 0; v < vertices; ++v) {
      const auto rv = a.row(v);
      long common = 0;
      for (std::size_t w = 0; w < a.words_per_row(); ++w) common += std::popcount(ru[w] & rv[w]);
      BigInt entry = common;
      if (a.has_edge(u, v)) entry -= k_int + tau_int;
      if (u == v) entry += k_int * tau_int;
      q[u][v] = entry;
    }
  }
  basis_ = integer_nullspace(q);
  if (basis_.size() != dimension_) {
    throw IdentityViolation("eigenspace kernel has unexpected dimension");
  }
  IntMatrix gram(basis_.size(), std::vector<BigInt>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      BigInt dot = 0;
      for (std::size_t v = 0; v < vertices; ++v) dot += basis_[i][v] * basis_[j][v];
      gram[i][j] = dot;
    }
  }
  inverse_ = fraction_free_inverse(std::move(gram));
}

Projection ExtremalEigenspaceProjector::project(const SetFunction& f) const {
  if (stars_) return stars_->project(f);
  if (f.size() != graph_->vertex_count()) throw std::invalid_argument("project: length mismatch");
  std::vector<BigRational> b(basis_.size(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t v = 0; v < f.size(); ++v) b[i] += basis_[i][v] * f[v];
  }
  const std::vector<BigRational> c = apply_inverse(inverse_, b);
  Projection out;
  out.f1.assign(f.size(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t v = 0; v < f.size(); ++v) out.f1[v] += c[i] * basis_[i][v];
  }
  out.residual_sq = residual(f, out.f1);
  return out;
}

BigRational hoffman_bound(const GraphParams& p) {
  BigRational ratio(p.d, p.M);
  ratio.canonicalize();
  return BigRational(p.V) / (1 + ratio);
}

BigRational mixing_edge_lower_bound(const GraphParams& p, std::size_t set_size,
                                    const BigRational& residual_sq,
                                    const BigRational& mu) {
  const BigRational v(p.V);
  const BigRational k(p.d);
  const BigRational tau(-p.M);
  const BigRational x = BigRational(static_cast<unsigned long>(set_size)) / v;
  return v / 2 * ((k - tau) * x * x + tau * x - (tau - mu) * residual_sq);
}

BigRational mixing_edge_lower_bound(const FamilyGraph& g, const VertexSet& s,
                                    const BigRational& residual_sq,
                                    const Spectrum& spectrum) {
  return mixing_edge_lower_bound(g.params(), s.count(), residual_sq, spectrum.second_least());
}

BigInt ratio_isoperimetry_bound(const GraphParams& p, std::size_t a_size,
                                std::size_t b_size) {
  const BigInt slack = p.M - static_cast<unsigned long>(a_size);
  if (slack <= 0) return 0;
  return slack * static_cast<unsigned long>(b_size);
}

ProjectionEdgeBound projection_edge_bound(const FamilyGraph& g, const VertexSet& a,
                                          const ExtremalEigenspaceProjector& projector,
                                          const BigRational& mu) {
  const GraphParams& p = g.params();
  if (p.N != static_cast<unsigned long>(a.count())) {
    throw std::invalid_argument("projection_edge_bound: |A| must equal N");
  }
  ProjectionEdgeBound out;
  const BigRational tau(-p.M);
  out.premise_holds = mu - tau >= BigRational(p.M) / 2;
  out.residual_sq = projector.project(indicator(a)).residual_sq;
  out.bound = BigRational(p.V * p.M) / 4 * out.residual_sq;
  out.edges = induced_edge_count(g, a);
  out.holds = BigRational(out.edges) >= out.bound;
  return out;
}

std::vector<AsymptoticRow> asymptotic_table(Family family, int n_first, int n_last,
                                            double delta, const Budgets& budgets) {
  std::vector<AsymptoticRow> rows;
  for (int n = n_first; n <= n_last; ++n) {
    AsymptoticRow row;
    row.n = n;
    row.params = graph_params({family, n}, budgets);
    row.pc = threshold_probability(row.params);
    row.star_ratio = std::exp(log_bigint(row.params.K) -
                              delta * log_bigint(row.params.V - row.params.N));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ekrlab
