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
#include <memory>
#include <optional>
#include <vector>

#include "ekrlab/characters.hpp"
#include "ekrlab/dense_graph.hpp"
#include "ekrlab/exact_linalg.hpp"
#include "ekrlab/graph_oracle.hpp"
#include "ekrlab/numeric.hpp"
#include "ekrlab/vertex_set.hpp"

namespace ekrlab {

struct SpectrumEntry {
  BigRational value;
  double raw = 0.0;  // mean of the clustered floating eigenvalues
  std::size_t multiplicity = 0;
};

/// Eigenvalue multiset, entries in decreasing order.
struct Spectrum {
  std::vector<SpectrumEntry> entries;
  std::vector<double> raw;  // every eigenvalue, decreasing (dense spectra only)

  std::size_t total_multiplicity() const;
  const BigRational& largest() const { return entries.front().value; }
  const BigRational& least() const { return entries.back().value; }
  /// Second smallest distinct eigenvalue.
  const BigRational& second_least() const;
  std::size_t multiplicity_of(const BigRational& value) const;
};

/// Eigenvalue of Gamma_n on the lambda-isotypic component:
/// (1/dim lambda) * sum over derangement classes of |class| chi_lambda(class).
BigRational gamma_eigenvalue(const IntegerPartition& lambda);

/// Spectrum of Gamma_n from characters, multiplicity (dim lambda)^2.
Spectrum character_spectrum(int n);

/// Eigenvalues of an explicit graph by symmetric diagonalization, snapped to
/// integers within 1e-6 and audited: trace 0 and trace of A^2 = 2|E| must
/// hold exactly after snapping.
Spectrum dense_spectrum(const DenseGraph& g, const Budgets& budgets = default_budgets());
Spectrum dense_spectrum(const FamilyGraph& g, const Budgets& budgets = default_budgets());

/// Real function on the vertices, indexed by rank.
using SetFunction = std::vector<BigRational>;

SetFunction indicator(const VertexSet& s);
/// <f, g> = (1/V) sum f(v) g(v).
BigRational inner_product(const SetFunction& f, const SetFunction& g);
BigRational norm_sq(const SetFunction& f);

struct Projection {
  SetFunction f1;
  BigRational residual_sq;  // ||f - f1||^2 in the (1/V) norm
};

/// Orthogonal projection onto the span of the star indicators. The stars are
/// linearly dependent, so a maximal independent subset is picked by Bareiss
/// elimination on the Gram matrix and the normal equations are solved on
/// that subset with a fraction-free adjugate.
class StarSpaceProjector {
 public:
  explicit StarSpaceProjector(const FamilyGraph& g,
                              const Budgets& budgets = default_budgets());

  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<std::size_t>& basis_stars() const noexcept { return basis_; }
  /// Unnormalised Gram matrix |S_x ∩ S_y| over all stars.
  const IntMatrix& gram() const noexcept { return gram_; }

  Projection project(const SetFunction& f) const;

 private:
  const FamilyGraph* graph_;
  IntMatrix gram_;
  std::vector<std::size_t> basis_;
  std::vector<std::ptrdiff_t> basis_position_;  // star -> position in basis_, or -1
  FractionFreeInverse inverse_;
};

Projection project_star_space(const FamilyGraph& g, const SetFunction& f,
                              const Budgets& budgets = default_budgets());

/// Projection onto the sum of the top and bottom eigenspaces. Uses the star
/// span when it has the right dimension (the usual case) and otherwise the
/// exact kernel of (A - kI)(A - tau I), which is only feasible at small V.
class ExtremalEigenspaceProjector {
 public:
  ExtremalEigenspaceProjector(const FamilyGraph& g, const Spectrum& spectrum,
                              const Budgets& budgets = default_budgets());

  std::size_t dimension() const noexcept { return dimension_; }
  bool uses_star_span() const noexcept { return stars_ != nullptr; }
  Projection project(const SetFunction& f) const;

 private:
  const FamilyGraph* graph_;
  std::size_t dimension_ = 0;
  std::unique_ptr<StarSpaceProjector> stars_;
  IntMatrix basis_;  // rows span the eigenspace sum (fallback only)
  FractionFreeInverse inverse_;
};

/// V / (1 + d/M), the ratio bound on the independence number.
BigRational hoffman_bound(const GraphParams& params);

/// Lower bound on ed(S) for |S| = set_size given ||1_S - Proj 1_S||^2 and the
/// second smallest eigenvalue mu (tau = -M is exact).
BigRational mixing_edge_lower_bound(const GraphParams& params, std::size_t set_size,
                                    const BigRational& residual_sq,
                                    const BigRational& mu);

/// Same bound with mu read from a computed spectrum.
BigRational mixing_edge_lower_bound(const FamilyGraph& g, const VertexSet& s,
                                    const BigRational& residual_sq,
                                    const Spectrum& spectrum);

/// max(0, b (M - a)): guaranteed ed((S \ A) ∪ B) for A inside a star S and B
/// outside it.
BigInt ratio_isoperimetry_bound(const GraphParams& params, std::size_t a_size,
                                std::size_t b_size);

/// For |A| = N: ed(A) >= (V M / 4) ||1_A - Proj 1_A||^2, valid when
/// mu - tau >= M/2.
struct ProjectionEdgeBound {
  bool premise_holds = false;
  BigRational residual_sq;
  BigRational bound;
  BigInt edges;
  bool holds = false;  // meaningful only when premise_holds
};
ProjectionEdgeBound projection_edge_bound(const FamilyGraph& g, const VertexSet& a,
                                          const ExtremalEigenspaceProjector& projector,
                                          const BigRational& mu);

struct AsymptoticRow {
  int n = 0;
  GraphParams params;
  double pc = 0.0;
  double star_ratio = 0.0;  // K / (V - N)^delta
};

std::vector<AsymptoticRow> asymptotic_table(Family family, int n_first, int n_last,
                                            double delta = 0.5,
                                            const Budgets& budgets = default_budgets());

}  // namespace ekrlab
