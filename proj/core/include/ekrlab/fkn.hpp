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

#include "ekrlab/graph_oracle.hpp"
#include "ekrlab/numeric.hpp"
#include "ekrlab/report.hpp"
#include "ekrlab/spectral.hpp"
#include "ekrlab/vertex_set.hpp"

namespace ekrlab {

/// Star coefficients of a family A of perfect matchings of K_{2n}:
/// a_e = |A ∩ S_e| / (2n-3)!!, c = |A| / (2n-3)!!, b_e = a_e - c/(2n-1).
/// Vectors are indexed by the lexicographic edge index of K_{2n}.
struct FknCoefficients {
  int n = 0;
  BigRational c;
  std::vector<BigRational> a;
  std::vector<BigRational> b;
  std::vector<StarCenter> edges;
};

/// Throws IdentityViolation if some vertex x of K_{2n} has
/// sum_{e ∋ x} a_e != c (that would be a bug, not a counterexample).
FknCoefficients star_coefficients(const FamilyGraph& g, const VertexSet& a);

/// Moments of h = sum b_e 1_{S_e}, each computed pointwise over the vertices
/// and from the coefficient sums.
struct MomentReport {
  BigRational mean_pointwise, mean_from_sums;
  BigRational second_pointwise, second_from_sums;
  BigRational third_pointwise, third_from_sums;
  BigRational sum_a2, sum_b2, sum_b3;
  BigRational triangles_unordered;  // sum over vertex triples of b b b
  BigRational triangles_ordered;    // the same over ordered edge triples (6x)
  BigRational sigma1, sigma2, sigma3;
  BigRational residual_sq;          // ||1_A - f1||^2
  BigRational epsilon;              // residual_sq = epsilon c / (2n-1); 0 if c = 0
  BigRational f1_cubed;             // E[f1^3]

  bool consistent() const;
};

MomentReport h_moments(const FamilyGraph& g, const VertexSet& a,
                       const StarSpaceProjector& projector);

/// g and h against their affine expressions in f1, evaluated at every vertex.
std::vector<CheckResult> gh_affine_check(const FamilyGraph& g, const VertexSet& a,
                                         const StarSpaceProjector& projector);

/// Exact identities: second and third moment formulas, E[h] = 0, the two
/// affine identities, the second moment in terms of epsilon, the cube
/// identity linking E[f1^3] and E[h^3], the vertex sums of a and b, and the
/// disjoint-edge sums of b.
std::vector<CheckResult> fkn_identity_suite(const FamilyGraph& g, const VertexSet& a,
                                            const StarSpaceProjector& projector);

/// Inequalities and the expansion behind them: the sum-of-squares bound,
/// the triangle expansion and its lower bound (with the Sigma identities),
/// the third moment upper bound, and the two conditional lower bounds that
/// need epsilon <= 1/2, c <= (2n-1)/2 and f1 >= 0.
std::vector<CheckResult> fkn_inequality_suite(const FamilyGraph& g, const VertexSet& a,
                                              const StarSpaceProjector& projector);

/// theta H^3 + (1-theta) L^3 - 3 (H^2 - L^2) sqrt(theta (1-theta) eta)
///   + 3 ((1-theta) L + theta H) eta - (1 - 2 theta) / sqrt(theta (1-theta)) eta^{3/2}.
/// Preconditions are checked exactly; only the square roots are floating.
double optim_lower_bound(const BigRational& theta, const BigRational& high,
                         const BigRational& low, const BigRational& eta);

/// Nearest integer, halves rounded up. c >= 0.
BigInt round_half_up(const BigRational& c);

struct StarApproximation {
  VertexSet b;
  std::vector<StarCenter> z;
  BigInt symdiff;
};

/// The round(c) edges with the largest b_e (ties by edge order), the union of
/// their stars, and |A Δ B|.
StarApproximation star_approximation(const FamilyGraph& g, const VertexSet& a);

}  // namespace ekrlab
