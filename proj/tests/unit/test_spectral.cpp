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

#include <gtest/gtest.h>

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ekrlab/characters.hpp"
#include "ekrlab/dense_graph.hpp"
#include "ekrlab/graph_oracle.hpp"
#include "ekrlab/sampling.hpp"
#include "ekrlab/spectral.hpp"
#include "ekrlab/threshold.hpp"

namespace ekrlab {
namespace {

BigRational Q(long num, long den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string text(const Spectrum& s) {
  std::string out;
  for (const auto& e : s.entries) {
    if (!out.empty()) out += ' ';
    out += to_string(e.value) + ":" + std::to_string(e.multiplicity);
  }
  return out;
}

TEST(Spectrum, GammaEigenvalues) {
  EXPECT_EQ(gamma_eigenvalue(IntegerPartition({4})), 9);
  EXPECT_EQ(gamma_eigenvalue(IntegerPartition({3, 1})), -3);
  EXPECT_EQ(gamma_eigenvalue(IntegerPartition({1, 1, 1})), 2);
}

TEST(Spectrum, KnownSpectra) {
  EXPECT_EQ(text(character_spectrum(3)), "2:2 -1:4");
  EXPECT_EQ(text(character_spectrum(4)), "9:1 3:4 1:9 -3:10");
  EXPECT_EQ(text(character_spectrum(5)), "44:1 4:62 -1:16 -4:25 -11:16");
  EXPECT_EQ(text(dense_spectrum(FamilyGraph({Family::kPermutation, 3}))), "2:2 -1:4");
  EXPECT_EQ(text(dense_spectrum(FamilyGraph({Family::kMatching, 3}))), "8:1 2:5 -2:9");
  EXPECT_EQ(text(dense_spectrum(FamilyGraph({Family::kMatching, 4}))),
            "60:1 5:14 2:56 -3:14 -10:20");
}

TEST(Spectrum, CharacterFormulaMatchesDiagonalization) {
  for (int n = 3; n <= 6; ++n) {
    const Spectrum c = character_spectrum(n);
    const Spectrum d = dense_spectrum(FamilyGraph({Family::kPermutation, n}));
    ASSERT_EQ(c.entries.size(), d.entries.size()) << n;
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      EXPECT_EQ(c.entries[i].value, d.entries[i].value);
      EXPECT_NEAR(c.entries[i].value.get_d(), d.entries[i].raw, 1e-8);
      EXPECT_EQ(c.entries[i].multiplicity, d.entries[i].multiplicity);
    }
    EXPECT_EQ(c.least(), BigRational(-graph_params({Family::kPermutation, n}).M));
  }
}

TEST(Spectrum, RejectsIrrationalSpectra) {
  DenseGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_THROW(dense_spectrum(path), IdentityViolation);
  Budgets tight;
  tight.dense_spectrum_max = 10;
  EXPECT_THROW(dense_spectrum(FamilyGraph({Family::kMatching, 3}), tight), BudgetExceeded);
}

TEST(Projection, StarSpace) {
  const FamilyGraph m3({Family::kMatching, 3});
  const StarSpaceProjector proj(m3);
  EXPECT_EQ(proj.rank(), 10u);
  EXPECT_EQ(proj.project(indicator(star_set(m3, {0, 1}))).residual_sq, 0);
  EXPECT_EQ(proj.project(indicator(VertexSet::full(15))).residual_sq, 0);
  for (std::size_t v = 0; v < m3.vertex_count(); ++v) {
    VertexSet single(15);
    single.insert(v);
    EXPECT_EQ(proj.project(indicator(single)).residual_sq, Q(1, 45));
  }
  EXPECT_EQ(StarSpaceProjector(FamilyGraph({Family::kPermutation, 5})).rank(), 17u);
  EXPECT_EQ(StarSpaceProjector(FamilyGraph({Family::kMatching, 4})).rank(), 21u);
}

TEST(Projection, ResidualIsOrthogonal) {
  const FamilyGraph m4({Family::kMatching, 4});
  const StarSpaceProjector proj(m4);
  for (std::uint64_t i = 0; i < 5; ++i) {
    SampleStream stream(11, i);
    const SetFunction f = indicator(random_subset(m4.vertex_count(), stream));
    const Projection p = proj.project(f);
    SetFunction diff(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) diff[v] = f[v] - p.f1[v];
    for (std::size_t x = 0; x < m4.star_count(); ++x) {
      EXPECT_EQ(inner_product(diff, indicator(star_set(m4, m4.star_center(x)))), 0);
    }
    EXPECT_EQ(norm_sq(diff), p.residual_sq);
  }
}

TEST(Projection, ExtremalEigenspaces) {
  const FamilyGraph g4({Family::kPermutation, 4});
  const ExtremalEigenspaceProjector e4(g4, character_spectrum(4));
  EXPECT_FALSE(e4.uses_star_span());  // star span has dimension 10, eigenspaces 11
  EXPECT_EQ(e4.dimension(), 11u);
  EXPECT_EQ(e4.project(indicator(star_set(g4, {1, 2}))).residual_sq, 0);

  const FamilyGraph g5({Family::kPermutation, 5});
  const ExtremalEigenspaceProjector e5(g5, character_spectrum(5));
  EXPECT_TRUE(e5.uses_star_span());
  EXPECT_EQ(e5.dimension(), 17u);
}

TEST(Bounds, HoffmanIsTight) {
  EXPECT_EQ(hoffman_bound(graph_params({Family::kPermutation, 4})), 6);
  EXPECT_EQ(hoffman_bound(graph_params({Family::kMatching, 3})), 3);
  for (int n = 2; n <= 8; ++n) {
    for (Family f : {Family::kPermutation, Family::kMatching}) {
      const GraphParams p = graph_params({f, n});
      EXPECT_EQ(hoffman_bound(p), BigRational(p.N)) << n;
    }
  }
}

TEST(Bounds, MixingEdgeBoundEqualityCases) {
  for (Family f : {Family::kPermutation, Family::kMatching}) {
    const FamilyGraph g({f, 4});
    const Spectrum s = dense_spectrum(g);
    const VertexSet star = star_set(g, {0, 1});
    EXPECT_EQ(mixing_edge_lower_bound(g, star, 0, s), 0);
    const VertexSet all = VertexSet::full(g.vertex_count());
    EXPECT_EQ(mixing_edge_lower_bound(g, all, 0, s), BigRational(g.params().V * g.params().d / 2));
  }
}

TEST(Bounds, MixingEdgeBoundOnRandomSets) {
  const FamilyGraph m3({Family::kMatching, 3});
  const Spectrum s = dense_spectrum(m3);
  const ExtremalEigenspaceProjector proj(m3, s);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    SampleStream stream(5, i);
    const VertexSet a = random_subset(m3.vertex_count(), stream);
    const BigRational res = proj.project(indicator(a)).residual_sq;
    EXPECT_LE(mixing_edge_lower_bound(m3, a, res, s), BigRational(induced_edge_count(m3, a)));
  }
}

TEST(Bounds, RatioIsoperimetry) {
  const GraphParams g4 = graph_params({Family::kPermutation, 4});
  EXPECT_EQ(ratio_isoperimetry_bound(g4, 1, 2), 4);
  EXPECT_EQ(ratio_isoperimetry_bound(g4, 3, 7), 0);
  EXPECT_EQ(ratio_isoperimetry_bound(g4, 5, 7), 0);
  EXPECT_EQ(ratio_isoperimetry_bound(graph_params({Family::kMatching, 4}), 0, 1), 10);
}

TEST(Bounds, ProjectionEdgeBound) {
  const FamilyGraph m4({Family::kMatching, 4});
  const Spectrum s = dense_spectrum(m4);
  const ExtremalEigenspaceProjector proj(m4, s);
  const ProjectionEdgeBound at_star = projection_edge_bound(m4, star_set(m4, {0, 1}), proj,
                                                            s.second_least());
  EXPECT_TRUE(at_star.premise_holds);
  EXPECT_EQ(at_star.bound, 0);
  EXPECT_TRUE(at_star.holds);
  for (std::uint64_t i = 0; i < 30; ++i) {
    SampleStream stream(9, i);
    std::vector<std::size_t> pool(m4.vertex_count());
    std::iota(pool.begin(), pool.end(), 0);
    const auto chosen = random_choice(pool, m4.star_size(), stream);
    const ProjectionEdgeBound b =
        projection_edge_bound(m4, VertexSet::from_indices(m4.vertex_count(), chosen), proj,
                              s.second_least());
    EXPECT_TRUE(b.holds) << to_string(b.bound) << " > " << to_string(b.edges);
  }
}

TEST(Asymptotics, TableRows) {
  const auto perm = asymptotic_table(Family::kPermutation, 3, 12);
  EXPECT_NEAR(perm[3].pc, 0.18831, 1e-5);  // n = 6
  const auto pm = asymptotic_table(Family::kMatching, 3, 10);
  EXPECT_NEAR(pm[1].pc, 0.78320, 1e-5);  // n = 4
  for (const auto& [family, rows] : {std::pair{Family::kPermutation, perm},
                                     std::pair{Family::kMatching, pm}}) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      EXPECT_NEAR(rows[i].pc, critical_probability(family, rows[i].n), 1e-12);
      if (i > 0 && rows[i - 1].n >= 5) EXPECT_LT(rows[i].star_ratio, rows[i - 1].star_ratio);
    }
  }
}

}  // namespace
}  // namespace ekrlab
