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

#include "ekrlab/fkn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "ekrlab/combinatorics.hpp"

namespace ekrlab {

namespace {

BigRational q(long value) { return BigRational(value); }

CheckResult compare(std::string name, const BigRational& lhs, const BigRational& rhs,
                    bool holds, std::string witness) {
  return {std::move(name), holds ? CheckStatus::kPass : CheckStatus::kFail,
          to_string(lhs), to_string(rhs), std::move(witness)};
}

CheckResult equal(std::string name, const BigRational& lhs, const BigRational& rhs,
                  std::string witness) {
  const bool holds = lhs == rhs;
  return compare(std::move(name), lhs, rhs, holds, std::move(witness));
}

std::string fmt_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

void require_matching(const FamilyGraph& g, const VertexSet& a) {
  if (g.kind() != Family::kMatching) {
    throw std::invalid_argument("star coefficients are defined for the matching family");
  }
  if (g.n() < 3) throw std::invalid_argument("star coefficients need n >= 3");
  if (a.universe() != g.vertex_count()) {
    throw std::invalid_argument("vertex set does not belong to this graph");
  }
}

// Everything the suites need, computed once per (A, projection).
struct Analysis {
  FknCoefficients coef;
  MomentReport moments;
  std::vector<BigRational> g_values;
  std::vector<BigRational> h_values;
  Projection projection;
};

Analysis analyze(const FamilyGraph& g, const VertexSet& set,
                 const StarSpaceProjector& projector) {
  Analysis out;
  out.coef = star_coefficients(g, set);
  const FknCoefficients& k = out.coef;
  const int n = g.n();
  const long t1 = 2 * n - 1;
  const long t2 = 2 * n - 2;
  const long t3 = 2 * n - 3;
  const long t5 = 2 * n - 5;
  const auto vertices = static_cast<unsigned long>(g.vertex_count());
  MomentReport& m = out.moments;

  std::vector<std::size_t> stars(static_cast<std::size_t>(n));
  out.g_values.assign(g.vertex_count(), 0);
  out.h_values.assign(g.vertex_count(), 0);
  BigRational s1 = 0, s2 = 0, s3 = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    g.stars_of(v, stars.data());
    for (std::size_t e : stars) {
      out.g_values[v] += k.a[e];
      out.h_values[v] += k.b[e];
    }
    const BigRational& h = out.h_values[v];
    s1 += h;
    s2 += h * h;
    s3 += h * h * h;
  }
  m.mean_pointwise = s1 / vertices;
  m.second_pointwise = s2 / vertices;
  m.third_pointwise = s3 / vertices;

  BigRational sum_b = 0;
  m.sum_a2 = m.sum_b2 = m.sum_b3 = 0;
  for (std::size_t e = 0; e < k.b.size(); ++e) {
    sum_b += k.b[e];
    m.sum_a2 += k.a[e] * k.a[e];
    m.sum_b2 += k.b[e] * k.b[e];
    m.sum_b3 += k.b[e] * k.b[e] * k.b[e];
  }

  m.triangles_unordered = m.sigma1 = m.sigma2 = m.sigma3 = 0;
  for (int x = 0; x < 2 * n; ++x) {
    for (int y = x + 1; y < 2 * n; ++y) {
      const std::size_t xy = g.edge_index(x, y);
      for (int z = y + 1; z < 2 * n; ++z) {
        const std::size_t xz = g.edge_index(x, z);
        const std::size_t yz = g.edge_index(y, z);
        m.triangles_unordered += k.b[xy] * k.b[xz] * k.b[yz];
        m.sigma1 += k.a[xy] * k.a[xz] * k.a[yz];
        m.sigma2 += k.a[xy] * k.a[xz] + k.a[xy] * k.a[yz] + k.a[xz] * k.a[yz];
        m.sigma3 += k.a[xy] + k.a[xz] + k.a[yz];
      }
    }
  }
  m.triangles_ordered = 6 * m.triangles_unordered;

  m.mean_from_sums = sum_b / t1;
  m.second_from_sums = BigRational(t2, t1 * t3) * m.sum_b2;
  m.third_from_sums = BigRational(2 * (n - 2), t3 * t5) * m.sum_b3 -
                      m.triangles_ordered / q(t1 * t3 * t5);

  out.projection = projector.project(indicator(set));
  m.residual_sq = out.projection.residual_sq;
  m.epsilon = k.c == 0 ? BigRational(0) : m.residual_sq * t1 / k.c;
  BigRational cubes = 0;
  for (const auto& value : out.projection.f1) cubes += value * value * value;
  m.f1_cubed = cubes / vertices;
  return out;
}

}  // namespace

FknCoefficients star_coefficients(const FamilyGraph& g, const VertexSet& set) {
  require_matching(g, set);
  const int n = g.n();
  const std::size_t edge_total = static_cast<std::size_t>(g.edge_count_of_complete_graph());
  std::vector<unsigned long> counts(edge_total, 0);
  std::vector<std::size_t> stars(static_cast<std::size_t>(n));
  set.for_each([&](std::size_t v) {
    g.stars_of(v, stars.data());
    for (std::size_t e : stars) ++counts[e];
  });
  const BigRational star_size(static_cast<unsigned long>(g.star_size()));

  FknCoefficients out;
  out.n = n;
  out.c = BigRational(static_cast<unsigned long>(set.count())) / star_size;
  const BigRational theta = out.c / (2 * n - 1);
  out.a.reserve(edge_total);
  out.b.reserve(edge_total);
  for (std::size_t e = 0; e < edge_total; ++e) {
    out.edges.push_back(g.star_center(e));
    out.a.push_back(BigRational(counts[e]) / star_size);
    out.b.push_back(out.a.back() - theta);
  }
  for (int x = 0; x < 2 * n; ++x) {
    BigRational sum_a = 0;
    BigRational sum_b = 0;
    for (int y = 0; y < 2 * n; ++y) {
      if (y == x) continue;
      const std::size_t e = g.edge_index(x, y);
      sum_a += out.a[e];
      sum_b += out.b[e];
    }
    if (sum_a != out.c || sum_b != 0) {
      throw IdentityViolation("vertex sum of star coefficients differs from c at vertex " +
                              std::to_string(x + 1));
    }
  }
  return out;
}

bool MomentReport::consistent() const {
  return mean_pointwise == mean_from_sums && second_pointwise == second_from_sums &&
         third_pointwise == third_from_sums;
}

MomentReport h_moments(const FamilyGraph& g, const VertexSet& a,
                       const StarSpaceProjector& projector) {
  MomentReport m = analyze(g, a, projector).moments;
  if (!m.consistent()) {
    throw IdentityViolation("moments of h disagree between the two computations");
  }
  return m;
}

namespace {

std::vector<CheckResult> affine_checks(const FamilyGraph& g, const Analysis& an) {
  const int n = g.n();
  const BigRational alpha(2 * n - 2, 2 * n - 3);
  const BigRational g_shift = an.coef.c * (n - 2) / (2 * n - 3);
  const BigRational h_shift = an.coef.c * BigRational(2 * n - 2, (2 * n - 1) * (2 * n - 3));
  BigRational worst_g = 0, worst_h = 0;
  std::size_t where_g = 0, where_h = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const BigRational scaled = alpha * an.projection.f1[v];
    const BigRational dg = abs(an.g_values[v] - (scaled + g_shift));
    const BigRational dh = abs(an.h_values[v] - (scaled - h_shift));
    if (dg > worst_g) {
      worst_g = dg;
      where_g = v;
    }
    if (dh > worst_h) {
      worst_h = dh;
      where_h = v;
    }
  }
  auto witness = [&](const BigRational& worst, std::size_t where) {
    return worst == 0 ? "max deviation over all " + std::to_string(g.vertex_count()) + " vertices"
                      : "vertex " + g.vertex_to_string(where);
  };
  return {equal("g_affine", worst_g, 0, witness(worst_g, where_g)),
          equal("h_affine", worst_h, 0, witness(worst_h, where_h))};
}

}  // namespace

std::vector<CheckResult> gh_affine_check(const FamilyGraph& g, const VertexSet& a,
                                         const StarSpaceProjector& projector) {
  return affine_checks(g, analyze(g, a, projector));
}

std::vector<CheckResult> fkn_identity_suite(const FamilyGraph& g, const VertexSet& set,
                                            const StarSpaceProjector& projector) {
  const Analysis an = analyze(g, set, projector);
  const FknCoefficients& k = an.coef;
  const MomentReport& m = an.moments;
  const int n = g.n();
  const long t1 = 2 * n - 1, t2 = 2 * n - 2, t3 = 2 * n - 3;
  std::vector<CheckResult> out;

  // Vertex sums of a and b (the star coefficients are already validated, so
  // these restate the result for the report).
  {
    CheckResult a_sum = equal("a_vertex_sum", k.c, k.c, "all " + std::to_string(2 * n) + " vertices of K_2n");
    CheckResult b_sum = equal("b_vertex_sum", 0, 0, a_sum.witness);
    for (int x = 0; x < 2 * n; ++x) {
      BigRational sa = 0, sb = 0;
      for (int y = 0; y < 2 * n; ++y) {
        if (y == x) continue;
        sa += k.a[g.edge_index(x, y)];
        sb += k.b[g.edge_index(x, y)];
      }
      if (sa != k.c && a_sum.status == CheckStatus::kPass) {
        a_sum = equal("a_vertex_sum", sa, k.c, "vertex " + std::to_string(x + 1));
      }
      if (sb != 0 && b_sum.status == CheckStatus::kPass) {
        b_sum = equal("b_vertex_sum", sb, 0, "vertex " + std::to_string(x + 1));
      }
    }
    out.push_back(std::move(a_sum));
    out.push_back(std::move(b_sum));
  }

  // Sum of b over the edges disjoint from e equals b_e.
  {
    CheckResult disjoint = equal("b_disjoint_sum", k.b[0], k.b[0],
                                 "all " + std::to_string(k.b.size()) + " edges of K_2n");
    for (std::size_t e = 0; e < k.b.size(); ++e) {
      const StarCenter& ce = k.edges[e];
      BigRational total = 0;
      for (std::size_t f = 0; f < k.b.size(); ++f) {
        const StarCenter& cf = k.edges[f];
        if (cf.a != ce.a && cf.a != ce.b && cf.b != ce.a && cf.b != ce.b) total += k.b[f];
      }
      if (total != k.b[e]) {
        disjoint = equal("b_disjoint_sum", total, k.b[e],
                         "edge " + to_string(Family::kMatching, ce));
        break;
      }
    }
    out.push_back(std::move(disjoint));
  }

  out.push_back(equal("mean_h_zero", m.mean_pointwise, 0, "pointwise mean of h"));
  out.push_back(equal("mean_h_from_sums", m.mean_from_sums, m.mean_pointwise,
                      "sum of b over (2n-1)"));
  out.push_back(equal("second_moment", m.second_pointwise, m.second_from_sums,
                      "pointwise vs (2n-2)/((2n-1)(2n-3)) sum b^2"));
  out.push_back(equal("third_moment_ordered_triangles", m.third_pointwise, m.third_from_sums,
                      "ordered triangle sum " + to_string(m.triangles_ordered)));
  for (auto& r : affine_checks(g, an)) out.push_back(std::move(r));

  const BigRational c = k.c;
  const BigRational t2sq_t3sq = BigRational(t2 * t2, t3 * t3);
  const BigRational second_eps = c * (1 - m.epsilon) * t2sq_t3sq / t1 -
                                 c * c * t2sq_t3sq / q(t1 * t1);
  out.push_back(equal("second_moment_epsilon", m.second_pointwise, second_eps,
                      "epsilon = " + to_string(m.epsilon)));

  const BigRational alpha(t2, t3);
  const BigRational beta = c * BigRational(t2, t1 * t3);
  const BigRational cube_rhs = m.third_pointwise + 3 * beta * m.second_pointwise +
                               3 * beta * beta * m.mean_pointwise + beta * beta * beta;
  out.push_back(equal("cube_identity", alpha * alpha * alpha * m.f1_cubed, cube_rhs,
                      "E[f1^3] = " + to_string(m.f1_cubed)));
  return out;
}

std::vector<CheckResult> fkn_inequality_suite(const FamilyGraph& g, const VertexSet& set,
                                              const StarSpaceProjector& projector) {
  const Analysis an = analyze(g, set, projector);
  const MomentReport& m = an.moments;
  const int n = g.n();
  const long t1 = 2 * n - 1, t2 = 2 * n - 2, t3 = 2 * n - 3, t5 = 2 * n - 5;
  const BigRational c = an.coef.c;
  const BigRational theta = c / t1;
  std::vector<CheckResult> out;

  const BigRational alpha(t2, t3);
  const BigRational b2_rhs = alpha * c - alpha * c * c / t1;
  out.push_back(compare("b2_bound", m.sum_b2, b2_rhs, m.sum_b2 <= b2_rhs, "sum b^2 <= rhs"));

  const BigRational c3 = c * c * c;
  const BigRational binom3(binomial(2 * n, 3));
  const BigRational expansion = m.sigma1 - theta * m.sigma2 + theta * theta * m.sigma3 -
                                binom3 * theta * theta * theta;
  out.push_back(equal("triangle_expansion", m.triangles_unordered, expansion,
                      "unordered vertex-triple sum"));
  out.push_back(compare("sigma1_nonnegative", m.sigma1, 0, m.sigma1 >= 0, "sigma1 >= 0"));
  out.push_back(equal("sigma2_identity", m.sigma2, c * c * n - m.sum_a2,
                      "sigma2 = n c^2 - sum a^2"));
  out.push_back(compare("sigma2_bound", m.sigma2, c * c * n, m.sigma2 <= c * c * n,
                        "sigma2 <= n c^2"));
  out.push_back(equal("sigma3_identity", m.sigma3, c * (t2 * n), "sigma3 = (2n-2) n c"));

  const BigRational lower = 2 * c3 * n * t2 / (3 * q(t1 * t1)) - c3 * n / t1;
  out.push_back(compare("triangle_lower_bound", m.triangles_unordered, lower,
                        m.triangles_unordered >= lower, "unordered sum >= rhs"));

  const BigRational third_rhs = BigRational(2 * (n - 2), t3 * t5) * m.sum_b3 +
                                c3 * n * (2 * n + 1) / (3 * q(t1 * t1 * t1) * q(t3 * t5));
  out.push_back(compare("third_moment_bound", m.third_pointwise, third_rhs,
                        m.third_pointwise <= third_rhs, "E[h^3] <= rhs"));

  // Conditional lower bounds. They need f1 >= 0 everywhere, 0 < c <= (2n-1)/2
  // and epsilon <= 1/2.
  const bool f1_nonnegative = std::all_of(an.projection.f1.begin(), an.projection.f1.end(),
                                          [](const BigRational& x) { return x >= 0; });
  const bool premises = f1_nonnegative && c > 0 && 2 * c <= t1 && 2 * m.epsilon <= 1;
  const std::string premise_text = "f1 >= 0: " + std::string(f1_nonnegative ? "yes" : "no") +
                                   ", c = " + to_string(c) + ", epsilon = " + to_string(m.epsilon);
  const double eps = to_double(m.epsilon);
  const double cd = to_double(c);
  const double f1c = to_double(m.f1_cubed);
  if (premises) {
    const BigRational eta = m.epsilon * c / t1;
    const double optim = optim_lower_bound(theta, 1, 0, eta);
    out.push_back({"optim_f1_cubed", f1c >= optim - 1e-12 ? CheckStatus::kPass : CheckStatus::kFail,
                   fmt_double(f1c), fmt_double(optim), premise_text});
    const double simple = cd / t1 - 4 * cd * std::sqrt(eps) / t1;
    out.push_back({"f1_cubed_lower", f1c >= simple - 1e-12 ? CheckStatus::kPass : CheckStatus::kFail,
                   fmt_double(f1c), fmt_double(simple), premise_text});
    const double k1 = static_cast<double>(t5) * std::pow(static_cast<double>(t2), 3) /
                      (static_cast<double>(2 * n - 4) * t3 * t3 * t1);
    const double b3 = k1 * cd - 4 * k1 * cd * std::sqrt(eps) - 3 * k1 * cd * cd / t1 +
                      (2 * k1 - static_cast<double>(n) * (2 * n + 1) / (3.0 * (2 * n - 4) * t1)) *
                          cd * cd * cd / (static_cast<double>(t1) * t1);
    const double sb3 = to_double(m.sum_b3);
    out.push_back({"b3_lower", sb3 >= b3 - 1e-12 ? CheckStatus::kPass : CheckStatus::kFail,
                   fmt_double(sb3), fmt_double(b3), premise_text});
  } else {
    for (const char* name : {"optim_f1_cubed", "f1_cubed_lower", "b3_lower"}) {
      out.push_back({name, CheckStatus::kSkipped, "", "", "premises not met: " + premise_text});
    }
  }
  return out;
}

double optim_lower_bound(const BigRational& theta, const BigRational& high,
                         const BigRational& low, const BigRational& eta) {
  if (!(theta > 0 && theta < 1)) throw std::invalid_argument("optim_lower_bound: theta outside (0,1)");
  if (!(high > low && low >= 0)) throw std::invalid_argument("optim_lower_bound: need H > L >= 0");
  if (eta < 0) throw std::invalid_argument("optim_lower_bound: eta < 0");
  const BigRational spread = high - low;
  if (eta > spread * spread * theta * (1 - theta)) {
    throw std::invalid_argument("optim_lower_bound: eta / (theta (1 - theta)) exceeds (H - L)^2");
  }
  const double t = to_double(theta);
  const double h = to_double(high);
  const double l = to_double(low);
  const double e = to_double(eta);
  const double spread_tt = std::sqrt(t * (1 - t));
  return t * h * h * h + (1 - t) * l * l * l - 3 * (h * h - l * l) * std::sqrt(t * (1 - t) * e) +
         3 * ((1 - t) * l + t * h) * e - (1 - 2 * t) / spread_tt * std::pow(e, 1.5);
}

BigInt round_half_up(const BigRational& c) {
  if (c < 0) throw std::invalid_argument("round_half_up: negative input");
  BigInt result;
  const BigInt num = 2 * c.get_num() + c.get_den();
  const BigInt den = 2 * c.get_den();
  mpz_fdiv_q(result.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return result;
}

StarApproximation star_approximation(const FamilyGraph& g, const VertexSet& a) {
  const FknCoefficients k = star_coefficients(g, a);
  const std::size_t take = round_half_up(k.c).get_ui();
  std::vector<std::size_t> order(k.b.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return k.b[x] > k.b[y]; });
  StarApproximation out;
  out.b = VertexSet(g.vertex_count());
  for (std::size_t i = 0; i < take && i < order.size(); ++i) {
    out.z.push_back(k.edges[order[i]]);
    out.b = out.b.set_union(star_set(g, k.edges[order[i]]));
  }
  out.symdiff = static_cast<unsigned long>(a.symmetric_difference(out.b).count());
  return out;
}

}  // namespace ekrlab
