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

#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "ekrlab/characters.hpp"
#include "ekrlab/dense_graph.hpp"
#include "ekrlab/fkn.hpp"
#include "ekrlab/graph_oracle.hpp"
#include "ekrlab/mis_solver.hpp"
#include "ekrlab/report.hpp"
#include "ekrlab/sampling.hpp"
#include "ekrlab/spectral.hpp"
#include "ekrlab/stability.hpp"
#include "ekrlab/threshold.hpp"
#include "json.hpp"

namespace ekrlab::cli {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

CheckStatus status_of(bool ok) { return ok ? CheckStatus::kPass : CheckStatus::kFail; }

json check_json(const CheckResult& c) {
  return {{"check", c.check},
          {"status", to_string(c.status)},
          {"lhs", c.lhs},
          {"rhs", c.rhs},
          {"witness", c.witness}};
}

json checks_json(const std::vector<CheckResult>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back(check_json(c));
  return out;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string fmt_double(double x, const char* pattern = "%.12g") {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), pattern, x);
  return buffer;
}

Family family_of(const Options& o) {
  try {
    return parse_family(o.family);
  } catch (const std::invalid_argument&) {
    throw UsageError("--family must be perm or pm, got '" + o.family + "'");
  }
}

std::string format_of(const Options& o, const std::string& fallback,
                      std::initializer_list<const char*> allowed) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw UsageError("--format " + f + " is not available for this subcommand");
}

BigRational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + " expects a rational such as 1/2 or 0.25, got '" + text + "'");
  }
}

std::vector<double> grid_of(const Options& o) {
  try {
    return parse_grid(o.p);
  } catch (const std::exception&) {
    throw UsageError("--p expects a:b:k or a single value, got '" + o.p + "'");
  }
}

// "--set" grammar: comma-separated items, each a 1-based vertex rank or
// star:a-b for a whole star (a->b for permutations, edge {a,b} for matchings).
VertexSet parse_vertex_set(const FamilyGraph& g, const std::string& text) {
  VertexSet s(g.vertex_count());
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item.rfind("star:", 0) == 0) {
      const std::string body = item.substr(5);
      const auto dash = body.find('-');
      if (dash == std::string::npos) throw UsageError("--set: star items look like star:1-2");
      StarCenter center;
      try {
        center = {std::stoi(body.substr(0, dash)) - 1, std::stoi(body.substr(dash + 1)) - 1};
      } catch (const std::exception&) {
        throw UsageError("--set: bad star item '" + item + "'");
      }
      if (g.kind() == Family::kMatching && center.a > center.b) std::swap(center.a, center.b);
      if (!g.valid_center(center)) throw UsageError("--set: no star " + item);
      s = s.set_union(star_set(g, center));
    } else {
      std::size_t used = 0;
      unsigned long long rank = 0;
      try {
        rank = std::stoull(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size() || rank < 1 || rank > g.vertex_count()) {
        throw UsageError("--set: '" + item + "' is not a vertex rank in 1.." +
                         std::to_string(g.vertex_count()));
      }
      s.insert(static_cast<std::size_t>(rank - 1));
    }
  }
  return s;
}

json vertex_list(const FamilyGraph& g, const VertexSet& s) {
  json out = json::array();
  s.for_each([&](std::size_t v) { out.push_back(g.vertex_to_string(v)); });
  return out;
}

std::string describe_set(const FamilyGraph& g, const VertexSet& s) {
  if (!s.empty() && contained_in_star(g, s) && s.count() == g.star_size()) {
    return "star " + to_string(g.kind(), max_star_overlap(g, s).witness);
  }
  std::string text;
  s.for_each([&](std::size_t v) {
    if (!text.empty()) text += ' ';
    text += g.vertex_to_string(v);
  });
  return text;
}

bool passed(const std::vector<CheckResult>& checks) { return all_passed(checks); }

// ---------------------------------------------------------------- params

CommandOutput cmd_params(const Options& o, const Budgets& budgets) {
  const Family family = family_of(o);
  const std::string format = format_of(o, "json", {"json", "csv"});
  const GraphParams p = graph_params({family, o.n}, budgets);
  const BigRational hoffman = hoffman_bound(p);
  std::vector<CheckResult> checks{{"hoffman_bound_equals_N", status_of(hoffman == BigRational(p.N)),
                                   to_string(hoffman), to_string(p.N), ""}};
  const std::optional<double> pc =
      o.n >= 3 ? std::optional<double>(critical_probability(family, o.n)) : std::nullopt;
  CommandOutput out;
  out.checks_passed = passed(checks);
  if (format == "csv") {
    out.text = "family,n,V,d,N,M,K,pc\n" + family_name(family) + ',' + std::to_string(o.n) + ',' +
               to_string(p.V) + ',' + to_string(p.d) + ',' + to_string(p.N) + ',' +
               to_string(p.M) + ',' + to_string(p.K) + ',' + (pc ? fmt_double(*pc) : "") + "\n";
    return out;
  }
  json pc_value;
  if (pc) pc_value = *pc;
  json j{{"schema", "ekrlab.params/1"},
         {"family", family_name(family)},
         {"n", o.n},
         {"V", to_string(p.V)},
         {"d", to_string(p.d)},
         {"N", to_string(p.N)},
         {"M", to_string(p.M)},
         {"K", to_string(p.K)},
         {"hoffman_bound", to_string(hoffman)},
         {"pc", pc_value},
         {"checks", checks_json(checks)}};
  out.text = dump(j);
  return out;
}

// -------------------------------------------------------------- spectrum

bool same_spectrum(const Spectrum& a, const Spectrum& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].value != b.entries[i].value ||
        a.entries[i].multiplicity != b.entries[i].multiplicity) {
      return false;
    }
  }
  return true;
}

std::string spectrum_text(const Spectrum& s) {
  std::string text;
  for (const auto& e : s.entries) {
    if (!text.empty()) text += ' ';
    text += to_string(e.value) + ":" + std::to_string(e.multiplicity);
  }
  return text;
}

CommandOutput cmd_spectrum(const Options& o, const Budgets& budgets) {
  const Family family = family_of(o);
  const std::string format = format_of(o, "csv", {"json", "csv"});
  if (o.method != "auto" && o.method != "character" && o.method != "dense") {
    throw UsageError("--method must be auto, character or dense");
  }
  if (o.method == "character" && family != Family::kPermutation) {
    throw UsageError("--method character is only available for --family perm");
  }
  const GraphParams p = graph_params({family, o.n}, budgets);
  std::optional<Spectrum> from_characters;
  std::optional<Spectrum> from_matrix;
  if (family == Family::kPermutation && o.method != "dense") {
    from_characters = character_spectrum(o.n);
  }
  const bool dense_fits = p.V <= static_cast<unsigned long>(budgets.dense_spectrum_max);
  if (o.method == "dense" || (o.method == "auto" && (dense_fits || !from_characters))) {
    from_matrix = dense_spectrum(FamilyGraph({family, o.n}, budgets), budgets);
  }
  const Spectrum& s = from_characters ? *from_characters : *from_matrix;

  std::vector<CheckResult> checks;
  checks.push_back({"largest_is_valency", status_of(s.largest() == BigRational(p.d)),
                    to_string(s.largest()), to_string(p.d), ""});
  checks.push_back({"least_is_minus_M", status_of(s.least() == BigRational(-p.M)),
                    to_string(s.least()), to_string(BigInt(-p.M)), ""});
  checks.push_back({"multiplicities_sum_to_V",
                    status_of(p.V == static_cast<unsigned long>(s.total_multiplicity())),
                    std::to_string(s.total_multiplicity()), to_string(p.V), ""});
  if (from_characters && from_matrix) {
    checks.push_back({"character_matches_dense",
                      status_of(same_spectrum(*from_characters, *from_matrix)),
                      spectrum_text(*from_characters), spectrum_text(*from_matrix), ""});
  }

  CommandOutput out;
  out.checks_passed = passed(checks);
  if (format == "csv") {
    out.text = "family,n,eigenvalue,multiplicity\n";
    for (const auto& e : s.entries) {
      out.text += family_name(family) + ',' + std::to_string(o.n) + ',' + to_string(e.value) +
                  ',' + std::to_string(e.multiplicity) + '\n';
    }
    return out;
  }
  json entries = json::array();
  for (const auto& e : s.entries) {
    entries.push_back({{"eigenvalue", to_string(e.value)}, {"multiplicity", e.multiplicity}});
  }
  std::string method = from_characters ? "character" : "dense";
  if (from_characters && from_matrix) method = "character+dense";
  out.text = dump({{"schema", "ekrlab.spectrum/1"},
                   {"family", family_name(family)},
                   {"n", o.n},
                   {"method", method},
                   {"entries", entries},
                   {"checks", checks_json(checks)}});
  return out;
}

// ------------------------------------------------------------ characters

CommandOutput cmd_characters(const Options& o, const Budgets& budgets) {
  const std::string format = format_of(o, "csv", {"json", "csv"});
  if (o.n < 1 || o.n > budgets.parameter_n_max) {
    throw UsageError("--n must lie in 1.." + std::to_string(budgets.parameter_n_max));
  }
  const auto parts = partitions(o.n);
  const std::size_t count = parts.size();
  std::vector<std::vector<BigInt>> table(count, std::vector<BigInt>(count));
  std::vector<BigInt> sizes(count);
  for (std::size_t j = 0; j < count; ++j) sizes[j] = class_size(parts[j]);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) table[i][j] = mn_character(parts[i], parts[j]);
  }

  // Row orthogonality and the identity column.
  const BigInt order = factorial(o.n);
  std::size_t orthogonality_failures = 0;
  std::string orthogonality_witness;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a; b < count; ++b) {
      BigInt sum = 0;
      for (std::size_t j = 0; j < count; ++j) sum += sizes[j] * table[a][j] * table[b][j];
      const BigInt expected = a == b ? order : BigInt(0);
      if (sum != expected && orthogonality_failures++ == 0) {
        orthogonality_witness = parts[a].to_string() + " " + parts[b].to_string();
      }
    }
  }
  std::size_t dimension_failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (table[i][count - 1] != dimension(parts[i])) ++dimension_failures;
  }
  std::vector<CheckResult> checks{
      {"row_orthogonality", status_of(orthogonality_failures == 0),
       std::to_string(orthogonality_failures), "0", orthogonality_witness},
      {"identity_column_is_dimension", status_of(dimension_failures == 0),
       std::to_string(dimension_failures), "0", ""}};

  CommandOutput out;
  out.checks_passed = passed(checks);
  if (format == "csv") {
    out.text = "lambda,mu,class_size,chi\n";
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        out.text += csv_quote(parts[i].to_string()) + ',' + csv_quote(parts[j].to_string()) + ',' +
                    to_string(sizes[j]) + ',' + to_string(table[i][j]) + '\n';
      }
    }
    return out;
  }
  json names = json::array();
  json size_list = json::array();
  for (std::size_t j = 0; j < count; ++j) {
    names.push_back(parts[j].to_string());
    size_list.push_back(to_string(sizes[j]));
  }
  json rows = json::array();
  for (const auto& row : table) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(r);
  }
  out.text = dump({{"schema", "ekrlab.characters/1"},
                   {"n", o.n},
                   {"partitions", names},
                   {"class_sizes", size_list},
                   {"table", rows},
                   {"checks", checks_json(checks)}});
  return out;
}

// ------------------------------------------------------------ ekr-verify

CommandOutput cmd_ekr_verify(const Options& o, const Budgets& budgets) {
  const Family family = family_of(o);
  format_of(o, "json", {"json"});
  const FamilyGraph g({family, o.n}, budgets);
  const DenseGraph dense = materialize(g, budgets);
  const GraphParams& p = g.params();
  std::vector<CheckResult> checks;

  const MisResult mis = max_independent_set(dense, g.star_size(), budgets);
  checks.push_back({"alpha_equals_N", status_of(p.N == static_cast<unsigned long>(mis.size)),
                    std::to_string(mis.size), to_string(p.N), describe_set(g, mis.witness)});

  json maximum = json::object();
  try {
    const auto sets = enumerate_maximum_independent_sets(dense, budgets);
    json listed = json::array();
    std::size_t stars = 0;
    for (const auto& s : sets) {
      const bool is_star = s.count() == g.star_size() && contained_in_star(g, s);
      if (is_star) ++stars;
      listed.push_back(is_star ? json{{"star", to_string(family, max_star_overlap(g, s).witness)}}
                               : json{{"vertices", vertex_list(g, s)}});
    }
    maximum = {{"count", sets.size()}, {"all_stars", stars == sets.size()}, {"sets", listed}};
    checks.push_back({"maximum_sets_are_the_stars",
                      status_of(stars == sets.size() && sets.size() == g.star_count()),
                      std::to_string(sets.size()) + " sets, " + std::to_string(stars) + " stars",
                      std::to_string(g.star_count()) + " stars", ""});
  } catch (const BudgetExceeded& e) {
    maximum = {{"skipped", e.what()}};
    checks.push_back({"maximum_sets_are_the_stars", CheckStatus::kSkipped, "", "", e.what()});
  }

  // Every vertex outside a star has exactly M neighbours in it.
  std::size_t violations = 0;
  std::string witness;
  const std::size_t m = p.M.get_ui();
  for (std::size_t x = 0; x < g.star_count(); ++x) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (g.in_star(v, x)) continue;
      const std::size_t k = neighbors_in_star(g, x, v);
      if (k != m && violations++ == 0) {
        witness = g.vertex_to_string(v) + " in star " + to_string(family, g.star_center(x)) +
                  " has " + std::to_string(k);
      }
    }
  }
  checks.push_back({"outside_vertex_regularity", status_of(violations == 0),
                    std::to_string(violations) + " violations", "0", witness});

  CommandOutput out;
  out.checks_passed = passed(checks);
  out.text = dump({{"schema", "ekrlab.ekr-verify/1"},
                   {"family", family_name(family)},
                   {"n", o.n},
                   {"alpha", mis.size},
                   {"N", to_string(p.N)},
                   {"alpha_witness", describe_set(g, mis.witness)},
                   {"maximum_independent_sets", maximum},
                   {"checks", checks_json(checks)}});
  return out;
}

// ------------------------------------------------------------- iso-check

CommandOutput cmd_iso_check(const Options& o, const Budgets& budgets) {
  const Family family = family_of(o);
  format_of(o, "json", {"json"});
  const FamilyGraph g({family, o.n}, budgets);
  const GraphParams& p = g.params();
  const Spectrum spectrum = dense_spectrum(g, budgets);
  const ExtremalEigenspaceProjector projector(g, spectrum, budgets);
  std::vector<CheckResult> checks;

  struct Tally {
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::string witness;
    std::optional<BigRational> min_slack;
  };
  auto mixing = [&](const VertexSet& s, Tally& t) {
    const BigRational res = projector.project(indicator(s)).residual_sq;
    const BigRational bound = mixing_edge_lower_bound(g, s, res, spectrum);
    const BigInt edges = induced_edge_count(g, s, budgets);
    const BigRational slack = BigRational(edges) - bound;
    ++t.checked;
    if (!t.min_slack || slack < *t.min_slack) t.min_slack = slack;
    if (slack < 0 && t.violations++ == 0) {
      t.witness = "|S|=" + std::to_string(s.count()) + " ed=" + to_string(edges) +
                  " bound=" + to_string(bound);
    }
    return slack;
  };

  Tally stars;
  std::size_t star_equalities = 0;
  for (std::size_t x = 0; x < g.star_count(); ++x) {
    if (mixing(star_set(g, g.star_center(x)), stars) == 0) ++star_equalities;
  }
  checks.push_back({"mixing_equality_at_stars", status_of(star_equalities == g.star_count()),
                    std::to_string(star_equalities), std::to_string(g.star_count()), ""});
  Tally full;
  const bool full_equal = mixing(VertexSet::full(g.vertex_count()), full) == 0;
  checks.push_back({"mixing_equality_at_full_set", status_of(full_equal),
                    to_string(*full.min_slack), "0", ""});

  Tally random;
  for (std::size_t i = 0; i < o.samples; ++i) {
    SampleStream stream(o.seed, i);
    mixing(random_subset(g.vertex_count(), stream), random);
  }
  checks.push_back({"mixing_bound_random_sets", status_of(random.violations == 0),
                    std::to_string(random.violations) + " violations in " +
                        std::to_string(random.checked),
                    "0", random.witness});

  // T = (S \ A) ∪ B for a random star S, A inside it and B outside it.
  std::size_t ratio_violations = 0;
  std::string ratio_witness;
  const std::size_t m = p.M.get_ui();
  const std::size_t outside = g.vertex_count() - g.star_size();
  for (std::size_t i = 0; i < o.samples; ++i) {
    SampleStream stream(o.seed, o.samples + i);
    const std::size_t x = stream.below(g.star_count());
    const VertexSet star = star_set(g, g.star_center(x));
    std::vector<std::size_t> inside_pool = star.indices();
    std::vector<std::size_t> outside_pool;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!star.contains(v)) outside_pool.push_back(v);
    }
    const std::size_t a_size = stream.below(std::min(m, g.star_size()) + 1);
    const std::size_t b_size = 1 + stream.below(std::min(outside, 2 * m));
    VertexSet t = star;
    for (std::size_t v : random_choice(inside_pool, a_size, stream)) t.erase(v);
    for (std::size_t v : random_choice(outside_pool, b_size, stream)) t.insert(v);
    const BigInt bound = ratio_isoperimetry_bound(p, a_size, b_size);
    const BigInt edges = induced_edge_count(g, t, budgets);
    if (edges < bound && ratio_violations++ == 0) {
      ratio_witness = "star " + to_string(family, g.star_center(x)) + " |A|=" +
                      std::to_string(a_size) + " |B|=" + std::to_string(b_size) +
                      " ed=" + to_string(edges) + " bound=" + to_string(bound);
    }
  }
  checks.push_back({"ratio_bound_random_constructions", status_of(ratio_violations == 0),
                    std::to_string(ratio_violations) + " violations in " + std::to_string(o.samples),
                    "0", ratio_witness});

  CommandOutput out;
  out.checks_passed = passed(checks);
  out.text = dump({{"schema", "ekrlab.iso-check/1"},
                   {"family", family_name(family)},
                   {"n", o.n},
                   {"seed", o.seed},
                   {"samples", o.samples},
                   {"mu", to_string(spectrum.second_least())},
                   {"tau", to_string(spectrum.least())},
                   {"projector", projector.uses_star_span() ? "star-span" : "eigenspace-kernel"},
                   {"min_slack_random", random.min_slack ? to_string(*random.min_slack) : ""},
                   {"checks", checks_json(checks)}});
  return out;
}

// ----------------------------------------------------- fkn-check / approx

std::vector<std::pair<std::string, VertexSet>> fkn_sets(const FamilyGraph& g, const Options& o) {
  std::vector<std::pair<std::string, VertexSet>> sets;
  if (!o.set.empty()) {
    sets.emplace_back("--set " + o.set, parse_vertex_set(g, o.set));
    return sets;
  }
  sets.emplace_back("star {1,2}", star_set(g, {0, 1}));
  for (std::size_t i = 0; i < o.samples; ++i) {
    SampleStream stream(o.seed, i);
    sets.emplace_back("random #" + std::to_string(i), random_subset(g.vertex_count(), stream));
  }
  return sets;
}

const FamilyGraph& matching_graph(const Options& o, const Budgets& budgets,
                                  std::optional<FamilyGraph>& storage) {
  if (family_of(o) != Family::kMatching) {
    throw UsageError("this subcommand works on perfect matchings; use --family pm");
  }
  storage.emplace(GraphFamily{Family::kMatching, o.n}, budgets);
  return *storage;
}

CommandOutput cmd_fkn_check(const Options& o, const Budgets& budgets) {
  format_of(o, "json", {"json"});
  std::optional<FamilyGraph> storage;
  const FamilyGraph& g = matching_graph(o, budgets, storage);
  const StarSpaceProjector projector(g, budgets);
  CommandOutput out;
  json reports = json::array();
  std::map<std::string, std::size_t> failures;
  for (const auto& [label, a] : fkn_sets(g, o)) {
    auto checks = fkn_identity_suite(g, a, projector);
    auto inequalities = fkn_inequality_suite(g, a, projector);
    checks.insert(checks.end(), inequalities.begin(), inequalities.end());
    for (const auto& c : checks) {
      if (c.status == CheckStatus::kFail) ++failures[c.check];
    }
    out.checks_passed = out.checks_passed && passed(checks);
    reports.push_back({{"set", label}, {"size", a.count()}, {"checks", checks_json(checks)}});
  }
  out.text = dump({{"schema", "ekrlab.fkn-check/1"},
                   {"family", "pm"},
                   {"n", o.n},
                   {"seed", o.seed},
                   {"failures", failures},
                   {"sets", reports}});
  return out;
}

CommandOutput cmd_fkn_approx(const Options& o, const Budgets& budgets) {
  format_of(o, "json", {"json"});
  std::optional<FamilyGraph> storage;
  const FamilyGraph& g = matching_graph(o, budgets, storage);
  const StarSpaceProjector projector(g, budgets);
  json reports = json::array();
  for (const auto& [label, a] : fkn_sets(g, o)) {
    const FknCoefficients coefficients = star_coefficients(g, a);
    const MomentReport moments = h_moments(g, a, projector);
    const StarApproximation approx = star_approximation(g, a);
    json centers = json::array();
    for (const auto& e : approx.z) centers.push_back(to_string(Family::kMatching, e));
    reports.push_back({{"set", label},
                       {"size", a.count()},
                       {"c", to_string(coefficients.c)},
                       {"round_c", to_string(round_half_up(coefficients.c))},
                       {"epsilon", to_string(moments.epsilon)},
                       {"stars", centers},
                       {"symdiff", to_string(approx.symdiff)}});
  }
  CommandOutput out;
  out.text = dump({{"schema", "ekrlab.fkn-approx/1"},
                   {"family", "pm"},
                   {"n", o.n},
                   {"seed", o.seed},
                   {"sets", reports}});
  return out;
}

// ------------------------------------------------------------- stability

CommandOutput cmd_stability(const Options& o, const Budgets& budgets) {
  format_of(o, "json", {"json"});
  if (family_of(o) != Family::kMatching) {
    throw UsageError("stability works on perfect matchings; use --family pm");
  }
  const FamilyGraph g({Family::kMatching, o.n}, budgets);
  BigRational delta = parse_rational_flag("--delta", o.delta);
  if (o.threshold) {
    if (*o.threshold > g.star_size()) throw UsageError("--threshold exceeds (2n-3)!!");
    BigRational fraction(static_cast<unsigned long>(*o.threshold),
                         static_cast<unsigned long>(g.star_size()));
    fraction.canonicalize();
    delta = 1 - fraction;
  }
  if (delta < 0 || delta > 1) throw UsageError("--delta must lie in [0, 1]");
  const StabilityReport r = stability_check(o.n, delta, budgets);
  std::vector<CheckResult> checks{
      {"maximum_sets_are_stars", status_of(r.maximum_sets_are_stars),
       std::to_string(r.maximum_sets), std::to_string(g.star_count()), ""},
      {"non_star_sets_below_N", status_of(r.max_non_star_size < g.star_size()),
       std::to_string(r.max_non_star_size), std::to_string(g.star_size()),
       r.max_non_star_witness ? describe_set(g, *r.max_non_star_witness) : ""},
      {"outside_vertex_bound", status_of(r.outside_vertex_bound_holds),
       std::to_string(r.outside_vertex_pairs_checked) + " pairs", "", ""}};
  CommandOutput out;
  out.checks_passed = passed(checks);
  out.text = dump({{"schema", "ekrlab.stability/1"},
                   {"family", "pm"},
                   {"n", o.n},
                   {"delta", to_string(r.delta)},
                   {"threshold", r.threshold},
                   {"maximal_sets", r.maximal_sets},
                   {"maximal_sets_at_threshold", r.maximal_sets_at_threshold},
                   {"non_star_at_threshold", r.non_star_at_threshold},
                   {"maximum_sets", r.maximum_sets},
                   {"max_non_star_size", r.max_non_star_size},
                   {"max_non_star_witness",
                    r.max_non_star_witness ? vertex_list(g, *r.max_non_star_witness) : json()},
                   {"checks", checks_json(checks)}});
  return out;
}

// -------------------------------------------------------- pc / sweep / expect

CommandOutput cmd_pc(const Options& o, const Budgets&) {
  const Family family = family_of(o);
  const std::string format = format_of(o, "text", {"text", "json", "csv"});
  if (o.n < 3) throw UsageError("pc needs --n >= 3");
  const double pc = critical_probability(family, o.n);
  CommandOutput out;
  if (format == "text") {
    out.text = fmt_double(pc, "%.5f") + "\n";
  } else if (format == "csv") {
    out.text = "family,n,pc\n" + family_name(family) + ',' + std::to_string(o.n) + ',' +
               fmt_double(pc) + "\n";
  } else {
    out.text = dump({{"schema", "ekrlab.pc/1"}, {"family", family_name(family)}, {"n", o.n}, {"pc", pc}});
  }
  return out;
}

CommandOutput cmd_sweep(const Options& o, const Budgets& budgets) {
  const std::string format = format_of(o, "csv", {"json", "csv"});
  SimConfig config;
  config.family = family_of(o);
  config.n = o.n;
  config.p_grid = grid_of(o);
  config.trials = o.trials;
  config.seed = o.seed;
  config.threads = o.threads;
  config.alpha_mode = !o.no_alpha;
  if (o.n < 3) throw UsageError("sweep needs --n >= 3");
  for (double p : config.p_grid) {
    if (!(p >= 0 && p <= 1)) throw UsageError("--p values must lie in [0, 1]");
  }
  if (config.trials == 0) throw UsageError("--trials must be positive");
  const ThresholdReport report = threshold_sweep(config, budgets);
  CommandOutput out;
  if (format == "csv") {
    out.text = report.to_csv();
    return out;
  }
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"p", r.p},
                    {"trials", r.trials},
                    {"successes", r.successes},
                    {"p_hat", r.p_hat},
                    {"wilson_lo", r.interval.low},
                    {"wilson_hi", r.interval.high},
                    {"mean_Y", r.mean_superstars},
                    {"pc", r.pc},
                    {"p_over_pc", r.p_over_pc},
                    {"implied_faux_stars", r.implied_faux_stars}});
  }
  out.text = dump({{"schema", "ekrlab.sweep/1"},
                   {"family", family_name(report.family)},
                   {"n", report.n},
                   {"seed", o.seed},
                   {"success_event", config.alpha_mode ? "alpha == N" : "Y == 0"},
                   {"rows", rows}});
  return out;
}

CommandOutput cmd_expect(const Options& o, const Budgets& budgets) {
  const Family family = family_of(o);
  format_of(o, "json", {"json"});
  const GraphParams params = graph_params({family, o.n}, budgets);
  const std::size_t n_size = params.N.get_ui();
  json rows = json::array();
  for (double p : grid_of(o)) {
    if (!(p >= 0 && p <= 1)) throw UsageError("--p values must lie in [0, 1]");
    json bounds = json::array();
    for (std::size_t i = 1; i <= std::min<std::size_t>(n_size, 3); ++i) {
      for (std::size_t j = i; j < i + 8; ++j) {
        json value;
        try {
          value = fauxstar_expectation_bound(family, o.n, p, i, j);
        } catch (const std::overflow_error&) {
          value = "overflow";
        }
        bounds.push_back({{"i", i}, {"j", j}, {"alpha_ij", value}});
      }
    }
    rows.push_back({{"p", p},
                    {"expected_superstars", expected_superstar_count(family, o.n, p)},
                    {"faux_star_bounds", bounds}});
  }
  CommandOutput out;
  out.text = dump({{"schema", "ekrlab.expect/1"},
                   {"family", family_name(family)},
                   {"n", o.n},
                   {"V", to_string(params.V)},
                   {"N", to_string(params.N)},
                   {"M", to_string(params.M)},
                   {"K", to_string(params.K)},
                   {"rows", rows}});
  return out;
}

using Handler = std::function<CommandOutput(const Options&, const Budgets&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"params", cmd_params},         {"spectrum", cmd_spectrum},
      {"characters", cmd_characters}, {"ekr-verify", cmd_ekr_verify},
      {"iso-check", cmd_iso_check},   {"fkn-check", cmd_fkn_check},
      {"fkn-approx", cmd_fkn_approx}, {"stability", cmd_stability},
      {"pc", cmd_pc},                 {"sweep", cmd_sweep},
      {"expect", cmd_expect}};
  return table;
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names{"params",     "spectrum",   "characters",
                                              "ekr-verify", "iso-check",  "fkn-check",
                                              "fkn-approx", "stability",  "pc",
                                              "sweep",      "expect"};
  return names;
}

CommandOutput run_command(const std::string& name, const Options& options,
                          const Budgets& budgets) {
  const auto it = handlers().find(name);
  if (it == handlers().end()) throw UsageError("unknown subcommand " + name);
  if (options.n < 1 || options.n > budgets.parameter_n_max) {
    throw UsageError("--n must lie in 1.." + std::to_string(budgets.parameter_n_max));
  }
  return it->second(options, budgets);
}

}  // namespace ekrlab::cli
