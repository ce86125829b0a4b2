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

// ekrlab command-line entry point.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "manifest.hpp"

namespace ekrlab::cli {
namespace {

struct Invocation {
  std::string subcommand;
  Options options;
  std::string out;
  std::string manifest;
  std::string replay;
  std::vector<std::string> recorded;  // args minus --out / --manifest
};

unsigned default_threads() {
  if (const char* env = std::getenv("EKR_THREADS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return 1;
}

const char* describe(const std::string& name) {
  static const std::map<std::string, const char*> text{
      {"params", "Exact parameters V, d, N, M, K of Gamma_n or M_n"},
      {"spectrum", "Eigenvalues with multiplicities (characters and/or dense)"},
      {"characters", "Character table of Sym(n) by Murnaghan-Nakayama"},
      {"ekr-verify", "Independence number, maximum sets and star regularity"},
      {"iso-check", "Edge-count lower bounds on random vertex subsets"},
      {"fkn-check", "Exact moment identities and inequalities for families of matchings"},
      {"fkn-approx", "Nearest union of round(c) stars to a family of matchings"},
      {"stability", "Exhaustive independent set stability scan on M_3 or M_4"},
      {"pc", "Threshold probability for alpha(G_p) = N"},
      {"sweep", "Monte Carlo estimate of P[alpha(G_p) = N] over a p grid"},
      {"expect", "Expected superstar count and faux-star union bounds"}};
  return text.at(name);
}

std::vector<std::string> strip_output_flags(const std::vector<std::string>& args) {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--out" || a == "--manifest" || a == "--replay") {
      ++i;
      continue;
    }
    if (a.rfind("--out=", 0) == 0 || a.rfind("--manifest=", 0) == 0 || a.rfind("--replay=", 0) == 0) {
      continue;
    }
    kept.push_back(a);
  }
  return kept;
}

// Returns an exit code when parsing ended the run (help, version, error).
std::optional<int> parse(const std::vector<std::string>& args, Invocation& inv) {
  CLI::App app{"ekrlab: exact and sampled checks on the permutation and perfect matching "
               "derangement graphs",
               "ekrlab"};
  app.set_version_flag("--version", std::string(kVersion));
  app.add_option("--replay", inv.replay, "Re-run a run manifest and compare the output digest");
  app.require_subcommand(0, 1);
  Options& o = inv.options;
  o.threads = default_threads();

  for (const std::string& name : subcommand_names()) {
    CLI::App* sub = app.add_subcommand(name, describe(name));
    sub->add_option("--family", o.family, "perm or pm")->check(CLI::IsMember({"perm", "pm"}));
    sub->add_option("--n", o.n, "Family parameter n");
    sub->add_option("--seed", o.seed, "Master seed");
    sub->add_option("--out", inv.out, "Write the report here instead of standard output");
    sub->add_option("--manifest", inv.manifest,
                    "Run manifest path (default: <out>.manifest.json when --out is given)");
    sub->add_option("--format", o.format, "json, csv (or text for pc)");
    sub->add_option("--threads", o.threads, "Thread budget (default: $EKR_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    if (name == "sweep" || name == "expect") {
      sub->add_option("--p", o.p, "Edge probability grid a:b:k, or a single value");
    }
    if (name == "sweep") {
      sub->add_option("--trials", o.trials, "Trials per grid point");
      sub->add_flag("--no-alpha", o.no_alpha,
                    "Skip the exact alpha solve; success means no independent superstar");
    }
    if (name == "stability") {
      sub->add_option("--delta", o.delta, "Size slack: threshold ceil((1-delta)(2n-3)!!)");
      sub->add_option("--threshold", o.threshold, "Explicit size threshold (overrides --delta)");
    }
    if (name == "iso-check" || name == "fkn-check" || name == "fkn-approx") {
      sub->add_option("--samples", o.samples, "Number of random sets");
    }
    if (name == "fkn-check" || name == "fkn-approx") {
      sub->add_option("--set", o.set,
                      "Explicit family: comma list of 1-based ranks and star:a-b items");
    }
    if (name == "spectrum") {
      sub->add_option("--method", o.method, "auto, character or dense");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  for (const std::string& name : subcommand_names()) {
    if (app.got_subcommand(name)) inv.subcommand = name;
  }
  if (inv.subcommand.empty() && inv.replay.empty()) {
    std::cerr << app.help();
    return 1;
  }
  inv.recorded = strip_output_flags(args);
  return std::nullopt;
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << bytes;
  if (!file) throw std::runtime_error("failed writing " + path);
}

int replay(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    std::cerr << "ekrlab: cannot read manifest " << path << "\n";
    return 1;
  }
  const RunManifest recorded = RunManifest::from_json(nlohmann::json::parse(file));
  Invocation inv;
  if (auto code = parse(recorded.argv, inv)) return *code;
  const CommandOutput result = run_command(inv.subcommand, inv.options);
  const std::string actual = "sha256:" + sha256_hex(result.text);
  const bool match = actual == recorded.output_digest;
  std::cout << nlohmann::json{{"manifest", path},
                              {"subcommand", inv.subcommand},
                              {"expected_digest", recorded.output_digest},
                              {"actual_digest", actual},
                              {"match", match}}
                   .dump(2)
            << "\n";
  return match ? 0 : 2;
}

int run(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  Invocation inv;
  if (auto code = parse(args, inv)) return *code;
  if (!inv.replay.empty()) return replay(inv.replay);

  const auto start = std::chrono::steady_clock::now();
  RunManifest manifest;
  manifest.started_utc = utc_now();
  const CommandOutput result = run_command(inv.subcommand, inv.options);
  manifest.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  manifest.subcommand = inv.subcommand;
  manifest.argv = inv.recorded;
  manifest.options = inv.options;
  manifest.output_digest = "sha256:" + sha256_hex(result.text);

  if (inv.out.empty()) {
    std::cout << result.text << std::flush;
  } else {
    write_file(inv.out, result.text);
  }
  std::string manifest_path = inv.manifest;
  if (manifest_path.empty() && !inv.out.empty()) manifest_path = inv.out + ".manifest.json";
  if (!manifest_path.empty()) write_file(manifest_path, manifest.to_json().dump(2) + "\n");
  return result.checks_passed ? 0 : 2;
}

}  // namespace
}  // namespace ekrlab::cli

int main(int argc, char** argv) {
  using ekrlab::BudgetExceeded;
  try {
    return ekrlab::cli::run(argc, argv);
  } catch (const BudgetExceeded& e) {
    std::cerr << nlohmann::json{{"error", "budget_exceeded"},
                                {"budget", e.budget()},
                                {"limit", e.limit()},
                                {"requested", e.requested()},
                                {"message", e.what()}}
                     .dump()
              << "\n";
    return 1;
  } catch (const ekrlab::cli::UsageError& e) {
    std::cerr << "ekrlab: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ekrlab: " << e.what() << "\n";
    return 1;
  } catch (const ekrlab::IdentityViolation& e) {
    std::cerr << nlohmann::json{{"error", "identity_violation"}, {"message", e.what()}}.dump()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ekrlab: " << e.what() << "\n";
    return 1;
  }
}
