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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ekrlab/numeric.hpp"

namespace ekrlab::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Every flag any subcommand accepts. Unused ones keep their defaults.
struct Options {
  std::string family = "pm";
  int n = 3;
  std::string p = "0.5";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string delta = "1/2";
  std::optional<std::size_t> threshold;
  std::string format;  // empty: the subcommand default
  unsigned threads = 1;
  std::string set;
  std::size_t samples = 100;
  bool no_alpha = false;
  std::string method = "auto";
};

/// What a subcommand produced: the report bytes and whether every
/// mathematical check in it passed.
struct CommandOutput {
  std::string text;
  bool checks_passed = true;
};

/// Thrown for bad flag values detected after parsing (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& subcommand_names();

CommandOutput run_command(const std::string& name, const Options& options,
                          const Budgets& budgets = default_budgets());

}  // namespace ekrlab::cli
