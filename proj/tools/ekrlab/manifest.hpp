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

#include <string>
#include <vector>

#include "commands.hpp"
#include "json.hpp"

namespace ekrlab::cli {

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

struct RunManifest {
  std::string subcommand;
  std::vector<std::string> argv;  // the flags after the subcommand, verbatim
  Options options;
  double wall_clock_seconds = 0.0;
  std::string started_utc;
  std::string output_digest;  // "sha256:<hex>"

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);
};

nlohmann::json options_to_json(const Options& options);

}  // namespace ekrlab::cli
