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

#include "manifest.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <stdexcept>

namespace ekrlab::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string hex;
  char byte[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(byte, sizeof(byte), "%02x", digest[i]);
    hex += byte;
  }
  return hex;
}

nlohmann::json options_to_json(const Options& options) {
  nlohmann::json j;
  j["family"] = options.family;
  j["n"] = options.n;
  j["p"] = options.p;
  j["trials"] = options.trials;
  j["seed"] = options.seed;
  j["delta"] = options.delta;
  j["threshold"] = options.threshold ? nlohmann::json(*options.threshold) : nlohmann::json();
  j["format"] = options.format;
  j["threads"] = options.threads;
  j["set"] = options.set;
  j["samples"] = options.samples;
  j["no_alpha"] = options.no_alpha;
  j["method"] = options.method;
  return j;
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["schema"] = "ekrlab.manifest/1";
  j["version"] = kVersion;
  j["subcommand"] = subcommand;
  j["argv"] = argv;
  j["flags"] = options_to_json(options);
  j["seed"] = options.seed;
  j["started_utc"] = started_utc;
  j["wall_clock_seconds"] = wall_clock_seconds;
  j["output_digest"] = output_digest;
  return j;
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
  if (j.value("schema", "") != "ekrlab.manifest/1") {
    throw std::runtime_error("not an ekrlab run manifest (schema ekrlab.manifest/1)");
  }
  RunManifest m;
  m.subcommand = j.at("subcommand").get<std::string>();
  m.argv = j.at("argv").get<std::vector<std::string>>();
  m.output_digest = j.at("output_digest").get<std::string>();
  m.started_utc = j.value("started_utc", "");
  m.wall_clock_seconds = j.value("wall_clock_seconds", 0.0);
  return m;
}

}  // namespace ekrlab::cli
