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

namespace ekrlab {

enum class CheckStatus { kPass, kFail, kSkipped };

std::string to_string(CheckStatus status);  // "pass", "fail", "skipped"

/// One verified statement: both sides as exact text, and where it was
/// evaluated (or where it failed).
struct CheckResult {
  std::string check;
  CheckStatus status = CheckStatus::kSkipped;
  std::string lhs;
  std::string rhs;
  std::string witness;
};

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace ekrlab
