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

#include "ekrlab/numeric.hpp"

namespace ekrlab {

/// Non-increasing list of positive parts.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return total_; }   // n
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool has_part_one() const noexcept { return !parts_.empty() && parts_.back() == 1; }
  /// Every part even (the partitions 2*lambda indexing M_n eigenspaces).
  bool is_even() const noexcept;
  IntegerPartition conjugate() const;

  std::string to_string() const;  // "(3,1)"

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// All partitions of n in decreasing lexicographic order, (n) first.
std::vector<IntegerPartition> partitions(int n);

/// chi_lambda evaluated on the class of cycle type mu (Murnaghan-Nakayama).
/// Results are memoised in a process-wide table.
BigInt mn_character(const IntegerPartition& lambda, const IntegerPartition& mu);

/// Size of the conjugacy class of cycle type mu: n! / z_mu.
BigInt class_size(const IntegerPartition& mu);

/// chi_lambda(1) by the hook length formula.
BigInt dimension(const IntegerPartition& lambda);

}  // namespace ekrlab
