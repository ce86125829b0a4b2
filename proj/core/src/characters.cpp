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

#include "ekrlab/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ekrlab/combinatorics.hpp"

namespace ekrlab {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be non-increasing");
    }
    total_ += parts_[i];
  }
}

bool IntegerPartition::is_even() const noexcept {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

IntegerPartition IntegerPartition::conjugate() const {
  std::vector<int> out;
  if (!parts_.empty()) {
    for (int j = 1; j <= parts_[0]; ++j) {
      int count = 0;
      for (int p : parts_) {
        if (p >= j) ++count;
      }
      out.push_back(count);
    }
  }
  return IntegerPartition(std::move(out));
}

std::string IntegerPartition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) out << ',';
    out << parts_[i];
  }
  out << ')';
  return out.str();
}

std::vector<IntegerPartition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: n < 0");
  std::vector<IntegerPartition> out;
  std::vector<int> current;
  auto rec = [&](auto& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

namespace {

// Beta-set of a partition with `length` beads: parts[i] + (length - 1 - i).
std::vector<int> beta_set(const std::vector<int>& parts) {
  const int length = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < length; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (length - 1 - i);
  return beta;  // strictly decreasing
}

std::vector<int> from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int length = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < length; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (length - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;

std::shared_mutex memo_mutex;
std::map<MemoKey, BigInt>& memo() {
  static std::map<MemoKey, BigInt> table;
  return table;
}

// mu_rest lists the cycle lengths still to remove, largest first.
BigInt mn_recursive(const std::vector<int>& lambda, const std::vector<int>& mu_rest) {
  if (mu_rest.empty()) return lambda.empty() ? BigInt(1) : BigInt(0);
  MemoKey key{lambda, mu_rest};
  {
    std::shared_lock lock(memo_mutex);
    const auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  const int r = mu_rest.front();
  const std::vector<int> tail(mu_rest.begin() + 1, mu_rest.end());
  const std::vector<int> beta = beta_set(lambda);
  BigInt total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Removing the rim hook moves bead beta[i] to target; the leg length is
    // the number of beads strictly between them.
    int between = 0;
    for (int b : beta) {
      if (b > target && b < beta[i]) ++between;
    }
    std::vector<int> moved = beta;
    moved[i] = target;
    const BigInt sub = mn_recursive(from_beta_set(std::move(moved)), tail);
    if (between % 2 == 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  {
    std::unique_lock lock(memo_mutex);
    memo().emplace(std::move(key), total);
  }
  return total;
}

}  // namespace

BigInt mn_character(const IntegerPartition& lambda, const IntegerPartition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("mn_character: partitions of different sizes");
  }
  return mn_recursive(lambda.parts(), mu.parts());
}

BigInt class_size(const IntegerPartition& mu) {
  BigInt z = 1;
  const auto& parts = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int multiplicity = static_cast<int>(j - i);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]),
                  static_cast<unsigned long>(multiplicity));
    z *= power * factorial(multiplicity);
    i = j;
  }
  return factorial(mu.size()) / z;
}

BigInt dimension(const IntegerPartition& lambda) {
  const auto& parts = lambda.parts();
  const auto columns = lambda.conjugate().parts();
  BigInt hooks = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      const int arm = parts[i] - j - 1;
      const int leg = columns[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

}  // namespace ekrlab
