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

#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ekrlab {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised when an operation would exceed one of the configured size budgets.
/// The budget name is part of the message and is available separately so the
/// CLI can report it as a structured error.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string budget, std::size_t limit, std::size_t requested);

  const std::string& budget() const noexcept { return budget_; }
  std::size_t limit() const noexcept { return limit_; }
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::string budget_;
  std::size_t limit_;
  std::size_t requested_;
};

/// Raised when an internal exact identity fails. Seeing one means a bug.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Size limits. Defaults follow the documented budgets; tests and the CLI can
// tighten or relax them per call.
struct Budgets {
  int parameter_n_max = 20;
  std::size_t vertex_table_max = 4'000'000;
  std::size_t explicit_adjacency_max = 20'000;
  std::size_t dense_spectrum_max = 4'000;
  std::size_t projection_vertex_max = 100'000;
  std::size_t projection_star_max = 1'000;
  std::size_t eigenspace_fallback_max = 800;
  std::size_t induced_edge_set_max = 20'000;
  std::size_t mis_vertex_max = 5'000;
  std::size_t enumeration_vertex_max = 1'500;
  std::size_t enumeration_cap = 1'000'000;
  std::size_t superstar_scan_vertex_max = 1'000;
  std::size_t trial_alpha_vertex_max = 120;
  std::size_t faux_star_vertex_max = 24;
  std::size_t faux_star_enumeration_cap = 200'000;
};

const Budgets& default_budgets();

std::string to_string(const BigInt& value);
std::string to_string(const BigRational& value);

// Double approximation of a rational, truncated toward zero.
double to_double(const BigRational& value);

/// Natural logarithm of a positive integer of any size.
double log_bigint(const BigInt& value);

/// Parses "p/q", "p" or a finite decimal such as "0.25" into an exact rational.
BigRational parse_rational(const std::string& text);

}  // namespace ekrlab
