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

#include "ekrlab/numeric.hpp"

#include <cmath>
#include <sstream>

namespace ekrlab {

namespace {

std::string budget_message(const std::string& budget, std::size_t limit,
                           std::size_t requested) {
  std::ostringstream out;
  out << "budget '" << budget << "' exceeded: requested " << requested
      << ", limit " << limit;
  return out.str();
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::string budget, std::size_t limit,
                               std::size_t requested)
    : std::runtime_error(budget_message(budget, limit, requested)),
      budget_(std::move(budget)),
      limit_(limit),
      requested_(requested) {}

const Budgets& default_budgets() {
  static const Budgets kBudgets;
  return kBudgets;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const BigRational& value) { return value.get_str(); }

double to_double(const BigRational& value) {
  // mpq_get_d truncates toward zero; one ulp is irrelevant to every caller.
  return value.get_d();
}

double log_bigint(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log_bigint: value must be positive");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

BigRational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    BigRational q;
    if (q.set_str(text, 10) != 0) {
      throw std::invalid_argument("not a rational: " + text);
    }
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    return q;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t scale = text.size() - dot - 1;
  if (scale == 0 || digits.empty() || digits == "-" ||
      digits.find_first_not_of("+-0123456789") != std::string::npos ||
      digits.find_first_of("+-", 1) != std::string::npos) {
    throw std::invalid_argument("not a decimal: " + text);
  }
  if (digits[0] == '+') digits.erase(0, 1);
  BigInt num(digits, 10);
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace ekrlab
