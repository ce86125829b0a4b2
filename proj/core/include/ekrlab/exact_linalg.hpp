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
#include <vector>

#include "ekrlab/numeric.hpp"

namespace ekrlab {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Columns of a maximal independent column set, chosen greedily left to
/// right by Bareiss elimination. Their count is the rank.
std::vector<std::size_t> pivot_columns(IntMatrix m);

/// For a nonsingular square matrix m: an integer matrix adj and a nonzero
/// scale with m * adj = scale * I (scale is +-det m). Computed by
/// fraction-free Gauss-Jordan, so no intermediate rationals appear.
struct FractionFreeInverse {
  IntMatrix adj;
  BigInt scale;
};
FractionFreeInverse fraction_free_inverse(IntMatrix m);

/// Integer basis of the right null space of m (one row per basis vector).
IntMatrix integer_nullspace(const IntMatrix& m);

}  // namespace ekrlab
