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
#include <cstdint>
#include <vector>

#include "ekrlab/philox.hpp"
#include "ekrlab/vertex_set.hpp"

namespace ekrlab {

/// Sequential uniform stream for sampling test sets. Stream s under seed k
/// reads Philox blocks at counters (s, tag, block); the tag word keeps these
/// counters apart from the per-edge coins of the threshold simulator.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t stream);

  double uniform();
  /// Uniform integer in [0, bound). bound > 0.
  std::size_t below(std::size_t bound);

 private:
  PhiloxKey key_;
  std::uint64_t stream_;
  std::uint32_t block_ = 0;
  PhiloxCounter buffer_{};
  int used_ = 4;
};

/// Random subset of {0, ..., universe-1}: a density is drawn first, then
/// each element is kept with that probability, so sizes spread over the range.
VertexSet random_subset(std::size_t universe, SampleStream& stream);

/// k distinct elements of pool, chosen uniformly (partial Fisher-Yates).
std::vector<std::size_t> random_choice(std::vector<std::size_t> pool, std::size_t k,
                                       SampleStream& stream);

}  // namespace ekrlab
