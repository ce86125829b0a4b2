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

#include "ekrlab/sampling.hpp"

#include <stdexcept>
#include <utility>

namespace ekrlab {

namespace {
constexpr std::uint32_t kSampleTag = 0x53414d50;  // "SAMP"
}  // namespace

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      stream_(stream) {}

double SampleStream::uniform() {
  if (used_ >= 4) {
    buffer_ = philox4x32_10({static_cast<std::uint32_t>(stream_),
                             static_cast<std::uint32_t>(stream_ >> 32), kSampleTag, block_++},
                            key_);
    used_ = 0;
  }
  const PhiloxCounter pair{buffer_[static_cast<std::size_t>(used_)],
                           buffer_[static_cast<std::size_t>(used_ + 1)], 0, 0};
  used_ += 2;
  return philox_uniform(pair);
}

std::size_t SampleStream::below(std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("SampleStream::below: bound must be positive");
  const auto value = static_cast<std::size_t>(uniform() * static_cast<double>(bound));
  return value < bound ? value : bound - 1;
}

VertexSet random_subset(std::size_t universe, SampleStream& stream) {
  VertexSet s(universe);
  const double density = stream.uniform();
  for (std::size_t v = 0; v < universe; ++v) {
    if (stream.uniform() < density) s.insert(v);
  }
  return s;
}

std::vector<std::size_t> random_choice(std::vector<std::size_t> pool, std::size_t k,
                                       SampleStream& stream) {
  if (k > pool.size()) throw std::invalid_argument("random_choice: k exceeds pool size");
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + stream.below(pool.size() - i)]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace ekrlab
