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


#include <benchmark/benchmark.h>

#include <cstdint>

#include "ekrlab/characters.hpp"
#include "ekrlab/dense_graph.hpp"
#include "ekrlab/graph_oracle.hpp"
#include "ekrlab/mis_solver.hpp"
#include "ekrlab/spectral.hpp"
#include "ekrlab/threshold.hpp"

namespace {

using namespace ekrlab;

Family family_arg(std::int64_t code) { return code == 0 ? Family::kPermutation : Family::kMatching; }

void BM_MaxIndependentSet(benchmark::State& state) {
  const FamilyGraph g({family_arg(state.range(0)), static_cast<int>(state.range(1))});
  const DenseGraph dense = materialize(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_independent_set(dense).size);
  }
  state.SetLabel(family_name(g.family().kind) + std::to_string(state.range(1)));
}
BENCHMARK(BM_MaxIndependentSet)->Args({0, 4})->Args({0, 5})->Args({1, 4})->Unit(benchmark::kMillisecond);

void BM_EnumerateMaximumSets(benchmark::State& state) {
  const FamilyGraph g({family_arg(state.range(0)), static_cast<int>(state.range(1))});
  const DenseGraph dense = materialize(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_maximum_independent_sets(dense).size());
  }
}
BENCHMARK(BM_EnumerateMaximumSets)->Args({0, 5})->Args({1, 4})->Unit(benchmark::kMillisecond);

void BM_CharacterSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(character_spectrum(n).entries.size());
  }
}
BENCHMARK(BM_CharacterSpectrum)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_DenseSpectrum(benchmark::State& state) {
  const FamilyGraph g({Family::kPermutation, static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(dense_spectrum(g).raw.size());
  }
}
BENCHMARK(BM_DenseSpectrum)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_SuperstarScan(benchmark::State& state) {
  const FamilyGraph g({family_arg(state.range(0)), static_cast<int>(state.range(1))});
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(superstar_scan(g, 0.5, 1, trial++));
  }
}
BENCHMARK(BM_SuperstarScan)->Args({0, 5})->Args({1, 5});

void BM_TrialAlpha(benchmark::State& state) {
  const FamilyGraph g({Family::kMatching, 4});
  const double p = static_cast<double>(state.range(0)) / 100.0;
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trial_alpha(g, p, 1, trial++).alpha);
  }
}
BENCHMARK(BM_TrialAlpha)->Arg(40)->Arg(70)->Arg(95)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
