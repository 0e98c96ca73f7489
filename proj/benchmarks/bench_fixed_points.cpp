// Copyright 2026 The qautomata Authors
//
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

#include "qautomata/enclosures.hpp"
#include "qautomata/fixed_points.hpp"
#include "qautomata/random.hpp"

namespace {

using qautomata::Index;
using qautomata::KrausChannel;

// Structured channels have a nontrivial fixed space, which is the
// interesting case for the decomposition.
KrausChannel structured(Index dim) {
  qautomata::Rng rng(1234 + static_cast<std::uint64_t>(dim));
  return qautomata::random_structured_channel(qautomata::random_structure(dim, rng), rng);
}

void BM_FixSpace(benchmark::State& state) {
  const KrausChannel ch = structured(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qautomata::fix_space(ch));
}

void BM_CesaroLimit(benchmark::State& state) {
  const KrausChannel ch = structured(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qautomata::cesaro_limit(ch));
}

void BM_Decomposition(benchmark::State& state) {
  const KrausChannel ch = structured(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qautomata::minimal_enclosure_decomposition(ch, 7));
  }
}

void BM_FixSpaceGeneric(benchmark::State& state) {
  const KrausChannel ch = qautomata::random_channel(state.range(0), 2, 99);
  for (auto _ : state) benchmark::DoNotOptimize(qautomata::fix_space(ch));
}

}  // namespace

BENCHMARK(BM_FixSpace)->DenseRange(2, 8);
BENCHMARK(BM_CesaroLimit)->DenseRange(2, 8);
BENCHMARK(BM_Decomposition)->DenseRange(2, 8);
BENCHMARK(BM_FixSpaceGeneric)->DenseRange(2, 8);

BENCHMARK_MAIN();
