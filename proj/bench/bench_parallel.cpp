// Copyright 2026 The Authors.
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

// Serial vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "noneven/digraph.hpp"
#include "noneven/r10.hpp"

namespace {

using noneven::Execution;

void BM_DirectedBonds(benchmark::State& state, Execution exec) {
  const noneven::Digraph d = noneven::build_D(4, int(state.range(0)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(noneven::directed_bonds(d, noneven::kDefaultVertexBound, exec));
  }
}
BENCHMARK_CAPTURE(BM_DirectedBonds, serial, Execution::kSerial)->DenseRange(2, 6, 2);
BENCHMARK_CAPTURE(BM_DirectedBonds, parallel, Execution::kParallel)->DenseRange(2, 6, 2);

void BM_R10Sweep(benchmark::State& state, Execution exec) {
  for (auto _ : state) benchmark::DoNotOptimize(noneven::verify_conjecture_on_r10(exec));
}
BENCHMARK_CAPTURE(BM_R10Sweep, serial, Execution::kSerial)->Unit(benchmark::kSecond)->Iterations(1);
BENCHMARK_CAPTURE(BM_R10Sweep, parallel, Execution::kParallel)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
