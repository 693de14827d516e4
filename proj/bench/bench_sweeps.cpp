// Copyright 2026 The qswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qswitch/oracle.hpp"
#include "qswitch/surface.hpp"

namespace {

using qswitch::Execution;

void BM_Surface(benchmark::State& state, Execution exec) {
  const qswitch::GridSpec grid{static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) {
    auto pts = qswitch::evaluate_surface(qswitch::SurfaceQuantity::Uncertainty, grid, exec);
    benchmark::DoNotOptimize(pts.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_Slice(benchmark::State& state, Execution exec) {
  for (auto _ : state) {
    auto pts = qswitch::evaluate_diagonal_slice(static_cast<std::size_t>(state.range(0)), exec);
    benchmark::DoNotOptimize(pts.data());
  }
}

void BM_Verify(benchmark::State& state, Execution exec) {
  qswitch::oracle::VerifyOptions options;
  options.exec = exec;
  const qswitch::GridSpec grid{static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) {
    auto report = qswitch::oracle::verify_all(grid, options);
    benchmark::DoNotOptimize(report.checks.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Surface, serial, Execution::Serial)->Arg(101)->Arg(401);
BENCHMARK_CAPTURE(BM_Surface, parallel, Execution::Parallel)->Arg(101)->Arg(401);
BENCHMARK_CAPTURE(BM_Slice, serial, Execution::Serial)->Arg(1001);
BENCHMARK_CAPTURE(BM_Slice, parallel, Execution::Parallel)->Arg(1001);
BENCHMARK_CAPTURE(BM_Verify, serial, Execution::Serial)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, parallel, Execution::Parallel)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
