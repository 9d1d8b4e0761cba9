// Copyright 2026 The georoute Authors
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

#include "georoute/adversary.hpp"
#include "georoute/analysis.hpp"
#include "georoute/constructions.hpp"
#include "georoute/delaunay.hpp"
#include "georoute/markov.hpp"

namespace {

using namespace georoute;

// Exact Random-Compass routing time on the trap, k doubles the state count.
void BM_TrapExact(benchmark::State& state) {
  const auto trap = build_bad_unbiased(static_cast<std::size_t>(state.range(0)), 4);
  const RandomCompassStrategy rc;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_routing_time(trap.graph, rc, trap.source, trap.target));
  }
  state.counters["vertices"] = static_cast<double>(trap.graph.vertex_count());
}
BENCHMARK(BM_TrapExact)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_TrapBuild(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_bad_unbiased(static_cast<std::size_t>(state.range(0)), 4));
  }
}
BENCHMARK(BM_TrapBuild)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BirthDeathClosedForm(benchmark::State& state) {
  const auto c = BirthDeathChain::standard(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hitting_time(c, 1, c.size()));
}
BENCHMARK(BM_BirthDeathClosedForm)->Arg(50)->Arg(500);

void BM_BirthDeathSolver(benchmark::State& state) {
  const auto g = to_generic(BirthDeathChain::standard(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_hitting_times(g, g.size() - 1));
}
BENCHMARK(BM_BirthDeathSolver)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Delaunay(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_delaunay(static_cast<std::size_t>(state.range(0)), seed++));
  }
}
BENCHMARK(BM_Delaunay)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_GreedyCompassDelaunay(benchmark::State& state) {
  const auto g = random_delaunay(static_cast<std::size_t>(state.range(0)), 7);
  const GreedyCompassStrategy s;
  for (auto _ : state) benchmark::DoNotOptimize(induced_chain(g, s, 0));
}
BENCHMARK(BM_GreedyCompassDelaunay)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_Adversary(benchmark::State& state) {
  const RandomCompassStrategy rc;
  for (auto _ : state) {
    benchmark::DoNotOptimize(adversary(rc, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_Adversary)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_TrapMonteCarlo(benchmark::State& state) {
  const auto trap = build_bad_unbiased(6, 4);
  const RandomCompassStrategy rc;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        monte_carlo_walk(trap.graph, rc, trap.source, trap.target, 200, 1'000'000, 1));
  }
}
BENCHMARK(BM_TrapMonteCarlo)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
