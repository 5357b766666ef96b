// Copyright 2026 The maxlab Authors
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

#include "maxlab/generators.h"
#include "maxlab/maximal.h"
#include "maxlab/theorem_lab.h"

namespace {

using namespace maxlab;

void BM_EnumerateBalls(benchmark::State& state) {
  const auto s = gen_taxicab(static_cast<std::size_t>(state.range(0)), 2, 20, 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_balls(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateBalls)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_MaximalField(benchmark::State& state) {
  const auto s = gen_graph_metric(static_cast<std::size_t>(state.range(0)), 0.2,
                                  {Rational(1), Rational(6)}, 2);
  const auto family = enumerate_balls(s);
  const auto mu = gen_measure(s, 2);
  const auto f = gen_function(s, 2);
  const MaximalEvaluator eval(family, mu);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_field(f, eval));
}
BENCHMARK(BM_MaximalField)->RangeMultiplier(2)->Range(8, 64);

void BM_CoincidenceExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = gen_ultrametric(n, 3);
  const auto mu = gen_measure(s, 3);
  for (auto _ : state) benchmark::DoNotOptimize(coincidence_exact(s, mu));
}
BENCHMARK(BM_CoincidenceExact)->DenseRange(4, 12, 4);

void BM_CoincidenceRandomized(benchmark::State& state) {
  const auto s = gen_ultrametric(10, 4);
  const auto mu = gen_measure(s, 4);
  for (auto _ : state) benchmark::DoNotOptimize(coincidence_randomized(s, mu, 100, 4));
}
BENCHMARK(BM_CoincidenceRandomized);

void BM_GridDemo(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build_grid_demo(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GridDemo)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
