// Copyright 2026 The Cutopt Authors
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

#include "cutopt/bucketing.hpp"
#include "cutopt/continuous.hpp"
#include "cutopt/demo_data.hpp"
#include "cutopt/greedy.hpp"
#include "cutopt/grid_search.hpp"
#include "cutopt/instance_gen.hpp"
#include "cutopt/median.hpp"

namespace {

using namespace cutopt;

ScoreMatrix sized_instance(int n, int m) {
  InstanceSpec spec;
  spec.n = n;
  spec.m = m;
  spec.seed = instance_seed(7, 0);
  return generate_instance(spec);
}

void BM_BucketHistogram(benchmark::State& state) {
  const ScoreMatrix scores = sized_instance(static_cast<int>(state.range(0)), 3);
  const CutoffValues cutoffs = median_cutoffs(scores);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bucket_histogram(scores, cutoffs, BucketScheme::kCount));
  }
}
BENCHMARK(BM_BucketHistogram)->Arg(100)->Arg(1000);

void BM_ExactCount(benchmark::State& state) {
  const ScoreMatrix scores = sized_instance(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_exact_count(scores));
  }
}
BENCHMARK(BM_ExactCount)->Arg(30)->Arg(100)->Arg(300);

void BM_ExactCountDemo(benchmark::State& state) {
  const ScoreMatrix scores = demo_table1();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_exact_count(scores));
  }
}
BENCHMARK(BM_ExactCountDemo);

void BM_MinRangeDemo(benchmark::State& state) {
  const ScoreMatrix scores = demo_table1();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_min_range(scores));
  }
}
BENCHMARK(BM_MinRangeDemo);

void BM_GreedyDemo(benchmark::State& state) {
  const ScoreMatrix scores = demo_table1();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_greedy(scores));
  }
}
BENCHMARK(BM_GreedyDemo);

void BM_ContinuousDemo(benchmark::State& state) {
  const ScoreMatrix scores = demo_table1();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_continuous(scores));
  }
}
BENCHMARK(BM_ContinuousDemo);

void BM_GenerateInstance(benchmark::State& state) {
  InstanceSpec spec;
  spec.n = static_cast<int>(state.range(0));
  spec.m = 3;
  spec.seed = 11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_instance(spec));
  }
}
BENCHMARK(BM_GenerateInstance)->Arg(100)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
