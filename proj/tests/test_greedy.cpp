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

#include "cutopt/greedy.hpp"

#include <cstdint>
#include <random>
#include <vector>

#include "cutopt/bucketing.hpp"
#include "cutopt/demo_data.hpp"
#include "cutopt/error.hpp"
#include "cutopt/grid_search.hpp"
#include "cutopt/median.hpp"
#include "doctest.h"
#include "naive_oracle.hpp"

namespace cutopt {
namespace {

TEST_CASE("best-improvement sweep finds the demo optimum") {
  const SolveReport r = solve_greedy(demo_table1(), GreedyMode::kBestImprovement);
  CHECK(r.method == Method::kGreedy);
  REQUIRE(r.cut_indices.has_value());
  CHECK(r.cut_indices->k == std::vector<int>{26, 34, 26});
  CHECK(r.cutoffs.c[0] == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(r.cutoffs.c[1] == doctest::Approx(0.415).epsilon(1e-12));
  CHECK(r.cutoffs.c[2] == doctest::Approx(-0.015).epsilon(1e-12));
  CHECK(r.histogram.counts == std::vector<std::int64_t>{13, 15, 17, 5});
  CHECK(r.objective == 708.0);
  CHECK(r.d == 0.7314285714285714);
  CHECK(r.iterations == 4);
  CHECK(r.evaluations > 0);
}

TEST_CASE("first-improvement reaches the same point in fewer sweeps") {
  const SolveReport r = solve_greedy(demo_table1(), GreedyMode::kFirstImprovement);
  CHECK(r.cut_indices->k == std::vector<int>{26, 34, 26});
  CHECK(r.objective == 708.0);
  CHECK(r.iterations == 2);
}

TEST_CASE("greedy runs are deterministic") {
  const ScoreMatrix s = demo_table1();
  for (const GreedyMode mode : {GreedyMode::kBestImprovement, GreedyMode::kFirstImprovement}) {
    const SolveReport a = solve_greedy(s, mode);
    const SolveReport b = solve_greedy(s, mode);
    CHECK(a.cut_indices->k == b.cut_indices->k);
    CHECK(a.objective == b.objective);
    CHECK(a.iterations == b.iterations);
    CHECK(a.evaluations == b.evaluations);
  }
}

TEST_CASE("greedy never does worse than its median start") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const ScoreMatrix s = testing::random_small_matrix(rng);
    const SolveReport median = solve_median(s);
    for (const GreedyMode mode : {GreedyMode::kBestImprovement, GreedyMode::kFirstImprovement}) {
      const SolveReport r = solve_greedy(s, mode);
      CHECK(r.objective <= median.objective);
      CHECK(r.d >= median.d);
    }
  }
}

TEST_CASE("greedy is bounded by the exact optimum") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const ScoreMatrix s = testing::random_small_matrix(rng);
    const SolveReport exact = solve_exact_count(s);
    const SolveReport r = solve_greedy(s);
    CHECK(r.d <= exact.d);
    CHECK(r.objective >= exact.objective);
  }
}

TEST_CASE("greedy stops at a single-move local optimum") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const ScoreMatrix s = testing::random_small_matrix(rng);
    const SortedScoreIndex idx(s);
    for (const GreedyMode mode : {GreedyMode::kBestImprovement, GreedyMode::kFirstImprovement}) {
      const SolveReport r = solve_greedy(s, mode);
      const std::int64_t final_sumsq = static_cast<std::int64_t>(r.objective);
      CutIndexVector probe = *r.cut_indices;
      for (int j = 0; j < s.m(); ++j) {
        const int keep = probe.k[j];
        for (const int k : valid_cut_indices(idx, j)) {
          if (k == keep) continue;
          probe.k[j] = k;
          const auto counts = testing::naive_count_histogram(s, realize_cutoffs(probe, idx).c);
          CHECK(testing::naive_sumsq(counts) >= final_sumsq);
        }
        probe.k[j] = keep;
      }
    }
  }
}

TEST_CASE("greedy needs at least two items") {
  CHECK_THROWS_AS(solve_greedy(ScoreMatrix::from_rows({{1.0}})), InvalidInputError);
}

}  // namespace
}  // namespace cutopt
