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

#include <chrono>
#include <limits>
#include <tuple>
#include <vector>

#include "cutopt/bucketing.hpp"
#include "cutopt/error.hpp"

namespace cutopt {

namespace {

std::int64_t eval_sumsq(const ScoreMatrix& scores, const SortedScoreIndex& idx,
                        const CutIndexVector& k) {
  const CutoffValues c = realize_cutoffs(k, idx);
  return sum_of_squares(bucket_histogram(scores, c, BucketScheme::kCount));
}

}  // namespace

SolveReport solve_greedy(const ScoreMatrix& scores, GreedyMode mode) {
  if (scores.n() < 2) {
    throw InvalidInputError("greedy search needs at least two items");
  }
  const auto start = std::chrono::steady_clock::now();
  const SortedScoreIndex idx = build_sorted_index(scores);
  const int m = scores.m();

  std::vector<std::vector<int>> valid(m);
  for (int j = 0; j < m; ++j) valid[j] = valid_cut_indices(idx, j);

  CutIndexVector cur = median_cut_indices(idx);
  std::int64_t cur_sumsq = eval_sumsq(scores, idx, cur);

  std::int64_t sweeps = 0;
  std::uint64_t evaluations = 0;
  for (;;) {
    ++sweeps;
    bool improved = false;
    // best move key: (sumsq, column, index), lexicographically smallest wins
    auto best_move = std::tuple(std::numeric_limits<std::int64_t>::max(), 0, 0);
    for (int j = 0; j < m; ++j) {
      for (int k : valid[j]) {
        if (k == cur.k[j]) continue;
        CutIndexVector trial = cur;
        trial.k[j] = k;
        const std::int64_t s = eval_sumsq(scores, idx, trial);
        ++evaluations;
        if (s >= cur_sumsq) continue;
        if (mode == GreedyMode::kFirstImprovement) {
          cur = std::move(trial);
          cur_sumsq = s;
          improved = true;
        } else {
          best_move = std::min(best_move, std::tuple(s, j, k));
        }
      }
    }
    if (mode == GreedyMode::kBestImprovement &&
        std::get<0>(best_move) < cur_sumsq) {
      cur.k[std::get<1>(best_move)] = std::get<2>(best_move);
      cur_sumsq = std::get<0>(best_move);
      improved = true;
    }
    if (!improved) break;
  }

  SolveReport report;
  report.method = Method::kGreedy;
  report.cut_indices = cur;
  report.cutoffs = realize_cutoffs(cur, idx);
  report.histogram = bucket_histogram(scores, report.cutoffs, BucketScheme::kCount);
  report.d = distinguishability(report.histogram);
  report.objective = static_cast<double>(cur_sumsq);
  report.iterations = sweeps;
  report.evaluations = evaluations;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cutopt
