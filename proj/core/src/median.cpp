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

#include "cutopt/median.hpp"

#include <chrono>

#include "cutopt/bucketing.hpp"
#include "cutopt/error.hpp"

namespace cutopt {

SolveReport solve_median(const ScoreMatrix& scores) {
  if (scores.n() < 2) {
    throw InvalidInputError("median baseline needs at least two items");
  }
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  report.method = Method::kMedian;
  report.cutoffs = median_cutoffs(scores);
  report.cut_indices = median_cut_indices(build_sorted_index(scores));
  report.histogram = bucket_histogram(scores, report.cutoffs, BucketScheme::kCount);
  report.d = distinguishability(report.histogram);
  report.objective = static_cast<double>(sum_of_squares(report.histogram));
  report.iterations = 0;
  report.evaluations = 0;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cutopt
