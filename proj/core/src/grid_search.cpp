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

#include "cutopt/grid_search.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "cutopt/error.hpp"

namespace cutopt {

GridWalker::GridWalker(const SortedScoreIndex& idx, BucketScheme scheme)
    : n_(idx.n()), m_(idx.m()), scheme_(scheme) {
  valid_.reserve(m_);
  order_.reserve(m_);
  for (int col = 0; col < m_; ++col) {
    valid_.push_back(valid_cut_indices(idx, col));
    order_.push_back(idx.order(col));
    const std::uint64_t c = valid_.back().size();
    if (leaf_count_ > std::numeric_limits<std::uint64_t>::max() / c) {
      leaf_count_ = std::numeric_limits<std::uint64_t>::max();
    } else {
      leaf_count_ *= c;
    }
  }
  cur_k_.assign(m_, 0);
  const int all = scheme_ == BucketScheme::kCount ? m_ : (1 << m_) - 1;
  bucket_.assign(n_, all);
  counts_.assign(scheme_ == BucketScheme::kCount ? m_ + 1 : 1 << m_, 0);
  counts_[all] = n_;
  sumsq_ = static_cast<std::int64_t>(n_) * n_;
}

void GridWalker::move_cut(int col, int from, int to) {
  const auto& ord = order_[col];
  if (to > from) {
    for (int r = from; r < to; ++r) {
      const int item = ord[r];
      move_item(item, scheme_ == BucketScheme::kCount ? bucket_[item] - 1
                                                      : bucket_[item] & ~(1 << col));
    }
  } else {
    for (int r = to; r < from; ++r) {
      const int item = ord[r];
      move_item(item, scheme_ == BucketScheme::kCount ? bucket_[item] + 1
                                                      : bucket_[item] | (1 << col));
    }
  }
}

void GridWalker::move_item(int item, int new_bucket) {
  const int old = bucket_[item];
  sumsq_ += 1 - 2 * counts_[old];
  --counts_[old];
  sumsq_ += 1 + 2 * counts_[new_bucket];
  ++counts_[new_bucket];
  bucket_[item] = new_bucket;
}

namespace {

struct GridChoice {
  std::vector<int> k;
  std::int64_t sumsq = 0;
};

void check_solvable(const ScoreMatrix& scores) {
  if (scores.n() < 2) {
    throw InvalidInputError("grid solvers need at least two items");
  }
}

void check_budget(const GridWalker& walker, const GridOptions& options) {
  if (walker.leaf_count() > options.budget) {
    throw CapacityError("grid enumeration needs " + std::to_string(walker.leaf_count()) +
                            " evaluations, budget is " + std::to_string(options.budget),
                        walker.leaf_count());
  }
}

SolveReport finish_report(Method method, const ScoreMatrix& scores,
                          const SortedScoreIndex& idx, BucketScheme scheme,
                          std::vector<int> k, double objective,
                          std::uint64_t evaluations, double elapsed_ms) {
  SolveReport report;
  report.method = method;
  report.cut_indices = CutIndexVector{std::move(k)};
  report.cutoffs = realize_cutoffs(*report.cut_indices, idx);
  report.histogram = bucket_histogram(scores, report.cutoffs, scheme);
  report.d = distinguishability(report.histogram);
  report.objective = objective;
  report.iterations = 0;
  report.evaluations = evaluations;
  report.elapsed_ms = elapsed_ms;
  return report;
}

SolveReport solve_grid_min_sumsq(const ScoreMatrix& scores, BucketScheme scheme,
                                 Method method, const GridOptions& options) {
  check_solvable(scores);
  const auto start = std::chrono::steady_clock::now();
  const SortedScoreIndex idx = build_sorted_index(scores);
  GridWalker walker(idx, scheme);
  check_budget(walker, options);

  GridChoice best;
  best.sumsq = std::numeric_limits<std::int64_t>::max();
  walker.walk([&](std::span<const int> k, std::int64_t sumsq) {
    // Lexicographic visit order makes the first strict improvement the
    // lexicographically smallest optimum.
    if (sumsq < best.sumsq) {
      best.sumsq = sumsq;
      best.k.assign(k.begin(), k.end());
    }
  });

  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return finish_report(method, scores, idx, scheme, std::move(best.k),
                       static_cast<double>(best.sumsq), walker.leaf_count(), elapsed_ms);
}

}  // namespace

SolveReport solve_exact_count(const ScoreMatrix& scores, const GridOptions& options) {
  return solve_grid_min_sumsq(scores, BucketScheme::kCount, Method::kExactCount, options);
}

SolveReport solve_exact_subset(const ScoreMatrix& scores, const GridOptions& options) {
  if (scores.m() > 12) {
    throw CapacityError("subset bucketing supports at most 12 score columns, got " +
                            std::to_string(scores.m()),
                        std::uint64_t{1} << scores.m());
  }
  return solve_grid_min_sumsq(scores, BucketScheme::kSubset, Method::kExactSubset, options);
}

SolveReport solve_min_range(const ScoreMatrix& scores, const GridOptions& options) {
  check_solvable(scores);
  const auto start = std::chrono::steady_clock::now();
  const SortedScoreIndex idx = build_sorted_index(scores);
  GridWalker walker(idx, BucketScheme::kCount);
  check_budget(walker, options);

  std::int64_t best_range = std::numeric_limits<std::int64_t>::max();
  GridChoice best;
  best.sumsq = std::numeric_limits<std::int64_t>::max();
  walker.walk([&](std::span<const int> k, std::int64_t sumsq) {
    const auto& counts = walker.counts();
    const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    const std::int64_t range = *hi - *lo;
    if (range < best_range || (range == best_range && sumsq < best.sumsq)) {
      best_range = range;
      best.sumsq = sumsq;
      best.k.assign(k.begin(), k.end());
    }
  });

  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return finish_report(Method::kMinRange, scores, idx, BucketScheme::kCount, std::move(best.k),
                       static_cast<double>(best_range), walker.leaf_count(), elapsed_ms);
}

}  // namespace cutopt
