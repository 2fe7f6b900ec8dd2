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

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "cutopt/bucketing.hpp"
#include "cutopt/score_matrix.hpp"
#include "cutopt/solve_report.hpp"

namespace cutopt {

struct GridOptions {
  /// Maximum number of grid points a solve may visit before it refuses with
  /// a CapacityError. The grid has prod_j(#valid indices of column j) points.
  std::uint64_t budget = 1'000'000'000;
};

/// Depth-first enumeration of every valid cut-index combination.
///
/// Columns are processed in natural order with the last column innermost, so
/// index vectors are visited in ascending lexicographic order. Advancing a
/// cut by one valid step re-buckets only the items in the tie group between
/// the two positions; the sum of squared bucket counts is maintained in O(1)
/// per moved item, and backtracking walks the same moves in reverse, so the
/// state is restored exactly.
class GridWalker {
 public:
  GridWalker(const SortedScoreIndex& idx, BucketScheme scheme);

  /// Product of per-column valid-index counts, saturating at uint64 max.
  std::uint64_t leaf_count() const noexcept { return leaf_count_; }

  /// Runs the full enumeration. The visitor is called once per grid point
  /// with the current index vector and the sum of squared bucket counts.
  template <class Visitor>
  void walk(Visitor&& visit) {
    walk_level(0, visit);
  }

  const std::vector<std::int64_t>& counts() const noexcept { return counts_; }
  std::span<const int> current() const noexcept { return cur_k_; }
  std::int64_t sum_squares() const noexcept { return sumsq_; }

  const std::vector<int>& valid_indices(int col) const { return valid_[col]; }

 private:
  template <class Visitor>
  void walk_level(int col, Visitor& visit) {
    if (col == m_) {
      visit(std::span<const int>(cur_k_), sumsq_);
      return;
    }
    const auto& vs = valid_[col];
    for (std::size_t p = 0; p < vs.size(); ++p) {
      if (p > 0) move_cut(col, vs[p - 1], vs[p]);
      cur_k_[col] = vs[p];
      walk_level(col + 1, visit);
    }
    move_cut(col, vs.back(), 0);
    cur_k_[col] = 0;
  }

  // Moves column `col`'s cut from valid index `from` to valid index `to`,
  // re-bucketing the items whose crossing status changes.
  void move_cut(int col, int from, int to);

  void move_item(int item, int new_bucket);

  int n_ = 0;
  int m_ = 0;
  BucketScheme scheme_;
  std::uint64_t leaf_count_ = 1;
  std::vector<std::vector<int>> valid_;
  std::vector<std::vector<int>> order_;  // per column: sorted rank -> item
  std::vector<int> cur_k_;
  std::vector<int> bucket_;  // per item: crossing count or subset id
  std::vector<std::int64_t> counts_;
  std::int64_t sumsq_ = 0;
};

/// Global maximizer of distinguishability under count bucketing, found by
/// exhaustive enumeration of the valid cut-index grid (which provably
/// contains an optimum). Among optima, returns the lexicographically
/// smallest index vector. Requires n >= 2 and a grid within options.budget.
SolveReport solve_exact_count(const ScoreMatrix& scores, const GridOptions& options = {});

/// Same search under subset bucketing (2^m buckets). Requires m <= 12.
SolveReport solve_exact_subset(const ScoreMatrix& scores, const GridOptions& options = {});

/// Minimizes max - min of the count-bucket histogram over the same grid.
/// Ties prefer the smaller sum of squared counts, then the lexicographically
/// smaller index vector. The report's `objective` is the achieved range.
SolveReport solve_min_range(const ScoreMatrix& scores, const GridOptions& options = {});

}  // namespace cutopt
