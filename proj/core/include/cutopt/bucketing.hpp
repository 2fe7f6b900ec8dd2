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
#include <vector>

#include "cutopt/score_matrix.hpp"

namespace cutopt {

/// Discrete cut-off positions, one per score column.
///
/// k[j] in {0..n} is the number of sorted items sitting below the cut for
/// column j: the items at sorted ranks k[j]+1..n cross it. k[j] = 0 means
/// every item crosses (cut-off -inf), k[j] = n means none does (+inf).
/// A vector is valid when no entry splits a group of equal values.
struct CutIndexVector {
  std::vector<int> k;

  bool operator==(const CutIndexVector&) const = default;
};

/// Realized per-score cut-off values. Entries are finite midpoints or the
/// +/-infinity sentinels; an item crosses cut-off j when score >= c[j].
struct CutoffValues {
  std::vector<double> c;

  bool operator==(const CutoffValues&) const = default;
};

/// How items are grouped once crossings are known.
enum class BucketScheme {
  kCount,   // bucket = number of cut-offs crossed; m+1 buckets
  kSubset,  // bucket = exact subset of crossed cut-offs; 2^m buckets
};

/// Bucket occupancy counts. counts.size() is m+1 (count scheme) or
/// 2^m (subset scheme); the entries always sum to n.
struct BucketHistogram {
  std::vector<std::int64_t> counts;
  std::int64_t n = 0;

  bool operator==(const BucketHistogram&) const = default;
};

/// All cut indices for column `col` that do not split a tie group, ascending.
/// Always contains 0 and n; the size is (#distinct values in the column) + 1.
std::vector<int> valid_cut_indices(const SortedScoreIndex& idx, int col);

/// True when k[col] is 0, n, or falls strictly between two distinct values.
bool is_valid_cut_index(const SortedScoreIndex& idx, int col, int k);

/// Turns cut indices into cut-off values: -inf for k=0, +inf for k=n, else
/// the midpoint of the two sorted values either side of the cut. Throws
/// InvalidInputError when the vector splits a tie group.
CutoffValues realize_cutoffs(const CutIndexVector& k, const SortedScoreIndex& idx);

/// Number of cut-offs each item crosses (score >= cut-off).
std::vector<int> crossings(const ScoreMatrix& scores, const CutoffValues& cutoffs);

/// Buckets every item under the given scheme. The subset scheme requires
/// m <= 20 and identifies bucket ids by the bitmask of crossed columns.
BucketHistogram bucket_histogram(const ScoreMatrix& scores, const CutoffValues& cutoffs,
                                 BucketScheme scheme);

/// Sum of squared bucket counts.
std::int64_t sum_of_squares(const BucketHistogram& hist);

/// Fraction of item pairs in different buckets:
/// (n^2 - sum of squared counts) / (n (n - 1)). Requires n >= 2.
double distinguishability(const BucketHistogram& hist);

/// Same metric, counted pair by pair. Serves as the independent route for
/// the histogram identity: it must agree with distinguishability() exactly.
double distinguishability_by_pairs(const ScoreMatrix& scores, const CutoffValues& cutoffs,
                                   BucketScheme scheme);

/// Per-column statistical median (mean of the two central order statistics
/// for even n). These are value-based cut-offs: they may coincide with a
/// score, in which case the >= crossing rule decides.
CutoffValues median_cutoffs(const ScoreMatrix& scores);

/// The valid cut index closest to the median from below: floor(n/2) lowered
/// to the nearest valid index, per column. Buckets identically to the
/// value-based median under >= crossing.
CutIndexVector median_cut_indices(const SortedScoreIndex& idx);

}  // namespace cutopt
