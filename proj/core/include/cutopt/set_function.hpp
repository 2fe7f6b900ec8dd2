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

#include "cutopt/bucketing.hpp"
#include "cutopt/score_matrix.hpp"

namespace cutopt {

/// Subset of items, addressed by 1-based row numbers.
struct ItemSubset {
  std::vector<int> members;

  bool contains(int item) const;
};

/// Componentwise minima of the subset's scores, used as value-based cutoffs.
/// With crossing defined as score >= cutoff, every member of the subset lands
/// in the top bucket.
CutoffValues induced_cutoffs(const ScoreMatrix& scores, const ItemSubset& subset);

/// Sum of squared count-bucket sizes under the subset's induced cutoffs.
std::int64_t set_value(const ScoreMatrix& scores, const ItemSubset& subset);

struct ModularityReport {
  std::int64_t marginal_a = 0;  // f(A + x) - f(A)
  std::int64_t marginal_b = 0;  // f(B + x) - f(B)
  bool submodular_violated = false;    // marginal_a < marginal_b
  bool supermodular_violated = false;  // marginal_a > marginal_b
};

/// Marginal gains of adding item x to the nested subsets A and B. Requires
/// A to be a subset of B and x to be outside B. A submodular function would
/// have marginal_a >= marginal_b; a supermodular one the reverse.
ModularityReport check_modularity(const ScoreMatrix& scores, const ItemSubset& a,
                                  const ItemSubset& b, int x);

}  // namespace cutopt
