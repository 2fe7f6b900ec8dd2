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

#include "cutopt/score_matrix.hpp"
#include "cutopt/solve_report.hpp"

namespace cutopt {

enum class GreedyMode {
  /// Scan a full sweep, then apply the single best move.
  kBestImprovement,
  /// Apply every improving move the moment it is found.
  kFirstImprovement,
};

/// Coordinate-wise local search over valid cut indices. Starts from the
/// per-column cut index nearest the median, then sweeps column by column,
/// trying every valid index with the others fixed, until a sweep brings no
/// improvement. The report's `iterations` is the number of sweeps including
/// the final unsuccessful one; `evaluations` counts candidate objective
/// evaluations. Ties among equally good moves go to the lowest column, then
/// the lowest index.
SolveReport solve_greedy(const ScoreMatrix& scores,
                         GreedyMode mode = GreedyMode::kBestImprovement);

}  // namespace cutopt
