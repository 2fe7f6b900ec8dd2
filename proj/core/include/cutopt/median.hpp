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

/// Baseline that cuts every column at its statistical median. The reported
/// cutoffs are the raw median values (they may coincide with scores, in which
/// case the >= crossing rule decides), while cut_indices carries the nearest
/// valid grid snap, which is also the greedy initializer.
SolveReport solve_median(const ScoreMatrix& scores);

}  // namespace cutopt
