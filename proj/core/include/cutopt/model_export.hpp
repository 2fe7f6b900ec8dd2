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

#include <string>

#include "cutopt/score_matrix.hpp"

namespace cutopt {

/// LP-format integer quadratic model whose feasible points are exactly the
/// valid cut-index vectors and whose objective is the sum of squared bucket
/// counts. Variables: binary x_i_j (item i crosses cutoff j), binary y_i_k
/// (item i sits in bucket k), continuous t_k (bucket counts). Constraint
/// rows: mono_j_r (crossing is monotone along each column's sort order),
/// tie_j_r (tied scores cross together), link_i (bucket index equals the
/// crossing count), assign_i (one bucket per item), colsum_k (t_k totals
/// bucket k). Output is deterministic, UTF-8, LF line endings.
std::string export_iqp(const ScoreMatrix& scores);

/// Same constraint system with the objective replaced by the histogram range:
/// minimize s - t subject to lo_k/hi_k rows keeping every t_k between t and s.
std::string export_ilp(const ScoreMatrix& scores);

}  // namespace cutopt
