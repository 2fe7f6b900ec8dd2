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

#include <vector>

#include "cutopt/score_matrix.hpp"
#include "cutopt/solve_report.hpp"

namespace cutopt {

struct SmoothConfig {
  double r = 5.0;          // logistic sharpness
  double eps_init = 1.0;   // initial step size
  double shrink = 1.1;     // step divisor while the step does not descend
  double grad_tol = 1e-8;  // stop when the gradient infinity norm drops below
  double eps_min = 1e-12;  // stop when the step size shrinks below
  int max_iters = 10000;
};

/// Logistic crossing indicator 1 / (1 + exp(-r (x - c))), evaluated without
/// overflow for any argument magnitude.
double sigma(double x, double c, double r);

/// Bump 4 s (1 - s) with s = sigma(x, center, r); peaks at exactly 1 when
/// x equals the center and decays like 4 exp(-r |x - center|).
double bump(double x, double center, double r);

/// Smoothed stand-in for the sum of squared bucket counts: each item gets a
/// soft crossing count sum_j sigma(score, cutoff_j), each integer bucket
/// 0..m gets a soft count via the bump, and the result is the sum of the
/// squared soft counts.
double smooth_objective(const ScoreMatrix& scores, const std::vector<double>& cutoffs, double r);

/// Analytic gradient of smooth_objective with respect to the cutoffs.
std::vector<double> smooth_gradient(const ScoreMatrix& scores,
                                    const std::vector<double>& cutoffs, double r);

/// Valid cut index per column whose realized cutoff lies nearest the given
/// value (sentinels count as infinitely far; ties go to the smaller index).
CutIndexVector snap_to_valid(const SortedScoreIndex& idx, const std::vector<double>& cutoffs);

/// Gradient descent on the smoothed objective with a backtracking step: each
/// iteration starts the step at eps_init and divides it by `shrink` until the
/// move strictly decreases the objective, giving up below eps_min. Starts
/// from the column medians. The final point is snapped per column to the
/// valid cut index whose realized cutoff is nearest by value (ties toward
/// the smaller index), and the reported histogram, distinguishability, and
/// objective (the exact sum of squared counts) are recomputed from the
/// snapped cutoffs. If `trace` is given it receives the accepted objective
/// values, starting value included.
SolveReport solve_continuous(const ScoreMatrix& scores, const SmoothConfig& config = {},
                             std::vector<double>* trace = nullptr);

}  // namespace cutopt
