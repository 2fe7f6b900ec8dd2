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

#include "cutopt/continuous.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>

#include "cutopt/bucketing.hpp"
#include "cutopt/error.hpp"

namespace cutopt {

double sigma(double x, double c, double r) {
  const double z = r * (x - c);
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double bump(double x, double center, double r) {
  const double s = sigma(x, center, r);
  return 4.0 * s * (1.0 - s);
}

namespace {

void check_arity(const ScoreMatrix& scores, const std::vector<double>& cutoffs) {
  if (static_cast<int>(cutoffs.size()) != scores.m()) {
    throw InvalidInputError("cutoff vector length does not match score count");
  }
}

// Soft crossing counts, one per item.
std::vector<double> soft_counts(const ScoreMatrix& scores, const std::vector<double>& cutoffs,
                                double r) {
  const int n = scores.n();
  const int m = scores.m();
  std::vector<double> c(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) c[i] += sigma(scores.score(i, j), cutoffs[j], r);
  }
  return c;
}

}  // namespace

double smooth_objective(const ScoreMatrix& scores, const std::vector<double>& cutoffs, double r) {
  check_arity(scores, cutoffs);
  const int n = scores.n();
  const int m = scores.m();
  const std::vector<double> c = soft_counts(scores, cutoffs, r);
  double total = 0.0;
  for (int k = 0; k <= m; ++k) {
    double b = 0.0;
    for (int i = 0; i < n; ++i) b += bump(c[i], static_cast<double>(k), r);
    total += b * b;
  }
  return total;
}

std::vector<double> smooth_gradient(const ScoreMatrix& scores, const std::vector<double>& cutoffs,
                                    double r) {
  check_arity(scores, cutoffs);
  const int n = scores.n();
  const int m = scores.m();
  const std::vector<double> c = soft_counts(scores, cutoffs, r);

  std::vector<double> b(m + 1, 0.0);
  for (int k = 0; k <= m; ++k) {
    for (int i = 0; i < n; ++i) b[k] += bump(c[i], static_cast<double>(k), r);
  }

  // dF/dt_j = sum_i w_i * dc_i/dt_j with
  //   w_i = sum_k 2 b_k * d(bump)/dx at (c_i, k)
  //   d(bump)/dx = 4 r s (1 - s) (1 - 2 s),  s = sigma(c_i, k, r)
  //   dc_i/dt_j = -r s_ij (1 - s_ij),        s_ij = sigma(score_ij, t_j, r)
  std::vector<double> w(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) {
      const double s = sigma(c[i], static_cast<double>(k), r);
      w[i] += 2.0 * b[k] * 4.0 * r * s * (1.0 - s) * (1.0 - 2.0 * s);
    }
  }

  std::vector<double> grad(m, 0.0);
  for (int j = 0; j < m; ++j) {
    double g = 0.0;
    for (int i = 0; i < n; ++i) {
      const double sij = sigma(scores.score(i, j), cutoffs[j], r);
      g += w[i] * (-r * sij * (1.0 - sij));
    }
    grad[j] = g;
  }
  return grad;
}

CutIndexVector snap_to_valid(const SortedScoreIndex& idx, const std::vector<double>& cutoffs) {
  if (static_cast<int>(cutoffs.size()) != idx.m()) {
    throw InvalidInputError("cutoff vector length does not match score count");
  }
  const int n = idx.n();
  CutIndexVector snapped;
  snapped.k.reserve(idx.m());
  for (int j = 0; j < idx.m(); ++j) {
    const auto& v = idx.values(j);
    int best_k = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (const int k : valid_cut_indices(idx, j)) {
      if (k == 0 || k == n) continue;  // sentinel cutoffs are infinitely far
      const double mid = (v[k - 1] + v[k]) / 2.0;
      const double dist = std::abs(cutoffs[j] - mid);
      if (dist < best_dist) {
        best_dist = dist;
        best_k = k;
      }
    }
    snapped.k.push_back(best_k);
  }
  return snapped;
}

SolveReport solve_continuous(const ScoreMatrix& scores, const SmoothConfig& config,
                             std::vector<double>* trace) {
  if (scores.n() < 2) {
    throw InvalidInputError("continuous solve needs at least two items");
  }
  if (!(config.r > 0.0) || !(config.shrink > 1.0) || !(config.eps_min < config.eps_init) ||
      config.max_iters < 0) {
    throw InvalidInputError("invalid smoothing configuration");
  }
  const auto start = std::chrono::steady_clock::now();
  const int m = scores.m();
  const double r = config.r;

  const CutoffValues medians = median_cutoffs(scores);
  std::vector<double> x = medians.c;

  std::uint64_t evaluations = 0;
  const auto objective_at = [&](const std::vector<double>& point) {
    ++evaluations;
    const double value = smooth_objective(scores, point, r);
    if (!std::isfinite(value)) throw NumericError("smoothed objective is not finite");
    return value;
  };

  double fx = objective_at(x);
  if (trace) trace->push_back(fx);

  std::int64_t iterations = 0;
  while (iterations < config.max_iters) {
    const std::vector<double> g = smooth_gradient(scores, x, r);
    double gmax = 0.0;
    for (const double gj : g) {
      if (!std::isfinite(gj)) throw NumericError("smoothed gradient is not finite");
      gmax = std::max(gmax, std::abs(gj));
    }
    if (gmax < config.grad_tol) break;

    double eps = config.eps_init;
    bool accepted = false;
    std::vector<double> candidate(m);
    while (true) {
      for (int j = 0; j < m; ++j) candidate[j] = x[j] - eps * g[j];
      const double fc = objective_at(candidate);
      if (fc < fx) {
        x = candidate;
        fx = fc;
        accepted = true;
        break;
      }
      eps /= config.shrink;
      if (eps < config.eps_min) break;
    }
    if (!accepted) break;
    ++iterations;
    if (trace) trace->push_back(fx);
  }

  const SortedScoreIndex idx = build_sorted_index(scores);
  const CutIndexVector snapped = snap_to_valid(idx, x);

  SolveReport report;
  report.method = Method::kContinuous;
  report.cutoffs = realize_cutoffs(snapped, idx);
  report.histogram = bucket_histogram(scores, report.cutoffs, BucketScheme::kCount);
  report.d = distinguishability(report.histogram);
  report.objective = static_cast<double>(sum_of_squares(report.histogram));
  report.iterations = iterations;
  report.evaluations = evaluations;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cutopt
