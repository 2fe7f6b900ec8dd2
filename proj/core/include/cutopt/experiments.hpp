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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutopt/instance_gen.hpp"
#include "cutopt/score_matrix.hpp"
#include "cutopt/solve_report.hpp"

namespace cutopt {

struct BenchmarkConfig {
  int instances = 100;
  InstanceSpec spec{};  // per-instance shape; its seed field is ignored
  std::vector<Method> methods = {Method::kMedian, Method::kGreedy, Method::kMinRange,
                                 Method::kContinuous, Method::kExactCount};
  std::uint64_t base_seed = 1;
  int jobs = 1;
  double r = 5.0;  // sharpness handed to the continuous method
  std::uint64_t budget = 1'000'000'000;
};

struct InstanceRow {
  int instance_index = 0;
  std::uint64_t seed = 0;
  Method method = Method::kMedian;
  double d = 0.0;
  double objective = 0.0;
  double ratio = 0.0;  // d divided by the exact optimum's d
  double elapsed_ms = 0.0;
  CutoffValues cutoffs;
};

struct RatioStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
  int count = 0;
};

struct BenchmarkSummary {
  // One entry per method in canonical order (median, greedy, min_range,
  // continuous, exact_count, exact_subset), restricted to the ones run.
  std::vector<std::pair<Method, RatioStats>> method_stats;
  // min_range wall time over exact_count wall time, when both ran.
  std::optional<RatioStats> time_ratio;
  std::vector<InstanceRow> rows;  // ordered by instance, then method
  int instances_requested = 0;
  int instances_excluded = 0;
  std::vector<std::pair<int, std::string>> exclusions;  // index, reason
};

/// Linear-interpolation quantile of an unsorted sample, q in [0, 1].
double quantile(std::vector<double> values, double q);

/// Runs the requested methods on one score matrix. exact_count always runs
/// (every ratio divides by its d). Rows come back in canonical method order
/// with instance_index and seed left at zero.
std::vector<InstanceRow> evaluate_methods(const ScoreMatrix& scores,
                                          const std::vector<Method>& methods, double r,
                                          std::uint64_t budget);

/// Generates config.instances matrices from (base_seed, index) streams, runs
/// every method on each, and aggregates ratio statistics. An instance that
/// trips a solver capacity error is excluded from the aggregates and listed
/// in `exclusions`. Deterministic apart from elapsed times; `jobs` > 1 only
/// changes how instances are spread over threads, never the results.
BenchmarkSummary run_benchmark(const BenchmarkConfig& config);

/// One statistics row per method plus a time_ratio row:
/// method,min,q1,median,q3,max,mean,n_instances,n_excluded.
std::string emit_summary_csv(const BenchmarkSummary& summary);

/// Per-instance detail rows:
/// instance_index,seed,method,d,objective,cutoffs,elapsed_ms
/// with cutoffs as a quoted JSON array.
std::string emit_instances_csv(const BenchmarkSummary& summary);

}  // namespace cutopt
