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

#include "cutopt/bucketing.hpp"

namespace cutopt {

enum class Method {
  kMedian,
  kGreedy,
  kExactCount,
  kExactSubset,
  kMinRange,
  kContinuous,
};

std::string method_name(Method method);

/// Outcome of one solve. `objective` is the sum of squared bucket counts for
/// the quadratic methods (median, greedy, exact), max-min for the range
/// surrogate, and the exact sum of squares of the snapped solution for the
/// continuous method. `cut_indices` is absent for value-based cut-offs that
/// have no index form (the continuous solver reports its snapped values
/// without one). Everything except `elapsed_ms` is deterministic.
struct SolveReport {
  Method method = Method::kMedian;
  std::optional<CutIndexVector> cut_indices;
  CutoffValues cutoffs;
  BucketHistogram histogram;
  double d = 0.0;
  double objective = 0.0;
  std::int64_t iterations = 0;
  std::int64_t evaluations = 0;
  double elapsed_ms = 0.0;
};

}  // namespace cutopt
