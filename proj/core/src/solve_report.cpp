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

#include "cutopt/solve_report.hpp"

namespace cutopt {

std::string method_name(Method method) {
  switch (method) {
    case Method::kMedian: return "median";
    case Method::kGreedy: return "greedy";
    case Method::kExactCount: return "exact_count";
    case Method::kExactSubset: return "exact_subset";
    case Method::kMinRange: return "min_range";
    case Method::kContinuous: return "continuous";
  }
  return "unknown";
}

}  // namespace cutopt
