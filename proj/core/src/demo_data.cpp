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

#include "cutopt/demo_data.hpp"

#include <vector>

namespace cutopt {

ScoreMatrix demo_table1() {
  static const double kRows[50][3] = {
    {-1.25, -0.94, -0.53},
    {0.72, 1.10, 0.08},
    {0.67, -0.81, 0.52},
    {-1.36, -2.26, 0.73},
    {0.77, -1.51, -0.57},
    {-0.23, 0.13, 1.30},
    {-0.14, 0.49, 0.06},
    {0.90, -0.07, -0.27},
    {-1.34, 1.82, -0.04},
    {-1.08, 1.08, 0.58},
    {-0.16, 0.09, -0.86},
    {0.21, -0.71, -1.33},
    {0.93, 0.38, -1.31},
    {2.05, 1.06, -1.30},
    {-0.01, 0.28, -0.17},
    {-1.17, 2.32, 1.37},
    {0.38, 0.45, 0.46},
    {0.45, 0.58, 1.28},
    {-0.29, 0.81, 0.88},
    {0.46, -1.14, 0.78},
    {0.65, -0.70, 1.08},
    {-0.88, 0.60, 0.18},
    {2.03, -0.16, 1.61},
    {0.85, -0.74, -1.25},
    {-0.58, -1.22, -0.97},
    {0.58, 0.92, 0.01},
    {-0.55, -0.78, -0.67},
    {-0.70, 0.75, 0.46},
    {0.75, 0.11, 1.78},
    {-0.76, -0.05, 1.06},
    {0.68, -0.58, 0.88},
    {0.15, -1.05, 0.23},
    {-1.07, -0.64, -0.32},
    {1.19, -1.91, -0.41},
    {0.34, -2.33, -0.26},
    {0.46, 1.26, -0.41},
    {0.64, -0.23, 0.13},
    {0.67, 0.30, -1.26},
    {-0.16, 0.25, -0.37},
    {-0.60, -0.19, 0.13},
    {1.22, 0.97, -1.19},
    {0.57, -0.89, 1.62},
    {0.53, -1.22, -0.11},
    {0.17, -0.14, -0.07},
    {1.10, 0.61, 0.31},
    {-1.44, -0.40, -1.13},
    {1.91, 0.00, -1.57},
    {-1.70, -1.14, -0.42},
    {-0.03, 0.85, -0.96},
    {-0.20, 0.22, -0.04}
  };
  std::vector<std::vector<double>> rows;
  rows.reserve(50);
  for (const auto& r : kRows) rows.push_back({r[0], r[1], r[2]});
  return ScoreMatrix::from_rows(std::move(rows));
}

}  // namespace cutopt
