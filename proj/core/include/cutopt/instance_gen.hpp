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

#include "cutopt/score_matrix.hpp"

namespace cutopt {

struct InstanceSpec {
  int n = 100;
  int m = 3;
  std::uint64_t seed = 0;
  double scale = 100.0;
};

/// One round of the splitmix64 mixer; the basis of the seeding scheme.
std::uint64_t splitmix64(std::uint64_t z);

/// Derives the seed of the index-th instance of an ensemble from its base
/// seed. Distinct (base, index) pairs give independent streams.
std::uint64_t instance_seed(std::uint64_t base_seed, std::uint64_t index);

/// Draws n correlated Gaussian score rows: a random m-by-m covariance G^T G
/// from standard-normal G, samples via its lower Cholesky factor, scales,
/// and rounds half away from zero. Fully pinned (mt19937_64 + Box-Muller),
/// so one seed gives one matrix on every platform. If covariance_out is
/// given it receives the m*m covariance actually used, row-major.
ScoreMatrix generate_instance(const InstanceSpec& spec,
                              std::vector<double>* covariance_out = nullptr);

}  // namespace cutopt
