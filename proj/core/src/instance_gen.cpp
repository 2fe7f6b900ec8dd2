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

#include "cutopt/instance_gen.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "cutopt/error.hpp"

namespace cutopt {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t instance_seed(std::uint64_t base_seed, std::uint64_t index) {
  return splitmix64(base_seed ^ splitmix64(index));
}

namespace {

// Standard normals via Box-Muller over explicit 53-bit uniforms, so the
// stream depends only on the mt19937_64 output sequence.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : eng_(seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = ((eng_() >> 11) + 1) * 0x1.0p-53;  // in (0, 1]
    const double u2 = (eng_() >> 11) * 0x1.0p-53;        // in [0, 1)
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// In-place lower Cholesky factor; false when a pivot degenerates.
bool cholesky_lower(const std::vector<double>& a, int m, std::vector<double>& lower) {
  lower.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = a[i * m + j];
      for (int k = 0; k < j; ++k) sum -= lower[i * m + k] * lower[j * m + k];
      if (i == j) {
        if (!(sum > 1e-12)) return false;
        lower[i * m + i] = std::sqrt(sum);
      } else {
        lower[i * m + j] = sum / lower[j * m + j];
      }
    }
  }
  return true;
}

}  // namespace

ScoreMatrix generate_instance(const InstanceSpec& spec, std::vector<double>* covariance_out) {
  if (spec.n < 2 || spec.m < 1 || !(spec.scale > 0.0)) {
    throw InvalidInputError("instance spec needs n >= 2, m >= 1, scale > 0");
  }
  const int n = spec.n;
  const int m = spec.m;
  NormalStream stream(spec.seed);

  std::vector<double> g(static_cast<std::size_t>(m) * m);
  std::vector<double> covariance(static_cast<std::size_t>(m) * m);
  std::vector<double> lower;
  bool ok = false;
  for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
    for (double& e : g) e = stream.next();
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        double s = 0.0;
        for (int r = 0; r < m; ++r) s += g[r * m + i] * g[r * m + j];
        covariance[i * m + j] = s;
      }
    }
    ok = cholesky_lower(covariance, m, lower);
  }
  if (!ok) throw NumericError("covariance draw stayed numerically singular");
  if (covariance_out) *covariance_out = covariance;

  std::vector<std::vector<double>> rows(n, std::vector<double>(m));
  std::vector<double> z(m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) z[j] = stream.next();
    for (int j = 0; j < m; ++j) {
      double x = 0.0;
      for (int k = 0; k <= j; ++k) x += lower[j * m + k] * z[k];
      rows[i][j] = std::round(x * spec.scale);
    }
  }
  return ScoreMatrix::from_rows(std::move(rows));
}

}  // namespace cutopt
