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

#include "cutopt/set_function.hpp"

#include <algorithm>
#include <string>

#include "cutopt/error.hpp"

namespace cutopt {

bool ItemSubset::contains(int item) const {
  return std::find(members.begin(), members.end(), item) != members.end();
}

namespace {

void check_members(const ScoreMatrix& scores, const ItemSubset& subset) {
  if (subset.members.empty()) {
    throw InvalidInputError("item subset must not be empty");
  }
  for (const int i : subset.members) {
    if (i < 1 || i > scores.n()) {
      throw InvalidInputError("item index " + std::to_string(i) + " outside 1.." +
                              std::to_string(scores.n()));
    }
  }
}

}  // namespace

CutoffValues induced_cutoffs(const ScoreMatrix& scores, const ItemSubset& subset) {
  check_members(scores, subset);
  CutoffValues c;
  c.c.resize(scores.m());
  for (int j = 0; j < scores.m(); ++j) {
    double lo = scores.score(subset.members.front() - 1, j);
    for (const int i : subset.members) lo = std::min(lo, scores.score(i - 1, j));
    c.c[j] = lo;
  }
  return c;
}

std::int64_t set_value(const ScoreMatrix& scores, const ItemSubset& subset) {
  return sum_of_squares(
      bucket_histogram(scores, induced_cutoffs(scores, subset), BucketScheme::kCount));
}

ModularityReport check_modularity(const ScoreMatrix& scores, const ItemSubset& a,
                                  const ItemSubset& b, int x) {
  check_members(scores, a);
  check_members(scores, b);
  for (const int i : a.members) {
    if (!b.contains(i)) {
      throw InvalidInputError("A must be a subset of B; item " + std::to_string(i) +
                              " is missing from B");
    }
  }
  if (b.contains(x)) {
    throw InvalidInputError("x must lie outside B");
  }

  const auto with = [](ItemSubset s, int item) {
    s.members.push_back(item);
    return s;
  };

  ModularityReport report;
  report.marginal_a = set_value(scores, with(a, x)) - set_value(scores, a);
  report.marginal_b = set_value(scores, with(b, x)) - set_value(scores, b);
  report.submodular_violated = report.marginal_a < report.marginal_b;
  report.supermodular_violated = report.marginal_a > report.marginal_b;
  return report;
}

}  // namespace cutopt
