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

#include "cutopt/score_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cutopt/error.hpp"

namespace cutopt {

ScoreMatrix ScoreMatrix::from_items(std::vector<ScoreItem> items) {
  if (items.empty()) {
    throw InvalidInputError("score matrix needs at least one item");
  }
  const int m = static_cast<int>(items.front().scores.size());
  if (m < 1) {
    throw InvalidInputError("score matrix needs at least one score column");
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& row = items[i].scores;
    if (static_cast<int>(row.size()) != m) {
      throw InvalidInputError("item " + std::to_string(i + 1) + " has " +
                              std::to_string(row.size()) + " scores, expected " +
                              std::to_string(m));
    }
    for (double v : row) {
      if (!std::isfinite(v)) {
        throw InvalidInputError("item " + std::to_string(i + 1) +
                                " has a non-finite score");
      }
    }
  }
  return ScoreMatrix(std::move(items), m);
}

ScoreMatrix ScoreMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  std::vector<ScoreItem> items;
  items.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    items.push_back({std::to_string(i + 1), rows[i]});
  }
  return from_items(std::move(items));
}

bool ScoreMatrix::operator==(const ScoreMatrix& other) const {
  if (m_ != other.m_ || items_.size() != other.items_.size()) return false;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].id != other.items_[i].id) return false;
    if (items_[i].scores != other.items_[i].scores) return false;
  }
  return true;
}

SortedScoreIndex::SortedScoreIndex(const ScoreMatrix& scores) : n_(scores.n()) {
  const int m = scores.m();
  order_.resize(m);
  values_.resize(m);
  for (int j = 0; j < m; ++j) {
    auto& perm = order_[j];
    perm.resize(n_);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      const double va = scores.score(a, j);
      const double vb = scores.score(b, j);
      return va < vb || (va == vb && a < b);
    });
    auto& vals = values_[j];
    vals.resize(n_);
    for (int r = 0; r < n_; ++r) vals[r] = scores.score(perm[r], j);
  }
}

SortedScoreIndex build_sorted_index(const ScoreMatrix& scores) {
  return SortedScoreIndex(scores);
}

}  // namespace cutopt
