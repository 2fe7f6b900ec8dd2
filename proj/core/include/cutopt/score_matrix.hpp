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

#include <string>
#include <vector>

namespace cutopt {

/// One item: an opaque label plus its score vector.
struct ScoreItem {
  std::string id;
  std::vector<double> scores;
};

/// An n x m table of finite real scores with stable item order.
///
/// Immutable after construction; columns are 0-based throughout the library.
class ScoreMatrix {
 public:
  /// Validates and takes ownership of the rows. Requires n >= 1, m >= 1 and
  /// every row to have exactly m finite entries.
  static ScoreMatrix from_items(std::vector<ScoreItem> items);

  /// Convenience constructor for unlabeled data; ids become "1".."n".
  static ScoreMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int n() const noexcept { return static_cast<int>(items_.size()); }
  int m() const noexcept { return m_; }

  double score(int item, int col) const { return items_[item].scores[col]; }
  const std::string& item_id(int item) const { return items_[item].id; }
  const std::vector<ScoreItem>& items() const noexcept { return items_; }

  bool operator==(const ScoreMatrix& other) const;

 private:
  ScoreMatrix(std::vector<ScoreItem> items, int m)
      : items_(std::move(items)), m_(m) {}

  std::vector<ScoreItem> items_;
  int m_ = 0;
};

/// Per-column ascending sort of a ScoreMatrix.
///
/// For column j, `order(j)` maps sorted rank (0-based) to item index and
/// `values(j)` is the corresponding non-decreasing value sequence. Ties are
/// broken by ascending original item index, so the sort is deterministic.
class SortedScoreIndex {
 public:
  explicit SortedScoreIndex(const ScoreMatrix& scores);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(order_.size()); }

  const std::vector<int>& order(int col) const { return order_[col]; }
  const std::vector<double>& values(int col) const { return values_[col]; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> order_;
  std::vector<std::vector<double>> values_;
};

/// Builds the per-column sorted view of `scores`.
SortedScoreIndex build_sorted_index(const ScoreMatrix& scores);

}  // namespace cutopt
