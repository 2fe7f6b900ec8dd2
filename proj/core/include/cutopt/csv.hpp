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
#include <string_view>

#include "cutopt/score_matrix.hpp"

namespace cutopt {

/// Parses comma-separated score data. The first row is taken as a header
/// when any cell after the first is not a number. An item-id column is
/// assumed when the header's first cell is item_id/id/item (case-insensitive)
/// or, without a header, when the first data row starts with a non-numeric
/// cell; otherwise ids are 1..n. Cells are trimmed; blank lines are skipped;
/// row and column numbers in errors are 1-based physical positions.
ScoreMatrix parse_csv(std::string_view text);

/// Inverse of parse_csv: item_id header plus score_1..score_m, one row per
/// item, shortest round-trip number formatting, LF line endings.
std::string serialize_csv(const ScoreMatrix& scores);

}  // namespace cutopt
