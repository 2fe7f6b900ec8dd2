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

#include "cutopt/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <vector>

#include "cutopt/error.hpp"

namespace cutopt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      return cells;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

std::optional<double> parse_number(std::string_view cell) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

struct Line {
  int row;  // 1-based physical line number
  std::vector<std::string_view> cells;
};

}  // namespace

ScoreMatrix parse_csv(std::string_view text) {
  std::vector<Line> lines;
  int row = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos ? text.size() - start
                                                                           : nl - start);
    ++row;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (!trim(raw).empty()) lines.push_back({row, split_cells(raw)});
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (lines.empty()) throw ParseError("no data rows", row, 1);

  const auto& first = lines.front().cells;
  bool has_header = false;
  for (std::size_t c = 1; c < first.size(); ++c) {
    if (!parse_number(first[c])) has_header = true;
  }

  bool has_ids;
  std::size_t expected;
  std::size_t data_begin;
  if (has_header) {
    const std::string head = lowercase(first.front());
    has_ids = head == "item_id" || head == "id" || head == "item";
    expected = first.size();
    data_begin = 1;
  } else {
    has_ids = !parse_number(first.front()).has_value();
    expected = first.size();
    data_begin = 0;
  }
  if (lines.size() == data_begin) {
    throw ParseError("no data rows", lines.back().row + 1, 1);
  }
  const std::size_t id_cols = has_ids ? 1 : 0;
  if (expected <= id_cols) {
    throw ParseError("no score columns", lines.front().row, 1);
  }

  std::vector<ScoreItem> items;
  items.reserve(lines.size() - data_begin);
  for (std::size_t li = data_begin; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.cells.size() != expected) {
      const std::size_t col = std::min(line.cells.size(), expected) + 1;
      throw ParseError("expected " + std::to_string(expected) + " columns, got " +
                           std::to_string(line.cells.size()),
                       line.row, static_cast<int>(col));
    }
    ScoreItem item;
    item.id = has_ids ? std::string(line.cells.front()) : std::to_string(items.size() + 1);
    item.scores.reserve(expected - id_cols);
    for (std::size_t c = id_cols; c < expected; ++c) {
      const auto value = parse_number(line.cells[c]);
      if (!value) {
        throw ParseError("not a finite number: '" + std::string(line.cells[c]) + "'", line.row,
                         static_cast<int>(c + 1));
      }
      item.scores.push_back(*value);
    }
    items.push_back(std::move(item));
  }
  return ScoreMatrix::from_items(std::move(items));
}

std::string serialize_csv(const ScoreMatrix& scores) {
  std::string out = "item_id";
  for (int j = 1; j <= scores.m(); ++j) out += ",score_" + std::to_string(j);
  out += '\n';
  char buf[64];
  for (int i = 0; i < scores.n(); ++i) {
    out += scores.item_id(i);
    for (int j = 0; j < scores.m(); ++j) {
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, scores.score(i, j));
      out += ',';
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

}  // namespace cutopt
