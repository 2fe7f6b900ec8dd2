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

#include "cutopt/model_export.hpp"

#include <cstdio>
#include <vector>

#include "cutopt/bucketing.hpp"
#include "cutopt/error.hpp"

namespace cutopt {

namespace {

std::string fmt_coeff(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string var_x(int item, int col) {
  return "x_" + std::to_string(item + 1) + "_" + std::to_string(col + 1);
}

std::string var_y(int item, int bucket) {
  return "y_" + std::to_string(item + 1) + "_" + std::to_string(bucket);
}

std::string var_t(int bucket) { return "t_" + std::to_string(bucket); }

struct Term {
  double coeff;
  std::string name;
};

std::string expression(const std::vector<Term>& terms) {
  std::string out;
  bool first = true;
  for (const Term& t : terms) {
    const double mag = t.coeff < 0 ? -t.coeff : t.coeff;
    if (first) {
      if (t.coeff < 0) out += "- ";
      first = false;
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    if (mag != 1.0) {
      out += fmt_coeff(mag);
      out += ' ';
    }
    out += t.name;
  }
  return out;
}

std::string build_model(const ScoreMatrix& scores, bool range_objective) {
  if (scores.n() < 2) {
    throw InvalidInputError("model export needs at least two items");
  }
  const int n = scores.n();
  const int m = scores.m();
  const SortedScoreIndex idx = build_sorted_index(scores);

  std::string out;
  out += "\\ ";
  out += range_objective ? "ilp" : "iqp";
  out += " model, n=" + std::to_string(n) + ", m=" + std::to_string(m) + "\n";
  out += "Minimize\n";
  if (range_objective) {
    out += " obj: s - t\n";
  } else {
    out += " obj: [ ";
    for (int k = 0; k <= m; ++k) {
      if (k > 0) out += " + ";
      out += "2 " + var_t(k) + " ^2";
    }
    out += " ] / 2\n";
  }

  out += "Subject To\n";
  for (int j = 0; j < m; ++j) {
    const auto& ord = idx.order(j);
    for (int r = 0; r + 1 < n; ++r) {
      out += " mono_" + std::to_string(j + 1) + "_" + std::to_string(r + 1) + ": " +
             expression({{1, var_x(ord[r + 1], j)}, {-1, var_x(ord[r], j)}}) + " >= 0\n";
    }
  }
  for (int j = 0; j < m; ++j) {
    const auto& ord = idx.order(j);
    const auto& v = idx.values(j);
    for (int r = 0; r + 1 < n; ++r) {
      if (v[r] != v[r + 1]) continue;
      out += " tie_" + std::to_string(j + 1) + "_" + std::to_string(r + 1) + ": " +
             expression({{1, var_x(ord[r + 1], j)}, {-1, var_x(ord[r], j)}}) + " = 0\n";
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (int k = 1; k <= m; ++k) terms.push_back({static_cast<double>(k), var_y(i, k)});
    for (int j = 0; j < m; ++j) terms.push_back({-1, var_x(i, j)});
    out += " link_" + std::to_string(i + 1) + ": " + expression(terms) + " = 0\n";
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (int k = 0; k <= m; ++k) terms.push_back({1, var_y(i, k)});
    out += " assign_" + std::to_string(i + 1) + ": " + expression(terms) + " = 1\n";
  }
  for (int k = 0; k <= m; ++k) {
    std::vector<Term> terms;
    for (int i = 0; i < n; ++i) terms.push_back({1, var_y(i, k)});
    terms.push_back({-1, var_t(k)});
    out += " colsum_" + std::to_string(k) + ": " + expression(terms) + " = 0\n";
  }
  if (range_objective) {
    for (int k = 0; k <= m; ++k) {
      out += " lo_" + std::to_string(k) + ": " + var_t(k) + " - t >= 0\n";
    }
    for (int k = 0; k <= m; ++k) {
      out += " hi_" + std::to_string(k) + ": " + var_t(k) + " - s <= 0\n";
    }
  }

  out += "Bounds\n";
  for (int k = 0; k <= m; ++k) {
    out += " 0 <= " + var_t(k) + " <= " + std::to_string(n) + "\n";
  }
  if (range_objective) {
    out += " 0 <= t <= " + std::to_string(n) + "\n";
    out += " 0 <= s <= " + std::to_string(n) + "\n";
  }

  out += "Binaries\n";
  for (int i = 0; i < n; ++i) {
    std::string line;
    for (int j = 0; j < m; ++j) line += " " + var_x(i, j);
    out += line + "\n";
  }
  for (int i = 0; i < n; ++i) {
    std::string line;
    for (int k = 0; k <= m; ++k) line += " " + var_y(i, k);
    out += line + "\n";
  }
  out += "End\n";
  return out;
}

}  // namespace

std::string export_iqp(const ScoreMatrix& scores) { return build_model(scores, false); }

std::string export_ilp(const ScoreMatrix& scores) { return build_model(scores, true); }

}  // namespace cutopt
