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

#include "cutopt/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include "cutopt/bucketing.hpp"
#include "cutopt/continuous.hpp"
#include "cutopt/error.hpp"
#include "cutopt/greedy.hpp"
#include "cutopt/grid_search.hpp"
#include "cutopt/median.hpp"

namespace cutopt {

namespace {

constexpr Method kCanonicalOrder[] = {Method::kMedian,     Method::kGreedy,
                                      Method::kMinRange,   Method::kContinuous,
                                      Method::kExactCount, Method::kExactSubset};

std::string fmt_g6(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string fmt_shortest(double value) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

RatioStats stats_of(std::vector<double> values) {
  RatioStats s;
  s.count = static_cast<int>(values.size());
  if (values.empty()) return s;
  double sum = 0.0;
  for (const double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  std::sort(values.begin(), values.end());
  s.min = values.front();
  s.max = values.back();
  s.q1 = quantile(values, 0.25);
  s.median = quantile(values, 0.5);
  s.q3 = quantile(values, 0.75);
  return s;
}

std::string cutoffs_json(const CutoffValues& cutoffs) {
  std::string out = "[";
  for (std::size_t j = 0; j < cutoffs.c.size(); ++j) {
    if (j > 0) out += ',';
    const double c = cutoffs.c[j];
    if (std::isinf(c)) {
      out += c < 0 ? "\"-inf\"" : "\"inf\"";
    } else {
      out += fmt_shortest(c);
    }
  }
  return out + "]";
}

std::string csv_quote(const std::string& cell) {
  std::string out = "\"";
  for (const char ch : cell) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  return out + "\"";
}

}  // namespace

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw InvalidInputError("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * q;
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= values.size()) return values.back();
  const double frac = h - static_cast<double>(lo);
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

std::vector<InstanceRow> evaluate_methods(const ScoreMatrix& scores,
                                          const std::vector<Method>& methods, double r,
                                          std::uint64_t budget) {
  const GridOptions grid{budget};
  const SolveReport exact = solve_exact_count(scores, grid);

  const auto requested = [&](Method method) {
    return method == Method::kExactCount ||
           std::find(methods.begin(), methods.end(), method) != methods.end();
  };

  std::vector<InstanceRow> rows;
  for (const Method method : kCanonicalOrder) {
    if (!requested(method)) continue;
    SolveReport report;
    switch (method) {
      case Method::kMedian: report = solve_median(scores); break;
      case Method::kGreedy: report = solve_greedy(scores); break;
      case Method::kMinRange: report = solve_min_range(scores, grid); break;
      case Method::kContinuous: {
        SmoothConfig config;
        config.r = r;
        report = solve_continuous(scores, config);
        break;
      }
      case Method::kExactCount: report = exact; break;
      case Method::kExactSubset: report = solve_exact_subset(scores, grid); break;
    }
    InstanceRow row;
    row.method = method;
    row.d = report.d;
    row.objective = report.objective;
    // exact.d is the maximum, so a zero optimum forces every method to zero.
    row.ratio = exact.d > 0.0 ? report.d / exact.d : 1.0;
    row.elapsed_ms = report.elapsed_ms;
    row.cutoffs = report.cutoffs;
    rows.push_back(std::move(row));
  }
  return rows;
}

BenchmarkSummary run_benchmark(const BenchmarkConfig& config) {
  if (config.instances < 1 || config.jobs < 1) {
    throw InvalidInputError("benchmark needs at least one instance and one job");
  }
  const int count = config.instances;
  std::vector<std::vector<InstanceRow>> per_instance(count);
  std::vector<std::string> failure(count);
  std::vector<std::uint64_t> seeds(count);

  const auto run_range = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      seeds[i] = instance_seed(config.base_seed, static_cast<std::uint64_t>(i));
      InstanceSpec spec = config.spec;
      spec.seed = seeds[i];
      try {
        const ScoreMatrix scores = generate_instance(spec);
        per_instance[i] = evaluate_methods(scores, config.methods, config.r, config.budget);
      } catch (const CapacityError& e) {
        failure[i] = e.what();
      }
    }
  };

  const int jobs = std::min(config.jobs, count);
  if (jobs <= 1) {
    run_range(0, count);
  } else {
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
      const int begin = count * t / jobs;
      const int end = count * (t + 1) / jobs;
      workers.emplace_back(run_range, begin, end);
    }
    for (auto& w : workers) w.join();
  }

  BenchmarkSummary summary;
  summary.instances_requested = count;
  std::vector<std::pair<Method, std::vector<double>>> ratios;
  std::vector<double> time_ratios;
  for (int i = 0; i < count; ++i) {
    if (!failure[i].empty()) {
      ++summary.instances_excluded;
      summary.exclusions.emplace_back(i, failure[i]);
      continue;
    }
    double exact_ms = 0.0;
    double range_ms = -1.0;
    for (InstanceRow row : per_instance[i]) {
      row.instance_index = i;
      row.seed = seeds[i];
      if (row.method == Method::kExactCount) exact_ms = row.elapsed_ms;
      if (row.method == Method::kMinRange) range_ms = row.elapsed_ms;
      auto it = std::find_if(ratios.begin(), ratios.end(),
                             [&](const auto& p) { return p.first == row.method; });
      if (it == ratios.end()) {
        ratios.emplace_back(row.method, std::vector<double>{});
        it = std::prev(ratios.end());
      }
      it->second.push_back(row.ratio);
      summary.rows.push_back(std::move(row));
    }
    if (range_ms >= 0.0) {
      time_ratios.push_back(range_ms / std::max(exact_ms, 1e-9));
    }
  }

  for (const Method method : kCanonicalOrder) {
    const auto it = std::find_if(ratios.begin(), ratios.end(),
                                 [&](const auto& p) { return p.first == method; });
    if (it == ratios.end()) continue;
    RatioStats stats = stats_of(it->second);
    stats.count = static_cast<int>(it->second.size());
    summary.method_stats.emplace_back(method, stats);
  }
  if (!time_ratios.empty()) summary.time_ratio = stats_of(time_ratios);
  return summary;
}

std::string emit_summary_csv(const BenchmarkSummary& summary) {
  std::string out = "method,min,q1,median,q3,max,mean,n_instances,n_excluded\n";
  const auto row = [&](const std::string& name, const RatioStats& s) {
    out += name + ',' + fmt_g6(s.min) + ',' + fmt_g6(s.q1) + ',' + fmt_g6(s.median) + ',' +
           fmt_g6(s.q3) + ',' + fmt_g6(s.max) + ',' + fmt_g6(s.mean) + ',' +
           std::to_string(s.count) + ',' + std::to_string(summary.instances_excluded) + '\n';
  };
  for (const auto& [method, stats] : summary.method_stats) row(method_name(method), stats);
  if (summary.time_ratio) row("time_ratio", *summary.time_ratio);
  return out;
}

std::string emit_instances_csv(const BenchmarkSummary& summary) {
  std::string out = "instance_index,seed,method,d,objective,cutoffs,elapsed_ms\n";
  for (const InstanceRow& row : summary.rows) {
    out += std::to_string(row.instance_index) + ',' + std::to_string(row.seed) + ',' +
           method_name(row.method) + ',' + fmt_g6(row.d) + ',' + fmt_g6(row.objective) + ',' +
           csv_quote(cutoffs_json(row.cutoffs)) + ',' + fmt_g6(row.elapsed_ms) + '\n';
  }
  return out;
}

}  // namespace cutopt
