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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutopt/continuous.hpp"
#include "cutopt/csv.hpp"
#include "cutopt/demo_data.hpp"
#include "cutopt/error.hpp"
#include "cutopt/experiments.hpp"
#include "cutopt/greedy.hpp"
#include "cutopt/grid_search.hpp"
#include "cutopt/median.hpp"
#include "cutopt/model_export.hpp"

namespace cutopt {

namespace {

using nlohmann::ordered_json;

std::string fmt_g6(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

ScoreMatrix load_input(const std::string& path, bool demo) {
  if (demo == !path.empty()) {
    throw InvalidInputError("pass exactly one of --input and --demo");
  }
  if (demo) return demo_table1();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot open file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_csv(text.str());
}

ordered_json cutoffs_to_json(const CutoffValues& cutoffs) {
  ordered_json values = ordered_json::array();
  for (const double c : cutoffs.c) {
    if (std::isinf(c)) {
      values.push_back(c < 0 ? "-inf" : "inf");
    } else {
      values.push_back(c);
    }
  }
  return values;
}

ordered_json report_to_json(const SolveReport& report) {
  ordered_json j;
  j["method"] = method_name(report.method);
  j["cutoff_values"] = cutoffs_to_json(report.cutoffs);
  if (report.cut_indices) j["cutoff_indices"] = report.cut_indices->k;
  j["bucket_counts"] = report.histogram.counts;
  j["distinguishability"] = report.d;
  j["objective"] = report.objective;
  j["iterations"] = report.iterations;
  j["evaluations"] = report.evaluations;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

std::string csv_quote(const std::string& cell) {
  std::string out = "\"";
  for (const char ch : cell) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  return out + "\"";
}

std::string report_to_csv(const SolveReport& report) {
  std::string out =
      "method,cutoff_values,cutoff_indices,bucket_counts,distinguishability,objective,"
      "iterations,evaluations,elapsed_ms\n";
  out += method_name(report.method);
  out += ',' + csv_quote(cutoffs_to_json(report.cutoffs).dump());
  if (report.cut_indices) {
    out += ',' + csv_quote(ordered_json(report.cut_indices->k).dump());
  } else {
    out += ",";
  }
  out += ',' + csv_quote(ordered_json(report.histogram.counts).dump());
  out += ',' + fmt_g6(report.d) + ',' + fmt_g6(report.objective);
  out += ',' + std::to_string(report.iterations) + ',' + std::to_string(report.evaluations);
  out += ',' + fmt_g6(report.elapsed_ms) + '\n';
  return out;
}

void write_text(const std::string& text, const std::string& path, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidInputError("cannot write file: " + path);
  file << text;
}

Method method_from_flag(const std::string& name) {
  if (name == "median") return Method::kMedian;
  if (name == "greedy") return Method::kGreedy;
  if (name == "exact") return Method::kExactCount;
  if (name == "subset-exact") return Method::kExactSubset;
  if (name == "range") return Method::kMinRange;
  if (name == "continuous") return Method::kContinuous;
  throw InvalidInputError("unknown method: " + name);
}

struct SolveArgs {
  std::string input;
  bool demo = false;
  std::string method;
  std::string mode = "best";
  double r = 5.0;
  std::uint64_t budget = 1'000'000'000;
  std::string output = "json";
  std::string out_path;
};

int do_solve(const SolveArgs& args, std::ostream& out) {
  const ScoreMatrix scores = load_input(args.input, args.demo);
  const GridOptions grid{args.budget};
  SolveReport report;
  switch (method_from_flag(args.method)) {
    case Method::kMedian: report = solve_median(scores); break;
    case Method::kGreedy:
      report = solve_greedy(scores, args.mode == "first" ? GreedyMode::kFirstImprovement
                                                         : GreedyMode::kBestImprovement);
      break;
    case Method::kExactCount: report = solve_exact_count(scores, grid); break;
    case Method::kExactSubset: report = solve_exact_subset(scores, grid); break;
    case Method::kMinRange: report = solve_min_range(scores, grid); break;
    case Method::kContinuous: {
      SmoothConfig config;
      config.r = args.r;
      report = solve_continuous(scores, config);
      break;
    }
  }
  const std::string text =
      args.output == "csv" ? report_to_csv(report) : report_to_json(report).dump(2) + "\n";
  write_text(text, args.out_path, out);
  return 0;
}

struct ExportArgs {
  std::string input;
  bool demo = false;
  std::string formulation;
  std::string out_path;
};

int do_export(const ExportArgs& args, std::ostream& out) {
  const ScoreMatrix scores = load_input(args.input, args.demo);
  const std::string text =
      args.formulation == "ilp" ? export_ilp(scores) : export_iqp(scores);
  write_text(text, args.out_path, out);
  return 0;
}

struct BenchArgs {
  int instances = 100;
  int n = 100;
  int m = 3;
  std::uint64_t seed = 1;
  std::vector<std::string> methods = {"median", "greedy", "range", "continuous", "exact"};
  int jobs = 1;
  double r = 5.0;
  std::uint64_t budget = 1'000'000'000;
  std::string out_dir;
  bool strict = false;
};

int do_bench(const BenchArgs& args, std::ostream& out) {
  BenchmarkConfig config;
  config.instances = args.instances;
  config.spec.n = args.n;
  config.spec.m = args.m;
  config.base_seed = args.seed;
  config.jobs = args.jobs;
  config.r = args.r;
  config.budget = args.budget;
  config.methods.clear();
  for (const std::string& name : args.methods) config.methods.push_back(method_from_flag(name));

  const BenchmarkSummary summary = run_benchmark(config);

  std::filesystem::create_directories(args.out_dir);
  const auto path = [&](const char* file) {
    return (std::filesystem::path(args.out_dir) / file).string();
  };
  write_text(emit_summary_csv(summary), path("summary.csv"), out);
  write_text(emit_instances_csv(summary), path("instances.csv"), out);

  out << "method mean_ratio\n";
  for (const auto& [method, stats] : summary.method_stats) {
    out << method_name(method) << ' ' << fmt_g6(stats.mean) << '\n';
  }
  if (summary.time_ratio) out << "time_ratio " << fmt_g6(summary.time_ratio->mean) << '\n';
  if (summary.instances_excluded > 0) {
    out << "excluded_instances " << summary.instances_excluded << '\n';
    if (args.strict) {
      throw CapacityError("excluded " + std::to_string(summary.instances_excluded) +
                              " instances under --strict",
                          static_cast<std::uint64_t>(summary.instances_excluded));
    }
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cut-off selection toolkit: bucket items by score thresholds and "
               "maximize the share of distinguishable pairs"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "run one method on a dataset");
  solve->add_option("--input", solve_args.input, "CSV file with optional id column");
  solve->add_flag("--demo", solve_args.demo, "use the built-in 50x3 dataset");
  solve->add_option("--method", solve_args.method, "solution method")
      ->required()
      ->check(CLI::IsMember({"median", "greedy", "exact", "subset-exact", "range", "continuous"}));
  solve->add_option("--mode", solve_args.mode, "greedy sweep mode")
      ->check(CLI::IsMember({"best", "first"}));
  solve->add_option("--r", solve_args.r, "logistic sharpness for --method continuous");
  solve->add_option("--budget", solve_args.budget, "evaluation budget for grid methods");
  solve->add_option("--output", solve_args.output, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  solve->add_option("--out", solve_args.out_path, "write the report here instead of stdout");

  ExportArgs export_args;
  CLI::App* export_cmd = app.add_subcommand("export", "write an LP-format model file");
  export_cmd->add_option("--input", export_args.input, "CSV file with optional id column");
  export_cmd->add_flag("--demo", export_args.demo, "use the built-in 50x3 dataset");
  export_cmd->add_option("--formulation", export_args.formulation, "model kind")
      ->required()
      ->check(CLI::IsMember({"iqp", "ilp"}));
  export_cmd->add_option("--out", export_args.out_path, "write the model here instead of stdout");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "run the method comparison harness");
  bench->add_option("--instances", bench_args.instances, "number of generated instances");
  bench->add_option("--n", bench_args.n, "items per instance");
  bench->add_option("--m", bench_args.m, "scores per instance");
  bench->add_option("--seed", bench_args.seed, "base seed of the ensemble");
  bench->add_option("--methods", bench_args.methods, "methods to compare")->delimiter(',');
  bench->add_option("--jobs", bench_args.jobs, "parallel instance workers");
  bench->add_option("--r", bench_args.r, "logistic sharpness for the continuous method");
  bench->add_option("--budget", bench_args.budget, "evaluation budget for grid methods");
  bench->add_option("--out-dir", bench_args.out_dir, "directory for summary and detail CSVs")
      ->required();
  bench->add_flag("--strict", bench_args.strict, "fail when any instance is excluded");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (solve->parsed()) return do_solve(solve_args, out);
    if (export_cmd->parsed()) return do_export(export_args, out);
    return do_bench(bench_args, out);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace cutopt
