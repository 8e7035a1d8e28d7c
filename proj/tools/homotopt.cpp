// Copyright 2026 The Homotopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// homotopt: solve / bench / demo front end.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "homotopt/bench_suite.hpp"
#include "homotopt/demos.hpp"
#include "homotopt/serialize.hpp"
#include "homotopt/tracker.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFailure = 2;

int cmd_solve(const std::string& file, const std::string& path_csv, double tol) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot open " << file << '\n';
    return kExitInput;
  }
  std::optional<homotopt::ProblemInput> input;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    input = homotopt::problem_from_json(j);
    if (tol > 0) input->options.rk_tolerance = tol;
    input->options.validate();
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: " << file << " is not valid JSON: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }

  const auto& pr = input->problem;
  const homotopt::SolveReport rep = homotopt::track(pr.description, pr.objective, pr.x0, input->options);
  nlohmann::json out = homotopt::report_to_json(rep);
  out["problem"] = pr.name;
  out["options"] = homotopt::options_to_json(input->options);
  std::cout << out.dump(2) << '\n';
  if (!path_csv.empty()) {
    std::ofstream f(path_csv);
    if (!f) {
      std::cerr << "error: cannot write " << path_csv << '\n';
      return kExitInput;
    }
    homotopt::write_path_csv(f, rep.path);
  }
  return rep.converged() ? kExitOk : kExitFailure;
}

int cmd_bench(homotopt::BenchConfig cfg, const std::string& n_range, const std::string& k_range,
              const std::string& out_file) {
  try {
    cfg.n_values = homotopt::parse_int_range(n_range);
    if (!k_range.empty()) {
      if (k_range == "n-1")
        cfg.k_values = {0};
      else if (k_range == "half")
        cfg.k_values = {-1};
      else if (k_range == "n-1,half" || k_range == "half,n-1")
        cfg.k_values = {0, -1};
      else
        cfg.k_values = homotopt::parse_int_range(k_range);
    }
    const auto rows = homotopt::run_bench(cfg);
    std::ofstream f(out_file);
    if (!f) {
      std::cerr << "error: cannot write " << out_file << '\n';
      return kExitInput;
    }
    homotopt::write_bench_csv(f, rows);
    int converged = 0;
    for (const auto& r : rows) converged += r.status == homotopt::SolveStatus::Converged;
    std::cerr << cfg.suite << ": " << converged << "/" << rows.size() << " converged, wrote " << out_file << '\n';
    return converged == static_cast<int>(rows.size()) ? kExitOk : kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

int cmd_demo(const std::string& name, const std::string& out_dir) {
  try {
    const homotopt::DemoResult res = homotopt::run_demo(name, out_dir);
    std::cerr << name << ": " << homotopt::to_string(res.report.status) << '\n';
    for (const auto& f : res.files) std::cout << f.string() << '\n';
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy continuation for convex optimization"};
  app.require_subcommand(1);

  std::string solve_file, path_csv;
  double tol = 0.0;
  auto* solve = app.add_subcommand("solve", "Track a problem given as JSON; prints the report on stdout");
  solve->add_option("FILE", solve_file, "Problem JSON")->required();
  solve->add_option("--path-csv", path_csv, "Write the path as t,x_1,...,x_n rows");
  solve->add_option("--tol", tol, "Runge-Kutta local error tolerance")->check(CLI::PositiveNumber);

  homotopt::BenchConfig bench_cfg;
  std::string n_range, k_range, bench_out;
  auto* bench = app.add_subcommand("bench", "Run a seeded correctness sweep and write CSV");
  bench->add_option("SUITE", bench_cfg.suite, "symmetric | ellipse | pnorm | geometric")->required();
  bench->add_option("--n", n_range, "Dimensions: A..B, A or a,b,c")->required();
  auto* k_opt = bench->add_option("--k", k_range, "k values (range/list; symmetric also accepts n-1, half)");
  auto* p_opt = bench->add_option("--p", bench_cfg.p, "Even exponent for the pnorm suite");
  k_opt->excludes(p_opt);
  bench->add_option("--samples", bench_cfg.samples, "Samples per (n, k)")->required();
  bench->add_option("--seed", bench_cfg.seed, "Base seed")->required();
  bench->add_option("--out", bench_out, "Output CSV")->required();
  bench->add_option("--jobs", bench_cfg.jobs, "Concurrent samples")->check(CLI::PositiveNumber);
  bench->add_option("--grid", bench_cfg.grid_resolution, "Grid oracle resolution for n = 2")
      ->check(CLI::Range(2, 100000));

  std::string demo_name, out_dir;
  auto* demo = app.add_subcommand("demo", "Write path, annotation and boundary polylines for a named scenario");
  demo->add_option("NAME", demo_name, "example-3-11 | three-ellipse | distance-B3 | failing-pencil")->required();
  demo->add_option("--out-dir", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (*solve) return cmd_solve(solve_file, path_csv, tol);
  if (*bench) return cmd_bench(bench_cfg, n_range, k_range, bench_out);
  if (*demo) return cmd_demo(demo_name, out_dir);
  return kExitInput;
}
