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
#include "homotopt/bench_suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

#include "homotopt/oracle.hpp"
#include "homotopt/problems.hpp"

namespace homotopt {

namespace {

struct Task {
  int n, k_or_p, sample;
};

int resolve_k(const std::string& suite, int n, int k) {
  if (suite == "symmetric") {
    if (k == 0) return n - 1;
    if (k == -1) return (n + 1) / 2;
  }
  if (suite == "geometric" && k == 0) return 4 * n;
  return k;
}

struct Built {
  Problem problem;
  std::optional<OracleOptimum> closed_form;
  std::optional<Box2D> grid_box;
};

Built build(const std::string& suite, int n, int k, int p, std::mt19937_64& rng) {
  if (suite == "pnorm") {
    const Eigen::VectorXd w = random_direction(n, rng);
    return {pnorm_problem(p, 1.0, n, w), holder_optimum(w, p, 1.0), std::nullopt};
  }
  if (suite == "symmetric") {
    const Eigen::VectorXd w = random_direction(n, rng);
    Built b{hyperbolic_symmetric(n, k, w), std::nullopt, std::nullopt};
    if (n == 2) b.grid_box = Box2D{-3, 3, -3, 3};
    return b;
  }
  if (suite == "ellipse") {
    const EllipseInstance e = random_ellipse_instance(k, n, rng);
    const Eigen::VectorXd w = random_direction(n, rng);
    Built b{ellipse_problem(e.focal_points, e.r, w), std::nullopt, std::nullopt};
    if (n == 2) {
      // sum of distances <= r puts every point within r/k of the focal mean
      const Eigen::VectorXd c = [&] {
        Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
        for (const auto& u : e.focal_points) s += u;
        return Eigen::VectorXd(s / k);
      }();
      const double rad = e.r / k + 1e-9;
      b.grid_box = Box2D{c(0) - rad, c(0) + rad, c(1) - rad, c(1) + rad};
    }
    return b;
  }
  if (suite == "geometric") {
    const GeometricInstance g = random_geometric_instance(n, k, rng);
    const Eigen::VectorXd w = random_direction(n, rng);
    return {geometric_problem(g.c, g.b, g.a, g.level, w), std::nullopt, std::nullopt};
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

BenchRow run_one(const BenchConfig& cfg, const Task& task) {
  BenchRow row;
  row.suite = cfg.suite;
  row.n = task.n;
  row.k_or_p = task.k_or_p;
  row.sample_index = task.sample;
  row.seed = sample_seed(cfg.seed, cfg.suite, task.n, task.k_or_p, task.sample);
  std::mt19937_64 rng(row.seed);
  const Built b = build(cfg.suite, task.n, task.k_or_p, cfg.p, rng);
  const auto start = std::chrono::steady_clock::now();
  const SolveReport rep = track(b.problem.description, b.problem.objective, b.problem.x0, cfg.options);
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  row.status = rep.status;
  row.final_value = rep.final_value;
  row.steps = rep.step_count;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    row.kkt_residual = kkt_residual(b.problem.description, b.problem.objective, rep.final_point, 1.0);
  } catch (const std::exception&) {
    row.kkt_residual = nan;
  }
  if (!rep.converged()) {
    if (b.closed_form || b.grid_box) row.oracle_gap = nan;
    return row;
  }
  if (b.closed_form) {
    row.oracle_gap = std::max(std::abs(rep.final_value - b.closed_form->value),
                              (rep.final_point - b.closed_form->point).cwiseAbs().maxCoeff());
  } else if (b.grid_box) {
    const GridArgmax g = grid_argmax_serial(
        [&](const Eigen::VectorXd& x) { return b.problem.description.value(1.0, x); },
        [&](const Eigen::VectorXd& x) { return b.problem.objective.value(1.0, x); }, *b.grid_box,
        cfg.grid_resolution);
    row.oracle_gap = g.found ? std::abs(rep.final_value - g.value) : nan;
  }
  return row;
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, const std::string& suite, int n, int k_or_p, int sample_index) {
  std::vector<std::uint32_t> key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                 static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k_or_p),
                                 static_cast<std::uint32_t>(sample_index)};
  for (char c : suite) key.push_back(static_cast<unsigned char>(c));
  std::seed_seq seq(key.begin(), key.end());
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  if (std::find(bench_suites().begin(), bench_suites().end(), cfg.suite) == bench_suites().end())
    throw std::invalid_argument("unknown suite '" + cfg.suite + "' (expected symmetric, ellipse, pnorm or geometric)");
  if (cfg.n_values.empty()) throw std::invalid_argument("empty --n range");
  if (cfg.samples < 1) throw std::invalid_argument("--samples must be positive");
  if (cfg.jobs < 1) throw std::invalid_argument("--jobs must be positive");
  cfg.options.validate();

  std::vector<Task> tasks;
  const std::vector<int> ks = cfg.suite == "pnorm" ? std::vector<int>{cfg.p}
                              : cfg.k_values.empty() ? std::vector<int>{cfg.suite == "symmetric" ? 0
                                                                        : cfg.suite == "geometric" ? 0
                                                                                                   : 3}
                                                     : cfg.k_values;
  for (int n : cfg.n_values) {
    if (n < 1) throw std::invalid_argument("--n values must be positive");
    std::vector<int> seen;
    for (int k0 : ks) {
      const int k = cfg.suite == "pnorm" ? k0 : resolve_k(cfg.suite, n, k0);
      if (cfg.suite == "symmetric" && (k < 2 || k > n)) continue;
      if (cfg.suite != "symmetric" && k < 1) throw std::invalid_argument("--k values must be positive");
      // n-1 and half coincide for small n
      if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
      seen.push_back(k);
      for (int s = 0; s < cfg.samples; ++s) tasks.push_back({n, k, s});
    }
  }
  if (tasks.empty()) throw std::invalid_argument("no valid (n, k) combination in the requested ranges");

  std::vector<BenchRow> rows(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const int count = static_cast<int>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.jobs)
  for (int i = 0; i < count; ++i) {
    try {
      rows[i] = run_one(cfg, tasks[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.n, a.k_or_p, a.sample_index) < std::tie(b.n, b.k_or_p, b.sample_index);
  });
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  auto num = [](double v) { return std::isnan(v) ? std::string("nan") : fmt::format("{:.17g}", v); };
  out << "suite,n,k_or_p,sample_index,seed,status,final_value,kkt_residual,oracle_gap,steps,wall_ms\n";
  for (const auto& r : rows)
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{:.3f}\n", r.suite, r.n, r.k_or_p, r.sample_index, r.seed,
                       to_string(r.status), num(r.final_value), num(r.kkt_residual),
                       r.oracle_gap ? num(*r.oracle_gap) : std::string(), r.steps, r.wall_ms);
}

std::vector<int> parse_int_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw std::invalid_argument("bad integer '" + s + "' in range '" + text + "'");
    return v;
  };
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int a = to_int(text.substr(0, dots)), b = to_int(text.substr(dots + 2));
    if (b < a) throw std::invalid_argument("empty range '" + text + "'");
    for (int v = a; v <= b; ++v) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(to_int(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace homotopt
