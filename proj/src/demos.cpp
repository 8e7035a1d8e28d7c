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
#include "homotopt/demos.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

#include "homotopt/kernels.hpp"
#include "homotopt/serialize.hpp"

namespace homotopt {

Problem demo_problem(const std::string& name) {
  if (name == "example-3-11") {
    // unit ball to 10 - sum exp(b_k . x), w = (1, 1/2)
    std::vector<Eigen::VectorXd> b{Eigen::Vector2d(0.2, 0.2), Eigen::Vector2d(-0.1, 0.2),
                                   Eigen::Vector2d(-0.2, -0.2), Eigen::Vector2d(0.1, -0.1)};
    Problem pr = geometric_problem({1, 1, 1, 1}, b, {0, 0, 0, 0}, 10.0, Eigen::Vector2d(1.0, 0.5));
    pr.name = name;
    return pr;
  }
  if (name == "three-ellipse") return three_ellipse_problem();
  if (name == "distance-B3") return distance_example();
  if (name == "failing-pencil") return failing_pencil_problem(Eigen::Vector2d(1, -1));
  throw std::invalid_argument("unknown demo '" + name +
                              "' (expected example-3-11, three-ellipse, distance-B3 or failing-pencil)");
}

namespace {

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  return f;
}

}  // namespace

DemoResult run_demo(const std::string& name, const std::filesystem::path& out_dir) {
  const Problem pr = demo_problem(name);
  std::filesystem::create_directories(out_dir);
  DemoResult res;
  res.report = track(pr.description, pr.objective, pr.x0);
  const SolveReport& rep = res.report;

  const auto path_file = out_dir / (name + "_path.csv");
  {
    auto f = open_out(path_file);
    write_path_csv(f, rep.path);
  }
  res.files.push_back(path_file);

  // Rays reach well beyond the sets so unbounded directions are visible.
  const double max_radius = 4.0 * std::max(1.0, rep.path.empty() ? 1.0 : rep.final_point.norm()) + 16.0;
  nlohmann::json boundaries = nlohmann::json::array();
  for (double t : demo_times()) {
    const auto rays = boundary_rays_parallel([&](const Eigen::VectorXd& x) { return pr.description.value(t, x); },
                                             kDemoRays, max_radius);
    const auto file = out_dir / fmt::format("{}_boundary_t{}.csv", name, t);
    auto f = open_out(file);
    f << "angle,x_1,x_2,bounded\n";
    int unbounded = 0;
    for (const auto& r : rays) {
      unbounded += r.bounded ? 0 : 1;
      f << fmt::format("{:.17g},{:.17g},{:.17g},{}\n", r.angle, r.radius * std::cos(r.angle),
                       r.radius * std::sin(r.angle), r.bounded ? 1 : 0);
    }
    res.files.push_back(file);
    boundaries.push_back({{"t", t}, {"file", file.filename().string()}, {"unbounded_rays", unbounded}});
  }

  nlohmann::json ann = report_to_json(rep, false);
  ann["demo"] = name;
  ann["problem"] = pr.name;
  ann["start_point"] = std::vector<double>(pr.x0.data(), pr.x0.data() + pr.x0.size());
  ann["path_file"] = path_file.filename().string();
  ann["boundaries"] = boundaries;
  ann["rays"] = kDemoRays;
  if (rep.status == SolveStatus::PathDiverged) ann["divergence_t"] = rep.final_t;
  else ann["divergence_t"] = nullptr;
  try {
    ann["final_feasibility"] = pr.description.value(1.0, rep.final_point);
  } catch (const std::exception&) {
    ann["final_feasibility"] = nullptr;
  }
  const auto ann_file = out_dir / (name + "_annotation.json");
  {
    auto f = open_out(ann_file);
    f << ann.dump(2) << '\n';
  }
  res.files.push_back(ann_file);
  res.annotation = std::move(ann);
  return res;
}

}  // namespace homotopt
