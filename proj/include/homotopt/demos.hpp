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
#ifndef HOMOTOPT_DEMOS_HPP
#define HOMOTOPT_DEMOS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "homotopt/problems.hpp"
#include "homotopt/tracker.hpp"

namespace homotopt {

inline const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{"example-3-11", "three-ellipse", "distance-B3", "failing-pencil"};
  return names;
}

/// Times at which boundary polylines of C_t are sampled.
inline const std::vector<double>& demo_times() {
  static const std::vector<double> times{0.0, 0.7, 0.9, 1.0};
  return times;
}

inline constexpr int kDemoRays = 720;

/// Throws std::invalid_argument for unknown names.
Problem demo_problem(const std::string& name);

struct DemoResult {
  SolveReport report;
  nlohmann::json annotation;
  std::vector<std::filesystem::path> files;
};

/// Solves the demo and writes NAME_path.csv, NAME_boundary_t<T>.csv for each
/// sampled time and NAME_annotation.json into out_dir (created if missing).
DemoResult run_demo(const std::string& name, const std::filesystem::path& out_dir);

}  // namespace homotopt

#endif  // HOMOTOPT_DEMOS_HPP
