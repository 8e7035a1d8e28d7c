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
#ifndef HOMOTOPT_TRACKER_HPP
#define HOMOTOPT_TRACKER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "homotopt/descriptions.hpp"
#include "homotopt/objectives.hpp"

namespace homotopt {

struct TrackerOptions {
  double rk_tolerance = 1e-7;
  double corrector_tolerance = 1e-10;
  int max_corrector_iters = 8;
  double min_step = 1e-10;
  double max_step = 0.05;
  double divergence_radius = 1e6;
  double end_tolerance = 1e-8;
  double initial_step = 0.01;

  /// Throws std::invalid_argument unless all fields are positive and min_step < max_step.
  void validate() const;
};

enum class SolveStatus { Converged, PathDiverged, SingularK, StepUnderflow, SingularEvaluation };

std::string to_string(SolveStatus s);
std::optional<SolveStatus> status_from_string(const std::string& s);

struct PathSample {
  double t = 0.0;
  Eigen::VectorXd x;
};

struct CorrectorStats {
  int accepted_steps = 0;
  int rejected_steps = 0;
  int newton_iterations = 0;
  int max_newton_iterations = 0;
  int pivot_switches = 0;
  int singular_retries = 0;
  // maxima over accepted steps after correction
  double max_abs_p = 0.0;
  double max_abs_q = 0.0;
  int endpoint_iterations = 0;
  bool limit_point = false;
};

struct SolveReport {
  SolveStatus status = SolveStatus::StepUnderflow;
  std::vector<PathSample> path;
  Eigen::VectorXd final_point;
  double final_t = 0.0;
  double final_value = 0.0;
  /// Max-norm of the corrector residual at the final point.
  double final_kkt_residual = 0.0;
  int step_count = 0;
  int final_pivot = 0;
  CorrectorStats corrector_stats;
  std::vector<std::string> diagnostics;

  bool converged() const { return status == SolveStatus::Converged; }
};

struct RefineResult {
  Eigen::VectorXd x;
  double residual = 0.0;
  int iterations = 0;
  bool limit_point = false;
};

/// w / ||w||, the maximizer of w . x over the unit ball.
Eigen::VectorXd initial_point_unit_ball(const Eigen::VectorXd& w);

SolveReport track(const Description& description, const Objective& objective, const Eigen::VectorXd& x0,
                  const TrackerOptions& opts = {});

/// Newton polish of the corrector residual at frozen t = 1. Stops at
/// min(end_tolerance, corrector_tolerance) or when progress stalls; a
/// singular K returns the last iterate with limit_point set.
RefineResult endpoint_refine(const Description& description, const Objective& objective, const Eigen::VectorXd& x,
                             const TrackerOptions& opts = {});

/// Rows "t,x_1,...,x_n" with a header line.
void write_path_csv(std::ostream& out, const std::vector<PathSample>& path);

}  // namespace homotopt

#endif  // HOMOTOPT_TRACKER_HPP
