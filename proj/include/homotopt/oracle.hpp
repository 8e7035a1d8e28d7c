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
#ifndef HOMOTOPT_ORACLE_HPP
#define HOMOTOPT_ORACLE_HPP

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "homotopt/descriptions.hpp"
#include "homotopt/kernels.hpp"
#include "homotopt/objectives.hpp"

namespace homotopt {

struct OracleOptimum {
  Eigen::VectorXd point;
  double value = 0.0;
};

/// Closed-form maximizer of w . x over {sum |x_i|^p <= r^p} for even p >= 2.
OracleOptimum holder_optimum(const Eigen::VectorXd& w, int p, double r);

/// max(|p_t(x)|, ||grad f - lambda grad p||_inf / ||grad f||_inf) with the
/// least-squares multiplier lambda = (grad f . grad p) / ||grad p||^2.
double kkt_residual(const Description& description, const Objective& objective, const Eigen::VectorXd& x,
                    double t = 1.0);

/// Brute-force maximizer over a resolution x resolution grid of the box (n = 2).
/// Throws std::runtime_error when no grid point is feasible.
OracleOptimum grid_maximizer_2d(const Description& description, const Objective& objective, const Box2D& box,
                                int resolution, double t = 1.0);

/// count uniform samples of {p_t >= 0} inside [lo, hi] by rejection.
/// Throws std::runtime_error if the acceptance rate is too low to finish.
std::vector<Eigen::VectorXd> sample_feasible(const Description& description, const Eigen::VectorXd& lo,
                                             const Eigen::VectorXd& hi, int count, std::mt19937_64& rng,
                                             double t = 1.0);

/// Largest f(sample) - f(x) over the samples; <= 0 means x beat them all.
double sampled_optimality_gap(const Objective& objective, const Eigen::VectorXd& x,
                              const std::vector<Eigen::VectorXd>& samples, double t = 1.0);

}  // namespace homotopt

#endif  // HOMOTOPT_ORACLE_HPP
