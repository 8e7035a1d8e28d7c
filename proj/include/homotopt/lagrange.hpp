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
#ifndef HOMOTOPT_LAGRANGE_HPP
#define HOMOTOPT_LAGRANGE_HPP

#include <Eigen/Dense>

#include "homotopt/descriptions.hpp"
#include "homotopt/objectives.hpp"

namespace homotopt {

/// The eliminated stationarity conditions for max f_t subject to p_t = 0.
/// Indices are zero-based; pivot is the coordinate k with d_k f_t != 0.
struct StationaritySystem {
  Description description;
  Objective objective;
  int pivot = 0;

  StationaritySystem(Description d, Objective f, int k = 0);
  int n() const { return description.n_vars(); }
};

struct LinearizedSystem {
  Eigen::MatrixXd K;
  Eigen::VectorXd m;
};

/// Q_{k,i} = d_k f d_i p - d_i f d_k p. Throws std::invalid_argument for i == k.
double q_value(const StationaritySystem& sys, int i, const Eigen::VectorXd& x, double t);
double q_value(const DescriptionEval& p, const ObjectiveEval& f, int k, int i);

/// K stacks grad p and grad Q_{k,i} (i != k, ascending); m stacks the t-partials.
LinearizedSystem assemble(const StationaritySystem& sys, const Eigen::VectorXd& x, double t);
LinearizedSystem assemble(const DescriptionEval& p, const ObjectiveEval& f, int k);

/// (p_t, Q_{k,i} for i != k). Its x-Jacobian is K.
Eigen::VectorXd corrector_residual(const StationaritySystem& sys, const Eigen::VectorXd& x, double t);
Eigen::VectorXd corrector_residual(const DescriptionEval& p, const ObjectiveEval& f, int k);

/// Solves K y = -m. Throws SingularMatrix when the condition estimate exceeds 1e12.
Eigen::VectorXd ode_rhs(const StationaritySystem& sys, const Eigen::VectorXd& x, double t);

inline constexpr double kSingularCondition = 1e12;

/// Solves K y = rhs by partial pivoting after row equilibration; throws
/// SingularMatrix (tagged with t) when the condition estimate exceeds 1e12.
Eigen::VectorXd solve_checked(const Eigen::MatrixXd& K, const Eigen::VectorXd& rhs, double t);

/// Condition estimate of K with rows scaled to unit max-norm; +inf if a row vanishes.
double equilibrated_condition(const Eigen::MatrixXd& K);

/// argmax_i |g_i|, smallest index on ties.
int select_pivot(const Eigen::VectorXd& grad_f);

}  // namespace homotopt

#endif  // HOMOTOPT_LAGRANGE_HPP
