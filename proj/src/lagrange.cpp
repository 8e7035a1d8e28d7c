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
#include "homotopt/lagrange.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "homotopt/errors.hpp"

namespace homotopt {

StationaritySystem::StationaritySystem(Description d, Objective f, int k)
    : description(std::move(d)), objective(std::move(f)), pivot(k) {
  if (description.n_vars() != objective.n_vars())
    throw std::invalid_argument("StationaritySystem: description and objective dimensions differ");
  if (k < 0 || k >= description.n_vars()) throw std::invalid_argument("StationaritySystem: pivot out of range");
}

double q_value(const DescriptionEval& p, const ObjectiveEval& f, int k, int i) {
  if (i == k) throw std::invalid_argument("q_value: i must differ from the pivot");
  return f.grad(k) * p.grad(i) - f.grad(i) * p.grad(k);
}

double q_value(const StationaritySystem& sys, int i, const Eigen::VectorXd& x, double t) {
  if (i < 0 || i >= sys.n()) throw std::invalid_argument("q_value: index out of range");
  if (i == sys.pivot) throw std::invalid_argument("q_value: i must differ from the pivot");
  return q_value(sys.description.eval(t, x), sys.objective.eval(t, x), sys.pivot, i);
}

LinearizedSystem assemble(const DescriptionEval& p, const ObjectiveEval& f, int k) {
  const Eigen::Index n = p.dim();
  LinearizedSystem out{Eigen::MatrixXd(n, n), Eigen::VectorXd(n)};
  out.K.row(0) = p.grad.transpose();
  out.m(0) = p.dt_value;
  Eigen::Index row = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i == k) continue;
    // product rule on d_k f d_i p - d_i f d_k p
    out.K.row(row) = p.grad(i) * f.hess.row(k) + f.grad(k) * p.hess.row(i) - p.grad(k) * f.hess.row(i) -
                     f.grad(i) * p.hess.row(k);
    out.m(row) = f.dt_grad(k) * p.grad(i) + f.grad(k) * p.dt_grad(i) - f.dt_grad(i) * p.grad(k) -
                 f.grad(i) * p.dt_grad(k);
    ++row;
  }
  return out;
}

LinearizedSystem assemble(const StationaritySystem& sys, const Eigen::VectorXd& x, double t) {
  return assemble(sys.description.eval(t, x), sys.objective.eval(t, x), sys.pivot);
}

Eigen::VectorXd corrector_residual(const DescriptionEval& p, const ObjectiveEval& f, int k) {
  const Eigen::Index n = p.dim();
  Eigen::VectorXd r(n);
  r(0) = p.value;
  Eigen::Index row = 1;
  for (Eigen::Index i = 0; i < n; ++i)
    if (i != k) r(row++) = f.grad(k) * p.grad(i) - f.grad(i) * p.grad(k);
  return r;
}

Eigen::VectorXd corrector_residual(const StationaritySystem& sys, const Eigen::VectorXd& x, double t) {
  return corrector_residual(sys.description.eval(t, x), sys.objective.eval(t, x), sys.pivot);
}

namespace {

struct Equilibrated {
  Eigen::MatrixXd K;
  Eigen::VectorXd scale;
  bool zero_row = false;
};

Equilibrated equilibrate(const Eigen::MatrixXd& K) {
  Equilibrated e{K, Eigen::VectorXd::Ones(K.rows())};
  for (Eigen::Index i = 0; i < K.rows(); ++i) {
    const double s = K.row(i).cwiseAbs().maxCoeff();
    if (!(s > 0.0) || !std::isfinite(s)) {
      e.zero_row = true;
      continue;
    }
    e.scale(i) = 1.0 / s;
    e.K.row(i) *= e.scale(i);
  }
  return e;
}

}  // namespace

double equilibrated_condition(const Eigen::MatrixXd& K) {
  const Equilibrated e = equilibrate(K);
  if (e.zero_row) return std::numeric_limits<double>::infinity();
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(e.K);
  const double rc = lu.rcond();
  return rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
}

Eigen::VectorXd solve_checked(const Eigen::MatrixXd& K, const Eigen::VectorXd& rhs, double t) {
  const Equilibrated e = equilibrate(K);
  if (e.zero_row)
    throw SingularMatrix("K has a vanishing row at t = " + std::to_string(t), t,
                         std::numeric_limits<double>::infinity());
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(e.K);
  const double rc = lu.rcond();
  const double cond = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
  if (!(cond <= kSingularCondition))
    throw SingularMatrix("K is numerically singular at t = " + std::to_string(t) + " (condition " +
                             std::to_string(cond) + ")",
                         t, cond);
  Eigen::VectorXd y = lu.solve(e.scale.cwiseProduct(rhs));
  if (!y.allFinite()) throw SingularMatrix("non-finite solve at t = " + std::to_string(t), t, cond);
  return y;
}

Eigen::VectorXd ode_rhs(const StationaritySystem& sys, const Eigen::VectorXd& x, double t) {
  const LinearizedSystem ls = assemble(sys, x, t);
  return solve_checked(ls.K, -ls.m, t);
}

int select_pivot(const Eigen::VectorXd& grad_f) {
  int best = 0;
  for (Eigen::Index i = 1; i < grad_f.size(); ++i)
    if (std::abs(grad_f(i)) > std::abs(grad_f(best))) best = static_cast<int>(i);
  return best;
}

}  // namespace homotopt
