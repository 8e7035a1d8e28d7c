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
#include "homotopt/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace homotopt {

OracleOptimum holder_optimum(const Eigen::VectorXd& w, int p, double r) {
  if (w.size() == 0 || w.isZero(0.0) || !w.allFinite()) throw std::invalid_argument("holder_optimum: zero w");
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("holder_optimum: p must be even and at least 2");
  if (!(r > 0.0)) throw std::invalid_argument("holder_optimum: r must be positive");
  const double q = static_cast<double>(p) / (p - 1);
  const double qnorm = std::pow(w.array().abs().pow(q).sum(), 1.0 / q);
  OracleOptimum out;
  out.point.resize(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    const double s = w(i) > 0 ? 1.0 : (w(i) < 0 ? -1.0 : 0.0);
    out.point(i) = r * s * std::pow(std::abs(w(i)) / qnorm, q - 1.0);
  }
  out.value = r * qnorm;
  return out;
}

double kkt_residual(const Description& description, const Objective& objective, const Eigen::VectorXd& x, double t) {
  const DescriptionEval p = description.eval(t, x);
  const Eigen::VectorXd gf = objective.eval(t, x).grad;
  const double gp2 = p.grad.squaredNorm();
  if (!(gp2 > 0.0)) throw std::domain_error("kkt_residual: description gradient vanishes");
  const double gf_inf = gf.cwiseAbs().maxCoeff();
  if (!(gf_inf > 0.0)) throw std::domain_error("kkt_residual: objective gradient vanishes");
  const double lambda = gf.dot(p.grad) / gp2;
  const double par = (gf - lambda * p.grad).cwiseAbs().maxCoeff() / gf_inf;
  return std::max(std::abs(p.value), par);
}

OracleOptimum grid_maximizer_2d(const Description& description, const Objective& objective, const Box2D& box,
                                int resolution, double t) {
  if (description.n_vars() != 2 || objective.n_vars() != 2)
    throw std::invalid_argument("grid_maximizer_2d: only n = 2 is supported");
  const GridArgmax g = grid_argmax_parallel([&](const Eigen::VectorXd& x) { return description.value(t, x); },
                                            [&](const Eigen::VectorXd& x) { return objective.value(t, x); }, box,
                                            resolution);
  if (!g.found) throw std::runtime_error("grid_maximizer_2d: no feasible grid point");
  return {Eigen::VectorXd(g.point), g.value};
}

std::vector<Eigen::VectorXd> sample_feasible(const Description& description, const Eigen::VectorXd& lo,
                                             const Eigen::VectorXd& hi, int count, std::mt19937_64& rng, double t) {
  const int n = description.n_vars();
  if (lo.size() != n || hi.size() != n) throw std::invalid_argument("sample_feasible: box has the wrong dimension");
  if (count < 0) throw std::invalid_argument("sample_feasible: negative count");
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Eigen::VectorXd> out;
  out.reserve(count);
  const long long max_draws = 1000LL * count + 1000;
  Eigen::VectorXd x(n);
  for (long long draws = 0; static_cast<int>(out.size()) < count; ++draws) {
    if (draws >= max_draws) throw std::runtime_error("sample_feasible: acceptance rate too low");
    for (int i = 0; i < n; ++i) x(i) = lo(i) + (hi(i) - lo(i)) * u(rng);
    double v;
    try {
      v = description.value(t, x);
    } catch (const std::exception&) {
      continue;
    }
    if (v >= 0.0) out.push_back(x);
  }
  return out;
}

double sampled_optimality_gap(const Objective& objective, const Eigen::VectorXd& x,
                              const std::vector<Eigen::VectorXd>& samples, double t) {
  const double fx = objective.value(t, x);
  double gap = -std::numeric_limits<double>::infinity();
  for (const auto& s : samples) gap = std::max(gap, objective.value(t, s) - fx);
  return gap;
}

}  // namespace homotopt
