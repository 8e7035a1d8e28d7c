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
#include "homotopt/tracker.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "homotopt/errors.hpp"
#include "homotopt/lagrange.hpp"

namespace homotopt {

void TrackerOptions::validate() const {
  if (!(rk_tolerance > 0 && corrector_tolerance > 0 && max_corrector_iters > 0 && min_step > 0 && max_step > 0 &&
        divergence_radius > 0 && end_tolerance > 0 && initial_step > 0))
    throw std::invalid_argument("TrackerOptions: all fields must be positive");
  if (!(min_step < max_step)) throw std::invalid_argument("TrackerOptions: min_step must be below max_step");
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::PathDiverged: return "PathDiverged";
    case SolveStatus::SingularK: return "SingularK";
    case SolveStatus::StepUnderflow: return "StepUnderflow";
    case SolveStatus::SingularEvaluation: return "SingularEvaluation";
  }
  return "Unknown";
}

std::optional<SolveStatus> status_from_string(const std::string& s) {
  for (auto st : {SolveStatus::Converged, SolveStatus::PathDiverged, SolveStatus::SingularK,
                  SolveStatus::StepUnderflow, SolveStatus::SingularEvaluation})
    if (to_string(st) == s) return st;
  return std::nullopt;
}

Eigen::VectorXd initial_point_unit_ball(const Eigen::VectorXd& w) {
  const double len = w.norm();
  if (w.size() == 0 || !(len > 0.0) || !std::isfinite(len))
    throw std::invalid_argument("initial_point_unit_ball: w must be nonzero and finite");
  return w / len;
}

namespace {

// Dormand-Prince 5(4)
constexpr std::array<double, 7> kC{0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr std::array<double, 7> kB5{35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr std::array<double, 7> kB4{5179.0 / 57600, 0.0,          7571.0 / 16695, 393.0 / 640,
                                    -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

constexpr int kMaxSingularRetries = 6;
constexpr double kEndGap = 1e-9;
constexpr double kGradFloor = 1e-8;
constexpr double kParallelTol = 1e-8;
constexpr double kRoundingStall = 1e-15;

double inf_norm(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

struct NewtonOutcome {
  Eigen::VectorXd x;
  double residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
};

// Plain Newton on the corrector residual at frozen t; K is its Jacobian.
NewtonOutcome newton(const StationaritySystem& sys, Eigen::VectorXd x, double t, double tol, int max_iters) {
  NewtonOutcome out;
  for (int it = 0;; ++it) {
    const DescriptionEval p = sys.description.eval(t, x);
    const ObjectiveEval f = sys.objective.eval(t, x);
    const Eigen::VectorXd r = corrector_residual(p, f, sys.pivot);
    out.residual = inf_norm(r);
    out.iterations = it;
    if (!std::isfinite(out.residual)) break;
    if (out.residual <= tol) {
      out.converged = true;
      break;
    }
    if (it == max_iters) break;
    const LinearizedSystem ls = assemble(p, f, sys.pivot);
    const Eigen::VectorXd dx = solve_checked(ls.K, r, t);
    x -= dx;
    // Far from the origin the residual's rounding floor can exceed tol; a
    // correction at rounding level of x means Newton has nothing left to do.
    if (inf_norm(dx) <= kRoundingStall * (1.0 + inf_norm(x))) {
      out.iterations = it + 1;
      out.residual = inf_norm(corrector_residual(sys, x, t));
      out.converged = true;
      break;
    }
  }
  out.x = std::move(x);
  return out;
}

class Tracker {
 public:
  Tracker(const Description& d, const Objective& f, const TrackerOptions& opts)
      : sys_(d, f, 0), opts_(opts) {}

  SolveReport run(const Eigen::VectorXd& x0);

 private:
  struct StepResult {
    Eigen::VectorXd x5;
    double err = 0.0;
  };

  StepResult rk_step(double t, const Eigen::VectorXd& x, double h) const;
  double error_norm(const Eigen::VectorXd& e, const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
  bool repivot(double t, const Eigen::VectorXd& x);
  void record_manifold(double t, const Eigen::VectorXd& x);
  double endpoint_parallelism(const Eigen::VectorXd& x) const;
  void finish(const Eigen::VectorXd& x, double t);
  void check_sign(double t, const Eigen::VectorXd& x);

  StationaritySystem sys_;
  TrackerOptions opts_;
  SolveReport rep_;
  bool sign_warned_ = false;
};

Tracker::StepResult Tracker::rk_step(double t, const Eigen::VectorXd& x, double h) const {
  std::array<Eigen::VectorXd, 7> k;
  for (int s = 0; s < 7; ++s) {
    Eigen::VectorXd xs = x;
    for (int j = 0; j < s; ++j)
      if (kA[s][j] != 0.0) xs += h * kA[s][j] * k[j];
    k[s] = ode_rhs(sys_, xs, t + kC[s] * h);
  }
  StepResult out;
  out.x5 = x;
  Eigen::VectorXd err = Eigen::VectorXd::Zero(x.size());
  for (int s = 0; s < 7; ++s) {
    out.x5 += h * kB5[s] * k[s];
    err += h * (kB5[s] - kB4[s]) * k[s];
  }
  out.err = error_norm(err, x, out.x5);
  return out;
}

double Tracker::error_norm(const Eigen::VectorXd& e, const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
  const double tol = opts_.rk_tolerance;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    const double sc = tol + tol * std::max(std::abs(a(i)), std::abs(b(i)));
    sum += (e(i) / sc) * (e(i) / sc);
  }
  return std::sqrt(sum / static_cast<double>(e.size()));
}

// Returns true when the pivot changed.
bool Tracker::repivot(double t, const Eigen::VectorXd& x) {
  const Eigen::VectorXd g = sys_.objective.eval(t, x).grad;
  if (inf_norm(g) < kGradFloor) throw std::domain_error(fmt::format("objective gradient vanishes at t = {}", t));
  const int k = select_pivot(g);
  if (k == sys_.pivot) return false;
  sys_.pivot = k;
  return true;
}

void Tracker::record_manifold(double t, const Eigen::VectorXd& x) {
  const Eigen::VectorXd r = corrector_residual(sys_, x, t);
  auto& st = rep_.corrector_stats;
  st.max_abs_p = std::max(st.max_abs_p, std::abs(r(0)));
  if (r.size() > 1) st.max_abs_q = std::max(st.max_abs_q, inf_norm(r.tail(r.size() - 1)));
}

void Tracker::check_sign(double t, const Eigen::VectorXd& x) {
  if (sign_warned_ || !sys_.objective.is_linear()) return;
  const Eigen::VectorXd gp = sys_.description.eval(t, x).grad;
  if (sys_.objective.linear_weight()->dot(gp) >= 0.0) {
    sign_warned_ = true;
    rep_.diagnostics.push_back(fmt::format("warning: w . grad p >= 0 at t = {} (multiplier sign)", t));
  }
}

void Tracker::finish(const Eigen::VectorXd& x, double t) {
  rep_.final_point = x;
  rep_.final_t = t;
  rep_.final_pivot = sys_.pivot;
  try {
    rep_.final_value = sys_.objective.value(t, x);
    rep_.final_kkt_residual = inf_norm(corrector_residual(sys_, x, t));
  } catch (const std::exception&) {
    rep_.final_value = std::numeric_limits<double>::quiet_NaN();
    rep_.final_kkt_residual = std::numeric_limits<double>::infinity();
  }
  rep_.step_count = rep_.corrector_stats.accepted_steps;
}

// ||grad f - lambda grad p||_inf / ||grad f||_inf with the least-squares lambda.
double Tracker::endpoint_parallelism(const Eigen::VectorXd& x) const {
  try {
    const Eigen::VectorXd gp = sys_.description.eval(1.0, x).grad;
    const Eigen::VectorXd gf = sys_.objective.eval(1.0, x).grad;
    const double gp2 = gp.squaredNorm(), gf_inf = inf_norm(gf);
    if (!(gp2 > 0.0) || !(gf_inf > 0.0)) return 1.0;
    return inf_norm(gf - (gf.dot(gp) / gp2) * gp) / gf_inf;
  } catch (const SingularEvaluation&) {
    return 1.0;
  }
}

SolveReport Tracker::run(const Eigen::VectorXd& x0) {
  opts_.validate();
  if (x0.size() != sys_.n()) throw std::invalid_argument("track: start point has the wrong dimension");
  auto& st = rep_.corrector_stats;
  const double ctol = opts_.corrector_tolerance;

  double t = 0.0;
  Eigen::VectorXd x = x0;
  auto fail = [&](SolveStatus s, std::string msg) {
    rep_.status = s;
    rep_.diagnostics.push_back(std::move(msg));
    finish(x, t);
    return rep_;
  };

  try {
    repivot(t, x);
    const NewtonOutcome start = newton(sys_, x, t, ctol, opts_.max_corrector_iters);
    st.newton_iterations += start.iterations;
    if (!start.converged)
      return fail(SolveStatus::StepUnderflow,
                  fmt::format("start point could not be corrected (residual {:.3e})", start.residual));
    x = start.x;
  } catch (const SingularMatrix& e) {
    return fail(SolveStatus::SingularK, std::string("at start: ") + e.what());
  } catch (const SingularEvaluation& e) {
    return fail(SolveStatus::SingularEvaluation, std::string("at start: ") + e.what());
  } catch (const std::domain_error& e) {
    return fail(SolveStatus::SingularK, e.what());
  }
  record_manifold(t, x);
  rep_.path.push_back({t, x});

  const double t_end = 1.0 - kEndGap;
  double h = std::min(opts_.initial_step, opts_.max_step);
  double err_prev = 1.0;
  int retries = 0;
  std::string last_singular;
  bool singular = false;
  bool last_was_k = false;

  while (t < t_end) {
    h = std::min({h, opts_.max_step, t_end - t});
    // the last sliver before t_end is allowed to be shorter than min_step
    if (h < opts_.min_step && t_end - t > opts_.min_step)
      return fail(SolveStatus::StepUnderflow, fmt::format("step {:.3e} below min_step at t = {}", h, t));

    StepResult step;
    NewtonOutcome corr;
    try {
      step = rk_step(t, x, h);
      if (!step.x5.allFinite() || step.x5.norm() > opts_.divergence_radius) {
        if (step.x5.allFinite() || h <= opts_.min_step * 2) {
          x = step.x5.allFinite() ? step.x5 : x;
          t += h;
          return fail(SolveStatus::PathDiverged,
                      fmt::format("||x|| exceeded divergence radius {:g} at t = {}", opts_.divergence_radius, t));
        }
        ++st.rejected_steps;
        h *= 0.5;
        continue;
      }
      if (!(step.err <= 1.0)) {
        ++st.rejected_steps;
        const double fac = std::isfinite(step.err) ? 0.9 * std::pow(step.err, -0.2) : 0.2;
        h *= std::clamp(fac, 0.2, 0.9);
        continue;
      }
      corr = newton(sys_, step.x5, t + h, ctol, opts_.max_corrector_iters);
    } catch (const SingularMatrix& e) {
      singular = true;
      last_singular = e.what();
      last_was_k = true;
    } catch (const SingularEvaluation& e) {
      singular = true;
      last_singular = e.what();
      last_was_k = false;
    }
    if (singular) {
      singular = false;
      ++st.singular_retries;
      if (++retries > kMaxSingularRetries)
        return fail(last_was_k ? SolveStatus::SingularK : SolveStatus::SingularEvaluation, last_singular);
      h *= 0.5;
      continue;
    }
    st.newton_iterations += corr.iterations;
    if (!corr.converged) {
      ++st.rejected_steps;
      h *= 0.5;
      continue;
    }

    t += h;
    x = corr.x;
    retries = 0;
    ++st.accepted_steps;
    st.max_newton_iterations = std::max(st.max_newton_iterations, corr.iterations);

    if (x.norm() > opts_.divergence_radius)
      return fail(SolveStatus::PathDiverged,
                  fmt::format("||x|| exceeded divergence radius {:g} at t = {}", opts_.divergence_radius, t));

    try {
      if (repivot(t, x)) {
        ++st.pivot_switches;
        const NewtonOutcome again = newton(sys_, x, t, ctol, opts_.max_corrector_iters);
        st.newton_iterations += again.iterations;
        if (again.converged) x = again.x;
        else rep_.diagnostics.push_back(fmt::format("corrector after pivot switch did not converge at t = {}", t));
      }
      record_manifold(t, x);
      check_sign(t, x);
    } catch (const SingularMatrix& e) {
      return fail(SolveStatus::SingularK, e.what());
    } catch (const SingularEvaluation& e) {
      return fail(SolveStatus::SingularEvaluation, e.what());
    } catch (const std::domain_error& e) {
      return fail(SolveStatus::SingularK, e.what());
    }
    rep_.path.push_back({t, x});

    // PI controller
    const double err = std::max(step.err, 1e-10);
    double fac = 0.9 * std::pow(err, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
    fac = std::clamp(fac, 0.2, 5.0);
    h *= fac;
    err_prev = err;
  }

  const RefineResult ref = endpoint_refine(sys_.description, sys_.objective, x, opts_);
  st.endpoint_iterations = ref.iterations;
  st.limit_point = ref.limit_point;
  if (ref.limit_point) rep_.diagnostics.push_back("endpoint refinement stopped at a singular K (limit point)");
  x = ref.x;
  t = 1.0;
  if (x.norm() > opts_.divergence_radius)
    return fail(SolveStatus::PathDiverged, "endpoint refinement left the divergence radius");
  try {
    sys_.pivot = select_pivot(sys_.objective.eval(t, x).grad);
  } catch (const std::exception&) {
  }
  rep_.path.push_back({t, x});
  finish(x, t);
  // Q vanishes trivially where grad p does (corners of the feasible set), so a
  // small corrector residual alone does not certify a KKT point.
  const double par = endpoint_parallelism(x);
  if (rep_.final_kkt_residual <= 10.0 * ctol && par <= kParallelTol) {
    rep_.status = SolveStatus::Converged;
  } else if (rep_.final_kkt_residual <= 10.0 * ctol) {
    rep_.status = SolveStatus::SingularK;
    rep_.diagnostics.push_back(fmt::format(
        "endpoint gradients not parallel (residual {:.3e}, |grad p| = {:.3e}): singular boundary point, no multiplier",
        par, inf_norm(sys_.description.eval(1.0, x).grad)));
  } else {
    rep_.status = ref.limit_point ? SolveStatus::SingularK : SolveStatus::StepUnderflow;
    rep_.diagnostics.push_back(
        fmt::format("endpoint residual {:.3e} above 10 x corrector tolerance", rep_.final_kkt_residual));
  }
  return rep_;
}

}  // namespace

SolveReport track(const Description& description, const Objective& objective, const Eigen::VectorXd& x0,
                  const TrackerOptions& opts) {
  Tracker tr(description, objective, opts);
  return tr.run(x0);
}

RefineResult endpoint_refine(const Description& description, const Objective& objective, const Eigen::VectorXd& x,
                             const TrackerOptions& opts) {
  constexpr double t = 1.0;
  constexpr int kMaxIters = 50;
  const double target = std::min(opts.end_tolerance, opts.corrector_tolerance);
  RefineResult out{x, std::numeric_limits<double>::infinity(), 0, false};
  StationaritySystem sys(description, objective, 0);
  int stalls = 0;
  Eigen::VectorXd cur = x;
  try {
    for (int it = 0; it <= kMaxIters; ++it) {
      const DescriptionEval p = description.eval(t, cur);
      const ObjectiveEval f = objective.eval(t, cur);
      sys.pivot = select_pivot(f.grad);
      const Eigen::VectorXd r = corrector_residual(p, f, sys.pivot);
      const double res = inf_norm(r);
      if (!std::isfinite(res)) break;
      if (res < out.residual) {
        stalls = (res > 0.5 * out.residual) ? stalls + 1 : 0;
        out.x = cur;
        out.residual = res;
        out.iterations = it;
      } else {
        ++stalls;
      }
      if (out.residual <= target || stalls >= 3 || it == kMaxIters) break;
      const LinearizedSystem ls = assemble(p, f, sys.pivot);
      cur -= solve_checked(ls.K, r, t);
    }
  } catch (const SingularMatrix&) {
    out.limit_point = true;
  } catch (const SingularEvaluation&) {
    out.limit_point = true;
  }
  return out;
}

void write_path_csv(std::ostream& out, const std::vector<PathSample>& path) {
  const Eigen::Index n = path.empty() ? 0 : path.front().x.size();
  out << "t";
  for (Eigen::Index i = 1; i <= n; ++i) out << ",x_" << i;
  out << '\n';
  for (const auto& s : path) {
    out << fmt::format("{:.17g}", s.t);
    for (Eigen::Index i = 0; i < s.x.size(); ++i) out << fmt::format(",{:.17g}", s.x(i));
    out << '\n';
  }
}

}  // namespace homotopt
