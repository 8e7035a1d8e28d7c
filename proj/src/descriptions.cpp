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
#include "homotopt/descriptions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "homotopt/errors.hpp"

namespace homotopt {

Description::Description(int n_vars, std::string label, bool time_dependent, JetFn jet, ValueFn value)
    : n_vars_(n_vars), label_(std::move(label)), time_dependent_(time_dependent), jet_(std::move(jet)),
      value_(std::move(value)) {
  if (n_vars < 1) throw std::invalid_argument("Description: n_vars must be positive");
  if (!jet_) throw std::invalid_argument("Description: missing evaluator");
}

void Description::check(double t, const Eigen::VectorXd& x) const {
  if (x.size() != n_vars_)
    throw std::invalid_argument(label_ + ": point has dimension " + std::to_string(x.size()) + ", expected " +
                                std::to_string(n_vars_));
  if (!std::isfinite(t)) throw std::invalid_argument(label_ + ": non-finite time");
}

DescriptionEval Description::eval(double t, const Eigen::VectorXd& x) const {
  check(t, x);
  return jet_(t, x);
}

double Description::value(double t, const Eigen::VectorXd& x) const {
  check(t, x);
  return value_ ? value_(t, x) : jet_(t, x).value;
}

// ---------------------------------------------------------------------------

Description unit_ball(int n) {
  if (n < 1) throw std::invalid_argument("unit_ball: n must be positive");
  auto jet = [n](double, const Eigen::VectorXd& x) {
    DescriptionEval e = DescriptionEval::zero(n);
    e.value = 1.0 - x.squaredNorm();
    e.grad = -2.0 * x;
    e.hess.diagonal().setConstant(-2.0);
    return e;
  };
  auto value = [](double, const Eigen::VectorXd& x) { return 1.0 - x.squaredNorm(); };
  return Description(n, "unit_ball", false, jet, value);
}

Description concave_combo(const Description& p0, const Description& p1) {
  if (p0.n_vars() != p1.n_vars()) throw std::invalid_argument("concave_combo: dimension mismatch");
  const Eigen::VectorXd origin = Eigen::VectorXd::Zero(p0.n_vars());
  if (!(p0.value(0.0, origin) > 0.0)) throw std::invalid_argument("concave_combo: p0 is not positive at the origin");
  if (!(p1.value(1.0, origin) > 0.0)) throw std::invalid_argument("concave_combo: p1 is not positive at the origin");
  auto jet = [p0, p1](double t, const Eigen::VectorXd& x) { return blend(p0.eval(t, x), p1.eval(t, x), t); };
  auto value = [p0, p1](double t, const Eigen::VectorXd& x) {
    return (1.0 - t) * p0.value(t, x) + t * p1.value(t, x);
  };
  return Description(p0.n_vars(), "concave_combo(" + p0.label() + ", " + p1.label() + ")", true, jet, value);
}

// ---------------------------------------------------------------------------

namespace {

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Jets of (d - D)^i p at y for i = 0..repeat, D the Euler operator.
std::vector<PolyJet> renegar_powers(const MultiPoly& p, const Eigen::VectorXd& y, int repeat) {
  const int d = p.degree();
  const auto parts = p.jets_by_degree(y);
  const Eigen::Index n = y.size();
  std::vector<PolyJet> out(repeat + 1, PolyJet{0.0, Eigen::VectorXd::Zero(n), Eigen::MatrixXd::Zero(n, n)});
  for (int deg = 0; deg < static_cast<int>(parts.size()); ++deg) {
    double w = 1.0;
    for (int i = 0; i <= repeat; ++i) {
      out[i].value += w * parts[deg].value;
      out[i].grad += w * parts[deg].grad;
      out[i].hess += w * parts[deg].hess;
      w *= d - deg;
    }
  }
  return out;
}

// Lift a jet of q(y) to (t, x) with y = scale(t) * x.
DescriptionEval lift_scaled(const PolyJet& q, const Eigen::VectorXd& x, double scale, double dscale) {
  DescriptionEval e;
  e.value = q.value;
  e.grad = scale * q.grad;
  e.hess = scale * scale * q.hess;
  e.dt_value = dscale * q.grad.dot(x);
  e.dt_grad = dscale * q.grad + scale * dscale * (q.hess * x);
  return e;
}

}  // namespace

Description rz_product_homotopy(const MultiPoly& p0, const MultiPoly& p1, SmoothingSchedule schedule, int repeat) {
  if (p0.n_vars() != p1.n_vars() || p0.n_vars() < 1)
    throw std::invalid_argument("rz_product_homotopy: polynomials must share a positive variable count");
  if (repeat < 1) throw std::invalid_argument("rz_product_homotopy: repeat must be at least 1");
  if (!(schedule.eps_max >= 0.0)) throw std::invalid_argument("rz_product_homotopy: eps_max must be nonnegative");
  const int n = p0.n_vars();
  const Eigen::VectorXd origin = Eigen::VectorXd::Zero(n);
  if (!(p0.eval(origin) > 0.0)) throw std::invalid_argument("rz_product_homotopy: p0(0) must be positive");
  if (!(p1.eval(origin) > 0.0)) throw std::invalid_argument("rz_product_homotopy: p1(0) must be positive");

  auto jet = [p0, p1, schedule, repeat, n](double t, const Eigen::VectorXd& x) {
    const auto a = renegar_powers(p0, (1.0 - t) * x, repeat);
    const auto b = renegar_powers(p1, t * x, repeat);
    std::vector<DescriptionEval> la, lb;
    for (int i = 0; i <= repeat; ++i) {
      la.push_back(lift_scaled(a[i], x, 1.0 - t, -1.0));
      lb.push_back(lift_scaled(b[i], x, t, 1.0));
    }
    const double eps = schedule(t);
    const double deps = schedule.derivative(t);
    DescriptionEval out = DescriptionEval::zero(n);
    for (int j = 0; j <= repeat; ++j) {
      DescriptionEval inner = DescriptionEval::zero(n);
      for (int i = 0; i <= j; ++i) inner += binomial(j, i) * product(la[i], lb[j - i]);
      const double c = binomial(repeat, j) * std::pow(eps, j);
      const double dc = j == 0 ? 0.0 : binomial(repeat, j) * j * std::pow(eps, j - 1) * deps;
      out += scale_by_time_function(inner, c, dc);
    }
    return out;
  };
  return Description(n, "rz_product", true, jet);
}

// ---------------------------------------------------------------------------

Description k_ellipse(const std::vector<Eigen::VectorXd>& focal_points, double r) {
  if (focal_points.empty()) throw std::invalid_argument("k_ellipse: need at least one focal point");
  const int n = static_cast<int>(focal_points[0].size());
  for (const auto& u : focal_points)
    if (u.size() != n) throw std::invalid_argument("k_ellipse: focal points differ in dimension");
  double at_origin = r;
  for (const auto& u : focal_points) at_origin -= u.norm();
  if (!(at_origin > 0.0)) throw std::invalid_argument("k_ellipse: origin is not interior (r - sum ||u_i|| <= 0)");

  auto foci = std::make_shared<const std::vector<Eigen::VectorXd>>(focal_points);
  auto jet = [foci, r, n](double, const Eigen::VectorXd& x) {
    DescriptionEval e = DescriptionEval::zero(n);
    e.value = r;
    for (const auto& u : *foci) {
      const Eigen::VectorXd d = x - u;
      const double len = d.norm();
      if (len < kFocalGuard) throw SingularEvaluation("k_ellipse: evaluation at a focal point");
      const Eigen::VectorXd w = d / len;
      e.value -= len;
      e.grad -= w;
      e.hess.noalias() -= (Eigen::MatrixXd::Identity(n, n) - w * w.transpose()) / len;
    }
    return e;
  };
  auto value = [foci, r](double, const Eigen::VectorXd& x) {
    double v = r;
    for (const auto& u : *foci) v -= (x - u).norm();
    return v;
  };
  return Description(n, "k_ellipse", false, jet, value);
}

Description pnorm_ball(int p, double r, int n) {
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("pnorm_ball: p must be an even integer >= 2");
  if (!(r > 0.0)) throw std::invalid_argument("pnorm_ball: r must be positive");
  if (n < 1) throw std::invalid_argument("pnorm_ball: n must be positive");
  const double rp = std::pow(r, p);
  auto jet = [p, rp, n](double, const Eigen::VectorXd& x) {
    DescriptionEval e = DescriptionEval::zero(n);
    e.value = rp;
    for (int i = 0; i < n; ++i) {
      const double xp2 = std::pow(x[i], p - 2);
      e.value -= xp2 * x[i] * x[i];
      e.grad[i] = -p * xp2 * x[i];
      e.hess(i, i) = -p * (p - 1) * xp2;
    }
    return e;
  };
  auto value = [p, rp](double, const Eigen::VectorXd& x) {
    double v = rp;
    for (Eigen::Index i = 0; i < x.size(); ++i) v -= std::pow(x[i], p);
    return v;
  };
  return Description(n, "pnorm_ball", false, jet, value);
}

namespace {

struct ExpSum {
  std::vector<double> c;
  std::vector<Eigen::VectorXd> b;
  std::vector<double> a;
};

std::shared_ptr<const ExpSum> make_exp_sum(const char* who, const std::vector<double>& c,
                                           const std::vector<Eigen::VectorXd>& b, const std::vector<double>& a) {
  if (b.empty()) throw std::invalid_argument(std::string(who) + ": need at least one term");
  if (c.size() != b.size() || a.size() != b.size())
    throw std::invalid_argument(std::string(who) + ": c, b and a must have the same length");
  for (double ck : c)
    if (!(ck > 0.0)) throw std::invalid_argument(std::string(who) + ": coefficients must be positive");
  for (const auto& bk : b)
    if (bk.size() != b[0].size()) throw std::invalid_argument(std::string(who) + ": exponent vectors differ in size");
  return std::make_shared<const ExpSum>(ExpSum{c, b, a});
}

}  // namespace

Description geometric_constraint(const std::vector<double>& c, const std::vector<Eigen::VectorXd>& b,
                                 const std::vector<double>& a, double level) {
  auto terms = make_exp_sum("geometric_constraint", c, b, a);
  const int n = static_cast<int>(b[0].size());
  double at_origin = level;
  for (std::size_t k = 0; k < c.size(); ++k) at_origin -= c[k] * std::exp(a[k]);
  if (!(at_origin > 0.0)) throw std::invalid_argument("geometric_constraint: origin is not interior");

  auto jet = [terms, level, n](double, const Eigen::VectorXd& x) {
    DescriptionEval e = DescriptionEval::zero(n);
    e.value = level;
    for (std::size_t k = 0; k < terms->c.size(); ++k) {
      const auto& bk = terms->b[k];
      const double ek = terms->c[k] * std::exp(bk.dot(x) + terms->a[k]);
      e.value -= ek;
      e.grad -= ek * bk;
      e.hess.noalias() -= ek * bk * bk.transpose();
    }
    return e;
  };
  auto value = [terms, level](double, const Eigen::VectorXd& x) {
    double v = level;
    for (std::size_t k = 0; k < terms->c.size(); ++k) v -= terms->c[k] * std::exp(terms->b[k].dot(x) + terms->a[k]);
    return v;
  };
  return Description(n, "geometric", false, jet, value);
}

Description log_sum_exp_constraint(const std::vector<double>& c, const std::vector<Eigen::VectorXd>& b,
                                   const std::vector<double>& a, double level) {
  auto terms = make_exp_sum("log_sum_exp_constraint", c, b, a);
  const int n = static_cast<int>(b[0].size());

  auto shifted = [terms](const Eigen::VectorXd& x, std::vector<double>& z) {
    z.resize(terms->c.size());
    double zmax = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < z.size(); ++k) {
      z[k] = std::log(terms->c[k]) + terms->b[k].dot(x) + terms->a[k];
      zmax = std::max(zmax, z[k]);
    }
    return zmax;
  };
  auto jet = [terms, level, n, shifted](double, const Eigen::VectorXd& x) {
    std::vector<double> z;
    const double zmax = shifted(x, z);
    double s = 0.0;
    for (double& zk : z) s += (zk = std::exp(zk - zmax));
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(n);
    Eigen::MatrixXd second = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t k = 0; k < z.size(); ++k) {
      const double pk = z[k] / s;
      mean += pk * terms->b[k];
      second.noalias() += pk * terms->b[k] * terms->b[k].transpose();
    }
    DescriptionEval e = DescriptionEval::zero(n);
    e.value = level - (zmax + std::log(s));
    e.grad = -mean;
    e.hess = -(second - mean * mean.transpose());
    return e;
  };
  auto value = [terms, level, shifted](double, const Eigen::VectorXd& x) {
    std::vector<double> z;
    const double zmax = shifted(x, z);
    double s = 0.0;
    for (double zk : z) s += std::exp(zk - zmax);
    return level - (zmax + std::log(s));
  };
  const Eigen::VectorXd origin = Eigen::VectorXd::Zero(n);
  if (!(value(0.0, origin) > 0.0)) throw std::invalid_argument("log_sum_exp_constraint: origin is not interior");
  return Description(n, "log_sum_exp", false, jet, value);
}

// ---------------------------------------------------------------------------

Description polynomial_description(const MultiPoly& p, std::string label) {
  const int n = p.n_vars();
  auto jet = [p, n](double, const Eigen::VectorXd& x) {
    const PolyJet j = p.jet(x);
    DescriptionEval e = DescriptionEval::zero(n);
    e.value = j.value;
    e.grad = j.grad;
    e.hess = j.hess;
    return e;
  };
  auto value = [p](double, const Eigen::VectorXd& x) { return p.eval(x); };
  return Description(n, std::move(label), false, jet, value);
}

Description time_polynomial(const MultiPoly& p_xt, std::string label) {
  const int n = p_xt.n_vars() - 1;
  if (n < 1) throw std::invalid_argument("time_polynomial: need at least one space variable");
  auto jet = [p_xt, n](double t, const Eigen::VectorXd& x) {
    Eigen::VectorXd y(n + 1);
    y << x, t;
    const PolyJet j = p_xt.jet(y);
    DescriptionEval e;
    e.value = j.value;
    e.grad = j.grad.head(n);
    e.hess = j.hess.topLeftCorner(n, n);
    e.dt_value = j.grad[n];
    e.dt_grad = j.hess.col(n).head(n);
    return e;
  };
  auto value = [p_xt, n](double t, const Eigen::VectorXd& x) {
    Eigen::VectorXd y(n + 1);
    y << x, t;
    return p_xt.eval(y);
  };
  return Description(n, std::move(label), true, jet, value);
}

MultiPoly pencil_homotopy_polynomial(const MatrixPencil& a, const MatrixPencil& b) {
  a.validate();
  b.validate();
  if (a.size != b.size || a.n_vars() != b.n_vars())
    throw std::invalid_argument("pencil_homotopy: pencils differ in size or variable count");
  const int s = a.size;
  const int n = a.n_vars();
  if (s > kMaxPencilSize || n + 1 > kMaxPencilVars + 1)
    throw std::invalid_argument("pencil_homotopy: pencil exceeds the expansion budget");
  const int nv = n + 1;
  const MultiPoly t = MultiPoly::variable(nv, n);
  std::vector<MultiPoly> entries;
  entries.reserve(s * s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      MultiPoly e = MultiPoly::constant(nv, i == j ? 1.0 : 0.0);
      for (int k = 0; k < n; ++k) {
        const MultiPoly xk = MultiPoly::variable(nv, k);
        e = e + a.matrices[k](i, j) * xk + (b.matrices[k](i, j) - a.matrices[k](i, j)) * (xk * t);
      }
      entries.push_back(std::move(e));
    }
  }
  return determinant(entries, s);
}

namespace {

// Second-order jet in the m = n + 1 variables (x, t).
struct Jet2 {
  double v = 0.0;
  Eigen::VectorXd g;
  Eigen::MatrixXd H;
};

void sub_mul(Jet2& a, const Jet2& f, const Jet2& b) {
  // a -= f * b
  a.v -= f.v * b.v;
  a.g -= f.v * b.g + b.v * f.g;
  a.H -= f.v * b.H + b.v * f.H + f.g * b.g.transpose() + b.g * f.g.transpose();
}

Jet2 mul(const Jet2& a, const Jet2& b) {
  return {a.v * b.v, a.v * b.g + b.v * a.g, a.v * b.H + b.v * a.H + a.g * b.g.transpose() + b.g * a.g.transpose()};
}

Jet2 div(const Jet2& a, const Jet2& b) {
  Jet2 c;
  c.v = a.v / b.v;
  c.g = (a.g - c.v * b.g) / b.v;
  c.H = (a.H - c.v * b.H - c.g * b.g.transpose() - b.g * c.g.transpose()) / b.v;
  return c;
}

// det((1 - t) A(x) + t B(x)) by partially pivoted elimination on jets. The
// expanded polynomial cancels catastrophically once |x| is large, while the
// blended matrix itself stays well scaled. Returns false if an interior pivot
// vanishes, which leaves the caller to fall back to the expansion.
bool pencil_det_jet(const MatrixPencil& a, const MatrixPencil& b, double t, const Eigen::VectorXd& x, Jet2& out) {
  const int s = a.size;
  const int n = a.n_vars();
  const int m = n + 1;
  std::vector<Jet2> M(s * s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      Jet2& e = M[i * s + j];
      e.v = i == j ? 1.0 : 0.0;
      e.g = Eigen::VectorXd::Zero(m);
      e.H = Eigen::MatrixXd::Zero(m, m);
      for (int k = 0; k < n; ++k) {
        const double ak = a.matrices[k](i, j), dk = b.matrices[k](i, j) - ak;
        e.v += x(k) * (ak + t * dk);
        e.g(k) = ak + t * dk;
        e.g(n) += x(k) * dk;
        e.H(k, n) = e.H(n, k) = dk;
      }
    }
  }
  double sign = 1.0;
  for (int j = 0; j < s; ++j) {
    int piv = j;
    for (int i = j + 1; i < s; ++i)
      if (std::abs(M[i * s + j].v) > std::abs(M[piv * s + j].v)) piv = i;
    if (piv != j) {
      for (int k = 0; k < s; ++k) std::swap(M[j * s + k], M[piv * s + k]);
      sign = -sign;
    }
    if (j == s - 1) break;
    if (M[j * s + j].v == 0.0) return false;
    for (int i = j + 1; i < s; ++i) {
      const Jet2 f = div(M[i * s + j], M[j * s + j]);
      for (int k = j + 1; k < s; ++k) sub_mul(M[i * s + k], f, M[j * s + k]);
    }
  }
  out = M[0];
  for (int j = 1; j < s; ++j) out = mul(out, M[j * s + j]);
  out.v *= sign;
  out.g *= sign;
  out.H *= sign;
  return true;
}

}  // namespace

Description pencil_homotopy(const MatrixPencil& a, const MatrixPencil& b) {
  const Description expanded = time_polynomial(pencil_homotopy_polynomial(a, b), "pencil_homotopy");
  const int n = a.n_vars();
  auto jet = [a, b, expanded, n](double t, const Eigen::VectorXd& x) {
    Jet2 d;
    if (!pencil_det_jet(a, b, t, x, d)) return expanded.eval(t, x);
    DescriptionEval e;
    e.value = d.v;
    e.grad = d.g.head(n);
    e.hess = d.H.topLeftCorner(n, n);
    e.dt_value = d.g(n);
    e.dt_grad = d.H.col(n).head(n);
    return e;
  };
  auto value = [a, b, n](double t, const Eigen::VectorXd& x) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(a.size, a.size);
    for (int k = 0; k < n; ++k) M += x(k) * ((1.0 - t) * a.matrices[k] + t * b.matrices[k]);
    return M.determinant();
  };
  return Description(n, "pencil_homotopy", true, jet, value);
}

}  // namespace homotopt
