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

#include "homotopt/poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace homotopt {

namespace {

constexpr double kPruneRelative = 1e-14;

std::vector<Term> combine(int n_vars, std::map<Exponent, double>&& acc) {
  double max_abs = 0.0;
  for (const auto& [e, c] : acc) max_abs = std::max(max_abs, std::abs(c));
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c == 0.0 || std::abs(c) < kPruneRelative * max_abs) continue;
    if (static_cast<int>(e.size()) != n_vars) throw std::logic_error("exponent length mismatch");
    out.push_back({e, c});
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 0) throw std::invalid_argument("MultiPoly: negative variable count");
  build_index();
}

MultiPoly::MultiPoly(int n_vars, std::vector<Term> terms) : n_vars_(n_vars), terms_(std::move(terms)) {
  if (n_vars < 0) throw std::invalid_argument("MultiPoly: negative variable count");
  for (const auto& t : terms_) {
    if (static_cast<int>(t.exp.size()) != n_vars_)
      throw std::invalid_argument("MultiPoly: exponent vector has length " + std::to_string(t.exp.size()) +
                                  ", expected " + std::to_string(n_vars_));
    for (int e : t.exp)
      if (e < 0) throw std::invalid_argument("MultiPoly: negative exponent");
    if (!std::isfinite(t.coeff)) throw std::invalid_argument("MultiPoly: non-finite coefficient");
  }
  canonicalize();
}

MultiPoly MultiPoly::constant(int n_vars, double c) {
  return MultiPoly(n_vars, {Term{Exponent(n_vars, 0), c}});
}

MultiPoly MultiPoly::variable(int n_vars, int index, double coeff) {
  if (index < 0 || index >= n_vars) throw std::invalid_argument("MultiPoly::variable: index out of range");
  Exponent e(n_vars, 0);
  e[index] = 1;
  return MultiPoly(n_vars, {Term{e, coeff}});
}

int MultiPoly::total_degree(const Exponent& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

void MultiPoly::canonicalize() {
  std::map<Exponent, double> acc;
  for (auto& t : terms_) acc[t.exp] += t.coeff;
  terms_ = combine(n_vars_, std::move(acc));
  build_index();
}

void MultiPoly::build_index() {
  degree_ = 0;
  active_var_.clear();
  active_exp_.clear();
  active_offset_.assign(1, 0);
  max_exp_.assign(n_vars_, 0);
  for (const auto& t : terms_) {
    degree_ = std::max(degree_, total_degree(t.exp));
    for (int i = 0; i < n_vars_; ++i) {
      if (t.exp[i] == 0) continue;
      active_var_.push_back(i);
      active_exp_.push_back(t.exp[i]);
      max_exp_[i] = std::max(max_exp_[i], t.exp[i]);
    }
    active_offset_.push_back(static_cast<int>(active_var_.size()));
  }
}

bool MultiPoly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return total_degree(t.exp) == degree_; });
}

double MultiPoly::coeff(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& key) { return t.exp < key; });
  return (it != terms_.end() && it->exp == e) ? it->coeff : 0.0;
}

void MultiPoly::check_point(const Eigen::VectorXd& x) const {
  if (x.size() != n_vars_)
    throw std::invalid_argument("MultiPoly: point has dimension " + std::to_string(x.size()) + ", expected " +
                                std::to_string(n_vars_));
}

// Calls sink(term_index, value, active vars, first derivs, second derivs,
// prefix, suffix) for every term. Derivatives are of the monomial without its
// coefficient. Products "all factors except j" come from prefix/suffix arrays,
// so no division by possibly-zero coordinates happens.
template <class Sink>
void MultiPoly::for_each_term_jet(const Eigen::VectorXd& x, bool second_order, Sink&& sink) const {
  check_point(x);
  std::vector<std::vector<double>> pw(n_vars_);
  for (int i = 0; i < n_vars_; ++i) {
    pw[i].resize(max_exp_[i] + 1);
    pw[i][0] = 1.0;
    for (int e = 1; e <= max_exp_[i]; ++e) pw[i][e] = pw[i][e - 1] * x[i];
  }
  std::vector<double> a, d, dd, prefix, suffix;
  for (std::size_t ti = 0; ti < terms_.size(); ++ti) {
    const int begin = active_offset_[ti];
    const int m = active_offset_[ti + 1] - begin;
    a.resize(m);
    d.resize(m);
    dd.resize(m);
    for (int j = 0; j < m; ++j) {
      const int v = active_var_[begin + j];
      const int e = active_exp_[begin + j];
      a[j] = pw[v][e];
      d[j] = e * pw[v][e - 1];
      dd[j] = (second_order && e >= 2) ? e * (e - 1) * pw[v][e - 2] : 0.0;
    }
    prefix.assign(m + 1, 1.0);
    suffix.assign(m + 1, 1.0);
    for (int j = 0; j < m; ++j) prefix[j + 1] = prefix[j] * a[j];
    for (int j = m - 1; j >= 0; --j) suffix[j] = suffix[j + 1] * a[j];
    sink(ti, std::span<const int>(active_var_.data() + begin, m), a, d, dd, prefix, suffix);
  }
}

double MultiPoly::eval(const Eigen::VectorXd& x) const {
  check_point(x);
  double s = 0.0;
  for (std::size_t ti = 0; ti < terms_.size(); ++ti) {
    double m = terms_[ti].coeff;
    for (int j = active_offset_[ti]; j < active_offset_[ti + 1]; ++j) {
      const double xi = x[active_var_[j]];
      for (int e = 0; e < active_exp_[j]; ++e) m *= xi;
    }
    s += m;
  }
  return s;
}

std::vector<PolyJet> MultiPoly::jets_by_degree(const Eigen::VectorXd& x) const {
  std::vector<PolyJet> out(degree_ + 1);
  for (auto& j : out) {
    j.grad = Eigen::VectorXd::Zero(n_vars_);
    j.hess = Eigen::MatrixXd::Zero(n_vars_, n_vars_);
  }
  for_each_term_jet(x, true,
                    [&](std::size_t ti, std::span<const int> vars, const std::vector<double>& a,
                        const std::vector<double>& d, const std::vector<double>& dd,
                        const std::vector<double>& prefix, const std::vector<double>& suffix) {
                      const double c = terms_[ti].coeff;
                      PolyJet& J = out[total_degree(terms_[ti].exp)];
                      const int m = static_cast<int>(vars.size());
                      J.value += c * prefix[m];
                      for (int j = 0; j < m; ++j) {
                        const double others = prefix[j] * suffix[j + 1];
                        J.grad[vars[j]] += c * d[j] * others;
                        J.hess(vars[j], vars[j]) += c * dd[j] * others;
                        // mid = product of a[q] for j < q < l
                        double mid = 1.0;
                        for (int l = j + 1; l < m; ++l) {
                          const double h = c * d[j] * d[l] * prefix[j] * mid * suffix[l + 1];
                          J.hess(vars[j], vars[l]) += h;
                          J.hess(vars[l], vars[j]) += h;
                          mid *= a[l];
                        }
                      }
                    });
  return out;
}

PolyJet MultiPoly::jet(const Eigen::VectorXd& x) const {
  auto parts = jets_by_degree(x);
  PolyJet out{0.0, Eigen::VectorXd::Zero(n_vars_), Eigen::MatrixXd::Zero(n_vars_, n_vars_)};
  for (const auto& p : parts) {
    out.value += p.value;
    out.grad += p.grad;
    out.hess += p.hess;
  }
  return out;
}

Eigen::VectorXd MultiPoly::grad(const Eigen::VectorXd& x) const {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n_vars_);
  for_each_term_jet(x, false,
                    [&](std::size_t ti, std::span<const int> vars, const std::vector<double>&,
                        const std::vector<double>& d, const std::vector<double>&,
                        const std::vector<double>& prefix, const std::vector<double>& suffix) {
                      for (std::size_t j = 0; j < vars.size(); ++j)
                        g[vars[j]] += terms_[ti].coeff * d[j] * prefix[j] * suffix[j + 1];
                    });
  return g;
}

Eigen::MatrixXd MultiPoly::hessian(const Eigen::VectorXd& x) const { return jet(x).hess; }

MultiPoly MultiPoly::partial(int i) const {
  if (i < 0 || i >= n_vars_) throw std::invalid_argument("MultiPoly::partial: index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[i] == 0) continue;
    Term d = t;
    d.coeff *= t.exp[i];
    d.exp[i] -= 1;
    out.push_back(std::move(d));
  }
  return MultiPoly(n_vars_, std::move(out));
}

MultiPoly MultiPoly::scaled_arguments(double c) const {
  return map_by_degree([c](int deg) { return std::pow(c, deg); });
}

MultiPoly MultiPoly::operator-() const { return (-1.0) * *this; }

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_vars_ != b.n_vars_) throw std::invalid_argument("MultiPoly: variable count mismatch in +");
  std::map<Exponent, double> acc;
  for (const auto& t : a.terms_) acc[t.exp] += t.coeff;
  for (const auto& t : b.terms_) acc[t.exp] += t.coeff;
  MultiPoly r(a.n_vars_);
  r.terms_ = combine(a.n_vars_, std::move(acc));
  r.build_index();
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-1.0) * b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_vars_ != b.n_vars_) throw std::invalid_argument("MultiPoly: variable count mismatch in *");
  std::map<Exponent, double> acc;
  Exponent e(a.n_vars_);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      for (int i = 0; i < a.n_vars_; ++i) e[i] = ta.exp[i] + tb.exp[i];
      acc[e] += ta.coeff * tb.coeff;
    }
  }
  MultiPoly r(a.n_vars_);
  r.terms_ = combine(a.n_vars_, std::move(acc));
  r.build_index();
  return r;
}

MultiPoly operator*(double c, const MultiPoly& p) {
  return p.map_by_degree([c](int) { return c; });
}

// ---------------------------------------------------------------------------

double eval(const MultiPoly& p, const Eigen::VectorXd& x) { return p.eval(x); }
Eigen::VectorXd grad(const MultiPoly& p, const Eigen::VectorXd& x) { return p.grad(x); }
Eigen::MatrixXd hessian(const MultiPoly& p, const Eigen::VectorXd& x) { return p.hessian(x); }

MultiPoly homogenize(const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("homogenize: zero polynomial");
  const int d = p.degree();
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Exponent e;
    e.reserve(t.exp.size() + 1);
    e.push_back(d - MultiPoly::total_degree(t.exp));
    e.insert(e.end(), t.exp.begin(), t.exp.end());
    out.push_back({std::move(e), t.coeff});
  }
  return MultiPoly(p.n_vars() + 1, std::move(out));
}

MultiPoly renegar_derivative(const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("renegar_derivative: zero polynomial");
  const int d = p.degree();
  // The x_0 exponent of a term in the homogenization is d - |e|.
  return p.map_by_degree([d](int deg) { return static_cast<double>(d - deg); });
}

MultiPoly smooth(const MultiPoly& p, double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("smooth: eps must be nonnegative");
  if (eps == 0.0 || p.is_zero()) return p;
  return p + eps * renegar_derivative(p);
}

UniPoly restrict(const MultiPoly& p, const Eigen::VectorXd& direction) {
  if (direction.size() != p.n_vars()) throw std::invalid_argument("restrict: dimension mismatch");
  if (direction.isZero(0.0)) throw std::invalid_argument("restrict: zero direction");
  std::vector<double> c(p.degree() + 1, 0.0);
  for (const auto& t : p.terms()) {
    double m = t.coeff;
    for (int i = 0; i < p.n_vars(); ++i)
      for (int e = 0; e < t.exp[i]; ++e) m *= direction[i];
    c[MultiPoly::total_degree(t.exp)] += m;
  }
  return UniPoly(std::move(c));
}

MultiPoly elementary_symmetric_pk(int n, int k) {
  if (n < 1) throw std::invalid_argument("elementary_symmetric_pk: n must be positive");
  if (k < 2 || k > n + 1)
    throw std::invalid_argument("elementary_symmetric_pk: k=" + std::to_string(k) + " outside [2, " +
                                std::to_string(n + 1) + "]");
  std::vector<MultiPoly> forms;
  MultiPoly first = MultiPoly::constant(n, 1.0);
  for (int i = 0; i < n; ++i) first = first - MultiPoly::variable(n, i);
  forms.push_back(first);
  for (int i = 0; i < n; ++i) forms.push_back(MultiPoly::constant(n, 1.0) + MultiPoly::variable(n, i));

  // e[j] = s_j of the forms seen so far.
  std::vector<MultiPoly> e(k + 1, MultiPoly(n));
  e[0] = MultiPoly::constant(n, 1.0);
  for (std::size_t f = 0; f < forms.size(); ++f) {
    const int top = std::min<int>(k, static_cast<int>(f) + 1);
    for (int j = top; j >= 1; --j) e[j] = e[j] + forms[f] * e[j - 1];
  }
  return e[k];
}

}  // namespace homotopt
