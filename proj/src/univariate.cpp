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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "homotopt/poly.hpp"

namespace homotopt {

UniPoly::UniPoly(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double UniPoly::eval(double s) const {
  double v = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * s + *it;
  return v;
}

namespace {

// Parlett-Reinsch balancing with powers of two; similarity transform, so the
// eigenvalues are unchanged while their sensitivity to roundoff drops.
void balance(Eigen::MatrixXd& a) {
  constexpr double radix = 2.0;
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

}  // namespace

std::vector<std::complex<double>> roots(const UniPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("roots: zero polynomial");
  const auto& c = q.coefficients();
  const int d = q.degree();
  // Roots at the origin show up as leading zero coefficients.
  int zeros = 0;
  while (zeros < d && c[zeros] == 0.0) ++zeros;
  std::vector<std::complex<double>> out(zeros, {0.0, 0.0});
  const int m = d - zeros;
  if (m > 0) {
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(m, m);
    const double lead = c[d];
    for (int j = 0; j < m; ++j) comp(0, j) = -c[d - 1 - j] / lead;
    for (int i = 1; i < m; ++i) comp(i, i - 1) = 1.0;
    balance(comp);
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    if (es.info() != Eigen::Success) throw std::runtime_error("roots: eigenvalue iteration failed");
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()[i]);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

bool real_rooted(const UniPoly& q, double tol) {
  const auto rs = roots(q);
  return std::all_of(rs.begin(), rs.end(),
                     [tol](const std::complex<double>& r) { return std::abs(r.imag()) <= tol * (1.0 + std::abs(r)); });
}

}  // namespace homotopt
