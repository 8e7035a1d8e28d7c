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

#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "homotopt/poly.hpp"

namespace homotopt {

void MatrixPencil::validate() const {
  if (size <= 0) throw std::invalid_argument("MatrixPencil: size must be positive");
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const auto& m = matrices[i];
    if (m.rows() != size || m.cols() != size)
      throw std::invalid_argument("MatrixPencil: matrix " + std::to_string(i + 1) + " is not " +
                                  std::to_string(size) + "x" + std::to_string(size));
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
      throw std::invalid_argument("MatrixPencil: matrix " + std::to_string(i + 1) + " is not symmetric");
  }
}

MultiPoly determinant(std::span<const MultiPoly> entries, int s) {
  if (s <= 0 || static_cast<int>(entries.size()) != s * s)
    throw std::invalid_argument("determinant: expected " + std::to_string(s) + "x" + std::to_string(s) + " entries");
  if (s > kMaxPencilSize) throw std::invalid_argument("determinant: size exceeds expansion budget");
  const int nv = entries[0].n_vars();

  // minors[mask] = determinant of rows [s - popcount(mask), s) and the columns in mask.
  std::unordered_map<unsigned, MultiPoly> minors;
  minors.emplace(0u, MultiPoly::constant(nv, 1.0));
  for (int width = 1; width <= s; ++width) {
    const int row = s - width;
    std::unordered_map<unsigned, MultiPoly> next;
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
      if (std::popcount(mask) != width) continue;
      MultiPoly acc(nv);
      int position = 0;
      for (int c = 0; c < s; ++c) {
        if (!(mask & (1u << c))) continue;
        const MultiPoly& entry = entries[row * s + c];
        if (!entry.is_zero()) {
          MultiPoly term = entry * minors.at(mask & ~(1u << c));
          acc = (position % 2 == 0) ? acc + term : acc - term;
        }
        ++position;
      }
      next.emplace(mask, std::move(acc));
    }
    minors = std::move(next);
  }
  return minors.at((1u << s) - 1);
}

MultiPoly det_pencil(const MatrixPencil& pencil) {
  pencil.validate();
  const int n = pencil.n_vars();
  const int s = pencil.size;
  if (s > kMaxPencilSize || n > kMaxPencilVars)
    throw std::invalid_argument("det_pencil: pencil exceeds the " + std::to_string(kMaxPencilSize) + "x" +
                                std::to_string(kMaxPencilVars) + " expansion budget");
  std::vector<MultiPoly> entries;
  entries.reserve(s * s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      MultiPoly e = MultiPoly::constant(n, i == j ? 1.0 : 0.0);
      for (int k = 0; k < n; ++k)
        if (pencil.matrices[k](i, j) != 0.0) e = e + MultiPoly::variable(n, k, pencil.matrices[k](i, j));
      entries.push_back(std::move(e));
    }
  }
  return determinant(entries, s);
}

}  // namespace homotopt
