// Copyright 2026 The jlcs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JLCS_BERKOWITZ_H_
#define JLCS_BERKOWITZ_H_

// Division-free characteristic polynomial over a commutative ring.
//
// Peels the matrix from the bottom-right corner: with A_k the trailing
// block starting at (k, k), split as [[a, R], [C, M]], the polynomial of
// A_k is T_k times that of M, where T_k is the lower-triangular Toeplitz
// matrix with first column (1, -a, -RC, -RMC, -RM^2C, ...). Uses only ring
// operations, so it works in characteristic p and over truncated series.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace jlcs {

// Coefficients of det(xI - A), constant term first; the last entry is one.
template <class T>
std::vector<T> berkowitz_charpoly(const std::vector<std::vector<T>>& a, const T& zero, const T& one) {
  const size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("berkowitz_charpoly: matrix is not square");
  }
  std::vector<T> poly{one};  // highest degree first
  for (size_t k = n; k-- > 0;) {
    const size_t s = n - k;
    std::vector<T> col(s + 1, zero);
    col[0] = one;
    col[1] = zero - a[k][k];
    std::vector<T> vec(s - 1, zero);
    for (size_t i = 0; i + 1 < s; ++i) vec[i] = a[k + 1 + i][k];
    for (size_t t = 2; t <= s; ++t) {
      T dot = zero;
      for (size_t i = 0; i + 1 < s; ++i) dot = dot + a[k][k + 1 + i] * vec[i];
      col[t] = zero - dot;
      if (t == s) break;
      std::vector<T> next(s - 1, zero);
      for (size_t i = 0; i + 1 < s; ++i) {
        for (size_t j = 0; j + 1 < s; ++j) next[i] = next[i] + a[k + 1 + i][k + 1 + j] * vec[j];
      }
      vec = std::move(next);
    }
    std::vector<T> next_poly(s + 1, zero);
    for (size_t i = 0; i <= s; ++i) {
      for (size_t j = 0; j < s && j <= i; ++j) next_poly[i] = next_poly[i] + col[i - j] * poly[j];
    }
    poly = std::move(next_poly);
  }
  return std::vector<T>(poly.rbegin(), poly.rend());
}

}  // namespace jlcs

#endif  // JLCS_BERKOWITZ_H_
