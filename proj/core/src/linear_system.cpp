// Copyright 2026 The lambdalab Authors.
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

#include "lambdalab/linear_system.hpp"

#include <utility>

#include "lambdalab/errors.hpp"

namespace lambdalab {

namespace mp = boost::multiprecision;

std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw SingularSystem("right-hand side has the wrong length");
  if (n == 0) return {};

  // Augmented integer matrix: each row scaled by the lcm of its denominators.
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw SingularSystem("matrix is not square");
    Integer scale = mp::denominator(b[i]);
    for (const auto& v : a[i]) scale = mp::lcm(scale, Integer(mp::denominator(v)));
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = mp::numerator(a[i][j]) * (scale / mp::denominator(a[i][j]));
    }
    m[i][n] = mp::numerator(b[i]) * (scale / mp::denominator(b[i]));
  }

  Integer previous_pivot = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) throw SingularSystem("singular system at column " + std::to_string(k));
    if (pivot != k) std::swap(m[pivot], m[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        // Exact by Sylvester's identity.
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous_pivot;
      }
      m[i][k] = 0;
    }
    previous_pivot = m[k][k];
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
    x[i] = acc / Rational(m[i][i]);
  }
  return x;
}

}  // namespace lambdalab
