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

// Test-only oracles. Nothing here calls into the code under test except for
// term construction and rational arithmetic.
#ifndef LAMBDALAB_TESTS_ORACLE_HPP
#define LAMBDALAB_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lambdalab/rational.hpp"
#include "lambdalab/term.hpp"

namespace oracle {

using lambdalab::Rational;
using lambdalab::RedexPath;
using lambdalab::Step;
using lambdalab::Term;

// Renders like the library (minimal parentheses, '\' for lambda) while
// recording the text offset at which every redex begins.
class PositionRenderer {
 public:
  std::string text;
  std::vector<std::pair<std::size_t, RedexPath>> redex_starts;

  explicit PositionRenderer(const Term& t) { emit(t, {}); }

  // Paths of all redexes ordered by where they begin in the text.
  std::vector<RedexPath> textual_order() const {
    auto starts = redex_starts;
    std::sort(starts.begin(), starts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RedexPath> out;
    for (auto& s : starts) out.push_back(s.second);
    return out;
  }

 private:
  void emit(const Term& t, std::vector<Step> path) {
    switch (t.kind()) {
      case Term::Kind::Variable:
        text += t.name();
        return;
      case Term::Kind::Abstraction:
        text += "\\" + t.name() + ".";
        path.push_back(Step::IntoBody);
        emit(t.body(), path);
        return;
      case Term::Kind::Application: {
        if (t.function().is_abstraction()) redex_starts.emplace_back(text.size(), RedexPath(path));
        auto fpath = path;
        fpath.push_back(Step::IntoFunction);
        const bool wrap_f = t.function().is_abstraction();
        if (wrap_f) text += "(";
        emit(t.function(), fpath);
        if (wrap_f) text += ")";
        text += " ";
        auto apath = path;
        apath.push_back(Step::IntoArgument);
        const bool wrap_a = !t.argument().is_variable();
        if (wrap_a) text += "(";
        emit(t.argument(), apath);
        if (wrap_a) text += ")";
        return;
      }
    }
  }
};

// Unconstrained random terms over a small name pool, for property tests.
class TermSource {
 public:
  explicit TermSource(std::uint64_t seed) : rng_(seed) {}

  Term next(int max_size) {
    std::uniform_int_distribution<int> size(1, max_size);
    return grow(size(rng_), {});
  }

 private:
  Term grow(int n, std::vector<std::string> scope) {
    static const char* kNames[] = {"x", "y", "z", "a", "b"};
    if (n <= 1) {
      std::uniform_int_distribution<int> pick(0, 4);
      if (!scope.empty() && pick(rng_) < 3) {
        std::uniform_int_distribution<std::size_t> s(0, scope.size() - 1);
        return lambdalab::var(scope[s(rng_)]);
      }
      return lambdalab::var(kNames[pick(rng_)]);
    }
    std::uniform_int_distribution<int> coin(0, 2);
    if (n == 2 || coin(rng_) == 0) {
      std::uniform_int_distribution<int> b(0, 2);
      std::string binder = kNames[b(rng_)];
      scope.push_back(binder);
      return lambdalab::lam(binder, grow(n - 1, scope));
    }
    std::uniform_int_distribution<int> split(1, n - 2);
    const int left = split(rng_);
    return lambdalab::app(grow(left, scope), grow(n - 1 - left, scope));
  }

  std::mt19937_64 rng_;
};

// Plain Gauss-Jordan over rationals. Returns false if singular.
inline bool gauss_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                        std::vector<Rational>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

// (\x.x x)((\x.x)(\x.x)) under P_eps, transitions written out by hand:
//   A = (\x.x x)(I I)   --eps--> B = (I I)(I I)     --(1-eps)--> C = (\x.x x) I
//   B                   --eps--> D = I (I I)        --(1-eps)--> E = (I I) I
//   C, D, E             --1-->   F = I I
//   F                   --1-->   normal form
// Expected steps h satisfy h = 1 + sum p h' with h(normal form) = 0.
inline Rational example2_expected_length(const Rational& eps) {
  enum { A, B, C, D, E, F, N };
  std::vector<std::vector<Rational>> m(N, std::vector<Rational>(N, Rational(0)));
  std::vector<Rational> rhs(N, Rational(1));
  for (int i = 0; i < N; ++i) m[i][i] = 1;
  m[A][B] -= eps;
  m[A][C] -= 1 - eps;
  m[B][D] -= eps;
  m[B][E] -= 1 - eps;
  m[C][F] -= 1;
  m[D][F] -= 1;
  m[E][F] -= 1;
  std::vector<Rational> h;
  if (!gauss_solve(m, rhs, h)) return Rational(-1);
  return h[A];
}

// Same chain, configuration masses |rho_i| for i = 0..horizon. A normal form
// reached at step i is still counted in rho_i, so |rho_i| = P(T >= i) for
// i >= 1 and |rho_0| = 1.
inline std::vector<Rational> example2_running_mass(const Rational& eps, std::size_t horizon) {
  enum { A, B, C, D, E, F, N };
  std::vector<Rational> p(N, Rational(0));
  p[A] = 1;
  std::vector<Rational> out = {Rational(1)};
  for (std::size_t i = 1; i <= horizon; ++i) {
    Rational total = 0;
    for (const auto& v : p) total += v;
    out.push_back(total);
    std::vector<Rational> q(N, Rational(0));
    q[B] += eps * p[A];
    q[C] += (1 - eps) * p[A];
    q[D] += eps * p[B];
    q[E] += (1 - eps) * p[B];
    q[F] += p[C] + p[D] + p[E];
    p = q;
  }
  return out;
}

}  // namespace oracle

#endif  // LAMBDALAB_TESTS_ORACLE_HPP
