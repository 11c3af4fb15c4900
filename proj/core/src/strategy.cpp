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

#include "lambdalab/strategy.hpp"

#include <algorithm>
#include <unordered_set>

#include "lambdalab/errors.hpp"

namespace lambdalab {

Distribution Distribution::dirac(const Term& t) {
  Distribution d;
  d.add(canonicalize(t), Rational(1));
  return d;
}

void Distribution::add(const CanonicalTerm& state, const Rational& mass) {
  if (mass == 0) return;
  auto [it, inserted] = masses_.try_emplace(state, mass);
  if (!inserted) it->second += mass;
}

Rational Distribution::mass() const {
  Rational total(0);
  for (const auto& [state, m] : masses_) total += m;
  return total;
}

Rational Distribution::at(const CanonicalTerm& state) const {
  const auto it = masses_.find(state);
  return it == masses_.end() ? Rational(0) : it->second;
}

std::string StepCount::str() const {
  return finite_ ? std::to_string(value_) : std::string("div");
}

Strategy::Strategy(Kind kind, Probability epsilon) : kind_(kind), epsilon_(std::move(epsilon)) {
  if (kind_ == Kind::LeftmostOutermost) epsilon_ = Probability(1, 1);
  if (kind_ == Kind::RightmostInnermost) epsilon_ = Probability(0, 1);
}

Strategy Strategy::parse(std::string_view text) {
  if (text == "lo") return lo();
  if (text == "ri") return ri();
  constexpr std::string_view kPrefix = "peps:";
  if (text.starts_with(kPrefix)) return p_eps(Probability::parse(text.substr(kPrefix.size())));
  throw std::invalid_argument("unknown strategy '" + std::string(text) +
                              "' (expected lo, ri or peps:<num>/<den>)");
}

std::string Strategy::str() const {
  switch (kind_) {
    case Kind::LeftmostOutermost: return "lo";
    case Kind::RightmostInnermost: return "ri";
    case Kind::Randomized: return "peps:" + epsilon_.str();
  }
  return "?";
}

namespace {

// Pre-order first redex, found without materializing the full list.
bool find_first(const Term& t, std::vector<Step>& path) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return false;
    case Term::Kind::Abstraction:
      path.push_back(Step::IntoBody);
      if (find_first(t.body(), path)) return true;
      path.pop_back();
      return false;
    case Term::Kind::Application:
      if (t.is_redex()) return true;
      path.push_back(Step::IntoFunction);
      if (find_first(t.function(), path)) return true;
      path.back() = Step::IntoArgument;
      if (find_first(t.argument(), path)) return true;
      path.pop_back();
      return false;
  }
  return false;
}

// Pre-order last redex: search argument, then function, then the node itself.
bool find_last(const Term& t, std::vector<Step>& path) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return false;
    case Term::Kind::Abstraction:
      path.push_back(Step::IntoBody);
      if (find_last(t.body(), path)) return true;
      path.pop_back();
      return false;
    case Term::Kind::Application:
      path.push_back(Step::IntoArgument);
      if (find_last(t.argument(), path)) return true;
      path.back() = Step::IntoFunction;
      if (find_last(t.function(), path)) return true;
      path.pop_back();
      return t.is_redex();
  }
  return false;
}

}  // namespace

std::optional<RedexPath> lo_redex(const Term& t) {
  std::vector<Step> path;
  if (!find_first(t, path)) return std::nullopt;
  return RedexPath(std::move(path));
}

std::optional<RedexPath> ri_redex(const Term& t) {
  std::vector<Step> path;
  if (!find_last(t, path)) return std::nullopt;
  return RedexPath(std::move(path));
}

std::optional<Term> step_lo(const Term& t) {
  const auto p = lo_redex(t);
  if (!p) return std::nullopt;
  return reduce_at(t, *p);
}

std::optional<Term> step_ri(const Term& t) {
  const auto p = ri_redex(t);
  if (!p) return std::nullopt;
  return reduce_at(t, *p);
}

std::vector<Term> anf_successors(const Term& t) {
  std::vector<Term> out;
  std::unordered_set<CanonicalTerm> seen;
  for (const auto& p : redexes(t)) {
    if (!is_anf_redex(t, p)) continue;
    Term u = reduce_at(t, p);
    if (seen.insert(canonicalize(u)).second) out.push_back(std::move(u));
  }
  return out;
}

std::vector<Term> beta_successors(const Term& t) {
  std::vector<Term> out;
  for (const auto& p : redexes(t)) out.push_back(reduce_at(t, p));
  return out;
}

std::optional<std::vector<WeightedTerm>> step_support(const Term& t,
                                                      const Strategy& strategy) {
  const auto lo_path = lo_redex(t);
  if (!lo_path) return std::nullopt;
  const auto ri_path = ri_redex(t);

  const Rational& eps = strategy.epsilon().value();
  std::vector<WeightedTerm> out;
  auto push = [&](const RedexPath& p, const Rational& mass) {
    if (mass == 0) return;
    Term u = reduce_at(t, p);
    CanonicalTerm key = canonicalize(u);
    for (auto& w : out) {
      if (w.state == key) {
        w.mass += mass;
        return;
      }
    }
    out.push_back({std::move(key), std::move(u), mass});
  };
  if (*lo_path == *ri_path) {
    push(*lo_path, Rational(1));
  } else {
    push(*lo_path, eps);
    push(*ri_path, 1 - eps);
  }
  std::sort(out.begin(), out.end(),
            [](const WeightedTerm& a, const WeightedTerm& b) { return a.state < b.state; });
  return out;
}

std::optional<Distribution> step_distribution(const Term& t, const Strategy& strategy) {
  auto support = step_support(t, strategy);
  if (!support) return std::nullopt;
  Distribution d;
  for (const auto& w : *support) d.add(w.state, w.mass);
  return d;
}

std::optional<Distribution> p_eps(const Term& t, const Probability& epsilon) {
  return step_distribution(t, Strategy::p_eps(epsilon));
}

StepCount n_steps(const Term& t, DeterministicStrategy strategy, std::size_t fuel) {
  Term cur = t;
  for (std::size_t n = 0;; ++n) {
    const auto p = strategy == DeterministicStrategy::LeftmostOutermost ? lo_redex(cur)
                                                                        : ri_redex(cur);
    if (!p) return StepCount::finite(n);
    if (n == fuel) return StepCount::fuel_exhausted(fuel);
    cur = reduce_at(cur, *p);
  }
}

std::optional<Rational> foster_bound(const Term& t, const Probability& epsilon,
                                     std::size_t fuel) {
  if (epsilon.is_zero()) throw InvalidEpsilon("the Foster bound needs epsilon > 0");
  const StepCount n = n_steps(t, DeterministicStrategy::LeftmostOutermost, fuel);
  if (!n.is_finite()) return std::nullopt;
  return Rational(static_cast<long>(n.steps())) / epsilon.value();
}

}  // namespace lambdalab
