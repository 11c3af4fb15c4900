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

#ifndef LAMBDALAB_STRATEGY_HPP
#define LAMBDALAB_STRATEGY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lambdalab/rational.hpp"
#include "lambdalab/term.hpp"

namespace lambdalab {

inline constexpr std::size_t kDefaultFuel = 10'000;

// Partial probability distribution over α-classes of terms. Only strictly
// positive masses are stored; iteration order is the canonical-encoding
// order, so anything derived from a Distribution is deterministic.
class Distribution {
 public:
  using Map = std::map<CanonicalTerm, Rational>;

  Distribution() = default;
  static Distribution dirac(const Term& t);

  // Adds mass to a state; zero masses are ignored.
  void add(const CanonicalTerm& state, const Rational& mass);

  Rational mass() const;
  Rational at(const CanonicalTerm& state) const;
  bool empty() const noexcept { return masses_.empty(); }
  std::size_t support_size() const noexcept { return masses_.size(); }

  Map::const_iterator begin() const noexcept { return masses_.begin(); }
  Map::const_iterator end() const noexcept { return masses_.end(); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  Map masses_;
};

class StepCount {
 public:
  static StepCount finite(std::size_t steps) { return StepCount(true, steps); }
  static StepCount fuel_exhausted(std::size_t fuel) {
    return StepCount(false, fuel);
  }

  bool is_finite() const noexcept { return finite_; }
  // Number of steps; only meaningful when is_finite().
  std::size_t steps() const noexcept { return value_; }
  // Fuel that ran out; only meaningful when !is_finite().
  std::size_t fuel() const noexcept { return value_; }

  // "<n>" or "div"
  std::string str() const;

  friend bool operator==(const StepCount&, const StepCount&) = default;

 private:
  StepCount(bool finite, std::size_t value) : finite_(finite), value_(value) {}
  bool finite_;
  std::size_t value_;
};

enum class DeterministicStrategy { LeftmostOutermost, RightmostInnermost };

/// A reduction strategy for the λ-calculus: LO, RI, or the randomized P_ε
/// that contracts the LO-redex with probability ε and the RI-redex with
/// probability 1-ε.
class Strategy {
 public:
  enum class Kind { LeftmostOutermost, RightmostInnermost, Randomized };

  static Strategy lo() { return Strategy(Kind::LeftmostOutermost, {}); }
  static Strategy ri() { return Strategy(Kind::RightmostInnermost, {}); }
  static Strategy p_eps(Probability epsilon) {
    return Strategy(Kind::Randomized, std::move(epsilon));
  }
  // "lo", "ri" or "peps:<num>/<den>" (also "peps:0" / "peps:1").
  static Strategy parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  // For LO this is 1, for RI 0.
  const Probability& epsilon() const noexcept { return epsilon_; }
  std::string str() const;

 private:
  Strategy(Kind kind, Probability epsilon);
  Kind kind_;
  Probability epsilon_;
};

// One successor of a probabilistic step, with a representative term.
struct WeightedTerm {
  CanonicalTerm state;
  Term term;
  Rational mass;
};

// Path of the leftmost-outermost / rightmost-innermost redex, if any.
std::optional<RedexPath> lo_redex(const Term& t);
std::optional<RedexPath> ri_redex(const Term& t);

std::optional<Term> step_lo(const Term& t);
std::optional<Term> step_ri(const Term& t);

// All one-step β-ANF reducts, deduplicated up to α, in redex order.
std::vector<Term> anf_successors(const Term& t);

// All one-step β reducts (one per redex, not deduplicated), in redex order.
std::vector<Term> beta_successors(const Term& t);

// P_ε(t): nullopt iff t is normal. Mass ε on the LO-reduct, 1-ε on the
// RI-reduct; a single redex gives a Dirac; α-equal reducts merge.
std::optional<Distribution> p_eps(const Term& t, const Probability& epsilon);

// Successor law of any strategy, merged by α-class and sorted by state.
// Zero-mass branches are dropped. nullopt iff t is normal.
std::optional<std::vector<WeightedTerm>> step_support(const Term& t,
                                                      const Strategy& strategy);
std::optional<Distribution> step_distribution(const Term& t,
                                              const Strategy& strategy);

StepCount n_steps(const Term& t, DeterministicStrategy strategy,
                  std::size_t fuel = kDefaultFuel);

// Bound N_LO(t)/ε on the expected derivation length under P_ε. nullopt when
// the LO count is not certified within `fuel`. Throws InvalidEpsilon for ε=0.
std::optional<Rational> foster_bound(const Term& t, const Probability& epsilon,
                                     std::size_t fuel = kDefaultFuel);

}  // namespace lambdalab

#endif  // LAMBDALAB_STRATEGY_HPP
