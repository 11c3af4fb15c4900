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

#ifndef LAMBDALAB_PARS_HPP
#define LAMBDALAB_PARS_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lambdalab/rational.hpp"
#include "lambdalab/strategy.hpp"
#include "lambdalab/term.hpp"

namespace lambdalab {

inline constexpr std::size_t kDefaultStateCap = 100'000;

// Partial distribution over states at a given step index.
struct Configuration {
  Distribution distribution;
  std::size_t step = 0;

  static Configuration dirac(const Term& t) {
    return {Distribution::dirac(t), 0};
  }
};

// Memoizes step_support per α-class for one strategy.
class TransitionCache {
 public:
  explicit TransitionCache(Strategy strategy) : strategy_(std::move(strategy)) {}

  const Strategy& strategy() const noexcept { return strategy_; }
  // nullopt for normal forms.
  const std::optional<std::vector<WeightedTerm>>& successors(
      const CanonicalTerm& state);

 private:
  Strategy strategy_;
  std::unordered_map<CanonicalTerm, std::optional<std::vector<WeightedTerm>>>
      cache_;
};

// One evolution step: σ(s) = Σ_t ρ(t)·P(t→s). Mass sitting on normal forms
// leaves the configuration.
Configuration evolve(const Configuration& rho, const Strategy& strategy);
Configuration evolve(const Configuration& rho, TransitionCache& cache);

struct EvolutionTrace {
  // |ρ_0|, |ρ_1|, ..., |ρ_H|
  std::vector<Rational> masses;
  std::size_t horizon() const noexcept { return masses.size() - 1; }
};

EvolutionTrace evolve_trace(const Term& t, const Strategy& strategy,
                            std::size_t horizon);

// Der(i) = |ρ_i| - |ρ_{i+1}| for i < H.
std::vector<Rational> derivation_length_dist(const EvolutionTrace& trace);

struct TruncatedLength {
  Rational value;           // Σ_{i=1..H} |ρ_i|
  Rational trailing_mass;   // |ρ_H|; the sum is exact when this is 0
  bool exact() const { return trailing_mass == 0; }
};

TruncatedLength expected_length_truncated(const EvolutionTrace& trace);

// Either an exact rational or +∞.
class ExpectedLength {
 public:
  static ExpectedLength finite(Rational value) {
    return ExpectedLength(std::move(value));
  }
  static ExpectedLength infinite() { return ExpectedLength(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  const Rational& value() const { return *value_; }
  // "num/den" or "inf"
  std::string str() const;

  friend bool operator==(const ExpectedLength&, const ExpectedLength&) = default;

 private:
  ExpectedLength() = default;
  explicit ExpectedLength(Rational v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

struct ChainState {
  CanonicalTerm key;
  Term representative;
};

struct ChainEdge {
  static constexpr std::size_t kTerminal = std::numeric_limits<std::size_t>::max();
  std::size_t target;  // state index, or kTerminal for the class trm
  Rational probability;
};

/// Reachable-state graph of a term under a strategy, with normal forms
/// collapsed into the absorbing class trm, plus (once solved) the
/// absorption probability and expected absorption time from the origin.
struct ChainAnalysis {
  struct Solution {
    Rational termination_probability;
    ExpectedLength expected_length = ExpectedLength::infinite();
    // Per-state values, same indexing as `states`.
    std::vector<Rational> state_termination;
    std::vector<ExpectedLength> state_expected;
  };

  CanonicalTerm origin;
  Term origin_term = Term::variable("_");
  Strategy strategy = Strategy::lo();
  // True when the origin itself is normal; `states` is then empty.
  bool origin_is_terminal = false;
  // Non-absorbing states in BFS order; states[0] is the origin.
  std::vector<ChainState> states;
  // rows[i]: outgoing edges of states[i], summing to exactly 1.
  std::vector<std::vector<ChainEdge>> rows;
  std::optional<Solution> solution;

  std::size_t state_count() const noexcept { return states.size() + 1; }
  const Rational& termination_probability() const;
  const ExpectedLength& expected_length() const;
};

// Breadth-first closure of the origin under the strategy's supports. Throws
// StateCapExceeded once more than state_cap distinct states are discovered.
ChainAnalysis explore_states(const Term& t, const Strategy& strategy,
                             std::size_t state_cap = kDefaultStateCap);

// Solves the absorbing-chain hitting system exactly. States that cannot reach
// trm get termination probability 0 and infinite expected time up front;
// the remainder is solved SCC by SCC in reverse topological order.
ChainAnalysis solve_expected_length(ChainAnalysis chain);

ChainAnalysis analyze(const Term& t, const Strategy& strategy,
                      std::size_t state_cap = kDefaultStateCap);

// Absorption-time distribution P{T = i} for i < horizon, computed on the
// chain. Agrees entry-wise with derivation_length_dist on the same horizon.
std::vector<Rational> chain_derivation_length_dist(const ChainAnalysis& chain,
                                                   std::size_t horizon);

enum class FosterVerdict { Holds, Violated, Inconclusive };

std::string to_string(FosterVerdict verdict);

struct FosterReport {
  FosterVerdict verdict = FosterVerdict::Inconclusive;
  std::optional<StepCount> n_lo;
  std::optional<ExpectedLength> exact;
  std::optional<Rational> bound;
  std::string note;
};

// Compares the exact expected length under P_ε with N_LO(t)/ε.
// Throws InvalidEpsilon for ε = 0.
FosterReport check_foster(const Term& t, const Probability& epsilon,
                          std::size_t fuel = kDefaultFuel,
                          std::size_t state_cap = kDefaultStateCap);

std::string chain_report_text(const ChainAnalysis& chain);
std::string chain_report_json(const ChainAnalysis& chain);

}  // namespace lambdalab

#endif  // LAMBDALAB_PARS_HPP
