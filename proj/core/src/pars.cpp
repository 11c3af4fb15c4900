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

#include "lambdalab/pars.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "lambdalab/errors.hpp"
#include "lambdalab/linear_system.hpp"
#include "lambdalab/syntax.hpp"

namespace lambdalab {

const std::optional<std::vector<WeightedTerm>>& TransitionCache::successors(
    const CanonicalTerm& state) {
  if (const auto it = cache_.find(state); it != cache_.end()) return it->second;
  auto support = step_support(decode(state), strategy_);
  return cache_.emplace(state, std::move(support)).first->second;
}

Configuration evolve(const Configuration& rho, TransitionCache& cache) {
  Configuration next;
  next.step = rho.step + 1;
  for (const auto& [state, mass] : rho.distribution) {
    const auto& succ = cache.successors(state);
    if (!succ) continue;  // normal form: P(s -> .) = 0
    for (const auto& w : *succ) next.distribution.add(w.state, mass * w.mass);
  }
  return next;
}

Configuration evolve(const Configuration& rho, const Strategy& strategy) {
  TransitionCache cache(strategy);
  return evolve(rho, cache);
}

EvolutionTrace evolve_trace(const Term& t, const Strategy& strategy, std::size_t horizon) {
  TransitionCache cache(strategy);
  EvolutionTrace trace;
  trace.masses.reserve(horizon + 1);
  Configuration rho = Configuration::dirac(t);
  trace.masses.push_back(rho.distribution.mass());
  for (std::size_t i = 0; i < horizon; ++i) {
    rho = evolve(rho, cache);
    trace.masses.push_back(rho.distribution.mass());
  }
  return trace;
}

std::vector<Rational> derivation_length_dist(const EvolutionTrace& trace) {
  std::vector<Rational> der;
  if (trace.masses.size() < 2) return der;
  der.reserve(trace.masses.size() - 1);
  for (std::size_t i = 0; i + 1 < trace.masses.size(); ++i) {
    der.push_back(trace.masses[i] - trace.masses[i + 1]);
  }
  return der;
}

TruncatedLength expected_length_truncated(const EvolutionTrace& trace) {
  TruncatedLength out{Rational(0), trace.masses.back()};
  for (std::size_t i = 1; i < trace.masses.size(); ++i) out.value += trace.masses[i];
  return out;
}

std::string ExpectedLength::str() const { return value_ ? to_string(*value_) : "inf"; }

const Rational& ChainAnalysis::termination_probability() const {
  if (!solution) throw Error("chain has not been solved");
  return solution->termination_probability;
}

const ExpectedLength& ChainAnalysis::expected_length() const {
  if (!solution) throw Error("chain has not been solved");
  return solution->expected_length;
}

ChainAnalysis explore_states(const Term& t, const Strategy& strategy, std::size_t state_cap) {
  ChainAnalysis chain;
  chain.origin = canonicalize(t);
  chain.origin_term = t;
  chain.strategy = strategy;
  if (is_normal_form(t)) {
    chain.origin_is_terminal = true;
    return chain;
  }

  std::unordered_map<CanonicalTerm, std::size_t> index;
  index.emplace(chain.origin, 0);
  chain.states.push_back({chain.origin, t});

  for (std::size_t i = 0; i < chain.states.size(); ++i) {
    const Term current = chain.states[i].representative;
    const auto support = step_support(current, strategy);
    std::vector<ChainEdge> row;
    Rational to_terminal(0);
    for (const auto& w : *support) {
      if (is_normal_form(w.term)) {
        to_terminal += w.mass;
        continue;
      }
      auto [it, inserted] = index.try_emplace(w.state, chain.states.size());
      if (inserted) {
        if (chain.states.size() >= state_cap) {
          throw StateCapExceeded(state_cap, chain.states.size() - i);
        }
        chain.states.push_back({w.state, w.term});
      }
      row.push_back({it->second, w.mass});
    }
    if (to_terminal != 0) row.push_back({ChainEdge::kTerminal, to_terminal});
    chain.rows.push_back(std::move(row));
  }
  return chain;
}

namespace {

// Tarjan's algorithm without recursion. SCCs come out sinks first, i.e. in
// reverse topological order of the condensation.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const std::vector<std::vector<ChainEdge>>& rows) {
  const std::size_t n = rows.size();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> order(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t node;
    std::size_t next_edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != kUnvisited) continue;
    std::vector<Frame> frames{{root, 0}};
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& edges = rows[f.node];
      if (f.next_edge < edges.size()) {
        const std::size_t w = edges[f.next_edge++].target;
        if (w == ChainEdge::kTerminal) continue;
        if (order[w] == kUnvisited) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], order[w]);
        }
        continue;
      }
      const std::size_t v = f.node;
      frames.pop_back();
      if (!frames.empty()) {
        low[frames.back().node] = std::min(low[frames.back().node], low[v]);
      }
      if (low[v] == order[v]) {
        std::vector<std::size_t> component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

std::vector<bool> can_reach_terminal(const std::vector<std::vector<ChainEdge>>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<bool> reach(n, false);
  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : rows[i]) {
      if (e.target == ChainEdge::kTerminal) {
        if (!reach[i]) {
          reach[i] = true;
          work.push_back(i);
        }
      } else {
        preds[e.target].push_back(i);
      }
    }
  }
  while (!work.empty()) {
    const std::size_t j = work.front();
    work.pop_front();
    for (std::size_t i : preds[j]) {
      if (!reach[i]) {
        reach[i] = true;
        work.push_back(i);
      }
    }
  }
  return reach;
}

// Solves x_i = base + Σ_{j in component} p_ij x_j + Σ_{e leaving} external(e)
// on one component.
template <typename External>
std::vector<Rational> solve_component(const std::vector<std::vector<ChainEdge>>& rows,
                                      const std::vector<std::size_t>& component,
                                      const Rational& base, External external) {
  const std::size_t m = component.size();
  std::unordered_map<std::size_t, std::size_t> local;
  for (std::size_t k = 0; k < m; ++k) local.emplace(component[k], k);

  RationalMatrix a(m, std::vector<Rational>(m, Rational(0)));
  std::vector<Rational> b(m, base);
  for (std::size_t k = 0; k < m; ++k) {
    a[k][k] = 1;
    for (const auto& e : rows[component[k]]) {
      if (e.target != ChainEdge::kTerminal) {
        if (const auto it = local.find(e.target); it != local.end()) {
          a[k][it->second] -= e.probability;
          continue;
        }
      }
      b[k] += external(e);
    }
  }
  if (m == 1) {
    if (a[0][0] == 0) throw SingularSystem("closed single-state component");
    return {b[0] / a[0][0]};
  }
  return solve_exact(a, b);
}

}  // namespace

ChainAnalysis solve_expected_length(ChainAnalysis chain) {
  ChainAnalysis::Solution sol;
  if (chain.origin_is_terminal) {
    sol.termination_probability = 1;
    sol.expected_length = ExpectedLength::finite(Rational(0));
    chain.solution = std::move(sol);
    return chain;
  }

  const auto& rows = chain.rows;
  const std::size_t n = rows.size();
  const auto reach = can_reach_terminal(rows);
  const auto components = strongly_connected_components(rows);

  std::vector<Rational> absorb(n, Rational(0));
  for (const auto& comp : components) {
    if (!reach[comp.front()]) continue;
    const auto values = solve_component(rows, comp, Rational(0), [&](const ChainEdge& e) {
      if (e.target == ChainEdge::kTerminal) return Rational(e.probability);
      return Rational(e.probability * absorb[e.target]);
    });
    for (std::size_t k = 0; k < comp.size(); ++k) absorb[comp[k]] = values[k];
  }

  std::vector<ExpectedLength> expected(n, ExpectedLength::infinite());
  for (const auto& comp : components) {
    if (absorb[comp.front()] != 1) continue;
    // Every successor of a certainly-absorbed state is certainly absorbed
    // too, so all outside values below are finite.
    const auto values = solve_component(rows, comp, Rational(1), [&](const ChainEdge& e) {
      if (e.target == ChainEdge::kTerminal) return Rational(0);
      return Rational(e.probability * expected[e.target].value());
    });
    for (std::size_t k = 0; k < comp.size(); ++k) {
      expected[comp[k]] = ExpectedLength::finite(values[k]);
    }
  }

  sol.termination_probability = absorb[0];
  sol.expected_length = expected[0];
  sol.state_termination = std::move(absorb);
  sol.state_expected = std::move(expected);
  chain.solution = std::move(sol);
  return chain;
}

ChainAnalysis analyze(const Term& t, const Strategy& strategy, std::size_t state_cap) {
  return solve_expected_length(explore_states(t, strategy, state_cap));
}

std::vector<Rational> chain_derivation_length_dist(const ChainAnalysis& chain,
                                                   std::size_t horizon) {
  std::vector<Rational> der(horizon, Rational(0));
  if (horizon == 0) return der;
  if (chain.origin_is_terminal) {
    der[0] = 1;
    return der;
  }
  const std::size_t n = chain.rows.size();
  std::vector<Rational> live(n, Rational(0));
  live[0] = 1;
  for (std::size_t i = 1; i < horizon; ++i) {
    std::vector<Rational> next(n, Rational(0));
    Rational absorbed(0);
    for (std::size_t s = 0; s < n; ++s) {
      if (live[s] == 0) continue;
      for (const auto& e : chain.rows[s]) {
        if (e.target == ChainEdge::kTerminal) {
          absorbed += live[s] * e.probability;
        } else {
          next[e.target] += live[s] * e.probability;
        }
      }
    }
    der[i] = absorbed;
    live = std::move(next);
  }
  return der;
}

std::string to_string(FosterVerdict verdict) {
  switch (verdict) {
    case FosterVerdict::Holds: return "holds";
    case FosterVerdict::Violated: return "violated";
    case FosterVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

FosterReport check_foster(const Term& t, const Probability& epsilon, std::size_t fuel,
                          std::size_t state_cap) {
  if (epsilon.is_zero()) throw InvalidEpsilon("the Foster bound needs epsilon > 0");
  FosterReport report;
  report.n_lo = n_steps(t, DeterministicStrategy::LeftmostOutermost, fuel);
  if (!report.n_lo->is_finite()) {
    report.note = "LO exhausted fuel " + std::to_string(fuel);
    return report;
  }
  report.bound = Rational(static_cast<long>(report.n_lo->steps())) / epsilon.value();
  try {
    const auto chain = analyze(t, Strategy::p_eps(epsilon), state_cap);
    report.exact = chain.expected_length();
  } catch (const StateCapExceeded& e) {
    report.note = e.what();
    return report;
  }
  const bool holds = report.exact->is_finite() && report.exact->value() <= *report.bound;
  report.verdict = holds ? FosterVerdict::Holds : FosterVerdict::Violated;
  return report;
}

namespace {

std::string state_id(std::size_t target) {
  return target == ChainEdge::kTerminal ? std::string("trm") : "s" + std::to_string(target);
}

}  // namespace

std::string chain_report_text(const ChainAnalysis& chain) {
  std::ostringstream out;
  out << "origin: " << render(chain.origin_term) << '\n';
  out << "strategy: " << chain.strategy.str() << '\n';
  out << "states: " << chain.state_count() << " (including trm)\n";
  for (std::size_t i = 0; i < chain.states.size(); ++i) {
    out << "  " << state_id(i) << "  " << render(chain.states[i].representative) << '\n';
  }
  out << "  trm  <normal forms>\n";
  out << "transitions:\n";
  for (std::size_t i = 0; i < chain.rows.size(); ++i) {
    for (const auto& e : chain.rows[i]) {
      out << "  " << state_id(i) << " -> " << state_id(e.target) << "  "
          << to_string(e.probability) << '\n';
    }
  }
  if (chain.solution) {
    out << "termination_prob: " << to_string(chain.termination_probability()) << '\n';
    out << "expected_length: " << chain.expected_length().str();
    if (chain.expected_length().is_finite()) {
      out << " (" << to_decimal(chain.expected_length().value()) << ")";
    }
    out << '\n';
  }
  return out.str();
}

std::string chain_report_json(const ChainAnalysis& chain) {
  nlohmann::ordered_json j;
  j["origin"] = render(chain.origin_term);
  j["strategy"] = chain.strategy.str();
  auto states = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < chain.states.size(); ++i) {
    states.push_back({{"id", state_id(i)}, {"term", render(chain.states[i].representative)}});
  }
  states.push_back({{"id", "trm"}, {"term", nullptr}});
  j["states"] = std::move(states);
  auto transitions = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < chain.rows.size(); ++i) {
    for (const auto& e : chain.rows[i]) {
      transitions.push_back({{"from", state_id(i)},
                             {"to", state_id(e.target)},
                             {"probability", to_string(e.probability)}});
    }
  }
  j["transitions"] = std::move(transitions);
  if (chain.solution) {
    j["expected_length"] = chain.expected_length().str();
    j["termination_prob"] = to_string(chain.termination_probability());
  }
  return j.dump(2);
}

}  // namespace lambdalab
