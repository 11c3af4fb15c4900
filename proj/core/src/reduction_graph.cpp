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

#include "lambdalab/reduction_graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "lambdalab/strategy.hpp"

namespace lambdalab {

ReductionGraph explore_reductions(const Term& start, Relation relation,
                                  const ReductionCaps& caps) {
  ReductionGraph g;
  std::unordered_map<CanonicalTerm, std::size_t> index;
  auto intern = [&](const Term& t, std::size_t depth) -> std::optional<std::size_t> {
    auto key = canonicalize(t);
    if (const auto it = index.find(key); it != index.end()) return it->second;
    if (g.nodes.size() >= caps.max_states) return std::nullopt;
    index.emplace(std::move(key), g.nodes.size());
    g.nodes.push_back(t);
    g.successors.emplace_back();
    g.depth.push_back(depth);
    g.expanded.push_back(false);
    g.normal.push_back(is_normal_form(t));
    return g.nodes.size() - 1;
  };

  intern(start, 0);
  bool complete = true;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const Term node = g.nodes[i];
    if (g.normal[i]) {
      g.expanded[i] = true;
      continue;
    }
    if (g.depth[i] >= caps.max_depth) {
      complete = false;
      continue;
    }
    const auto succ = relation == Relation::Beta ? beta_successors(node) : anf_successors(node);
    bool all_interned = true;
    std::vector<std::size_t> targets;
    for (const auto& u : succ) {
      const auto j = intern(u, g.depth[i] + 1);
      if (!j) {
        all_interned = false;
        break;
      }
      if (std::find(targets.begin(), targets.end(), *j) == targets.end()) targets.push_back(*j);
    }
    if (!all_interned) {
      complete = false;
      break;
    }
    g.successors[i] = std::move(targets);
    g.expanded[i] = true;
  }
  g.complete = complete;
  return g;
}

std::optional<std::size_t> shortest_normalizing_length(const ReductionGraph& g) {
  // Nodes are discovered in BFS order, so each recorded depth is the exact
  // distance from the start.
  std::optional<std::size_t> best;
  std::optional<std::size_t> gap;  // shallowest reducible node left unexpanded
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (g.normal[i]) {
      if (!best || g.depth[i] < *best) best = g.depth[i];
    } else if (!g.expanded[i]) {
      if (!gap || g.depth[i] < *gap) gap = g.depth[i];
    }
  }
  // A normal form hidden behind the gap is at least one level below it.
  if (gap && (!best || *best > *gap + 1)) return std::nullopt;
  return best;
}

namespace {

// Nodes from which some normal form is reachable.
std::vector<bool> co_reachable_to_normal(const ReductionGraph& g) {
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<std::size_t>> preds(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : g.successors[i]) preds[j].push_back(i);
  }
  std::vector<bool> good(n, false);
  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.normal[i]) {
      good[i] = true;
      work.push_back(i);
    }
  }
  while (!work.empty()) {
    const std::size_t j = work.front();
    work.pop_front();
    for (std::size_t i : preds[j]) {
      if (!good[i]) {
        good[i] = true;
        work.push_back(i);
      }
    }
  }
  return good;
}

// Iterative DFS cycle detection restricted to `allowed` nodes.
bool has_cycle(const ReductionGraph& g, const std::vector<bool>& allowed) {
  enum Color : std::uint8_t { White, Grey, Black };
  std::vector<Color> color(g.nodes.size(), White);
  for (std::size_t root = 0; root < g.nodes.size(); ++root) {
    if (!allowed[root] || color[root] != White) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = Grey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next == g.successors[node].size()) {
        color[node] = Black;
        stack.pop_back();
        continue;
      }
      const std::size_t succ = g.successors[node][next++];
      if (!allowed[succ]) continue;
      if (color[succ] == Grey) return true;
      if (color[succ] == White) {
        color[succ] = Grey;
        stack.emplace_back(succ, 0);
      }
    }
  }
  return false;
}

}  // namespace

NormalizingLengths normalizing_lengths(const ReductionGraph& g) {
  NormalizingLengths out;
  const auto good = co_reachable_to_normal(g);
  if (!good[0]) return out;
  if (has_cycle(g, good)) {
    out.unbounded = true;
    return out;
  }
  // Acyclic on `good`: memoized length sets, children before parents.
  const std::size_t n = g.nodes.size();
  std::vector<std::optional<std::set<std::size_t>>> memo(n);
  std::vector<std::pair<std::size_t, bool>> stack{{0, false}};
  while (!stack.empty()) {
    auto [node, ready] = stack.back();
    stack.pop_back();
    if (memo[node]) continue;
    if (!ready) {
      stack.emplace_back(node, true);
      for (std::size_t s : g.successors[node]) {
        if (good[s] && !memo[s]) stack.emplace_back(s, false);
      }
      continue;
    }
    std::set<std::size_t> lengths;
    if (g.normal[node]) lengths.insert(0);
    for (std::size_t s : g.successors[node]) {
      if (!good[s]) continue;
      for (std::size_t len : *memo[s]) lengths.insert(len + 1);
    }
    memo[node] = std::move(lengths);
  }
  out.lengths = *memo[0];
  return out;
}

bool is_strongly_normalizing(const ReductionGraph& g) {
  return !has_cycle(g, std::vector<bool>(g.nodes.size(), true));
}

}  // namespace lambdalab
