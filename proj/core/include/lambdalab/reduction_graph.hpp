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

#ifndef LAMBDALAB_REDUCTION_GRAPH_HPP
#define LAMBDALAB_REDUCTION_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "lambdalab/term.hpp"

namespace lambdalab {

// Exhaustive exploration of every reduction sequence from a term, used as the
// brute-force oracle behind the optimality and equal-length laws.

enum class Relation { Beta, BetaAnf };

struct ReductionCaps {
  // Nodes first reached at this distance are not expanded.
  std::size_t max_depth = 20;
  std::size_t max_states = 20'000;
};

struct ReductionGraph {
  std::vector<Term> nodes;  // nodes[0] is the start term
  std::vector<std::vector<std::size_t>> successors;  // deduplicated up to α
  std::vector<std::size_t> depth;                    // BFS distance
  std::vector<bool> expanded;
  std::vector<bool> normal;
  // True when every reducible node was expanded, i.e. the graph is the whole
  // reachable reduction graph.
  bool complete = false;
};

ReductionGraph explore_reductions(const Term& start, Relation relation,
                                  const ReductionCaps& caps = {});

// Length of a shortest sequence to a normal form. The answer is exact as long
// as every node closer than the returned distance was expanded; nullopt if
// none was found or the search was cut short before one could be certified.
std::optional<std::size_t> shortest_normalizing_length(const ReductionGraph& g);

struct NormalizingLengths {
  // Lengths of all maximal sequences from the start that end in a normal form.
  std::set<std::size_t> lengths;
  // A cycle through nodes that can still reach a normal form, i.e. there are
  // normalizing sequences of unbounded length.
  bool unbounded = false;
};

// Requires g.complete.
NormalizingLengths normalizing_lengths(const ReductionGraph& g);

// Requires g.complete. True iff every sequence from the start is finite.
bool is_strongly_normalizing(const ReductionGraph& g);

}  // namespace lambdalab

#endif  // LAMBDALAB_REDUCTION_GRAPH_HPP
