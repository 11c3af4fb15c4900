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

#ifndef LAMBDALAB_LAWS_HPP
#define LAMBDALAB_LAWS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lambdalab/rational.hpp"
#include "lambdalab/reduction_graph.hpp"
#include "lambdalab/term.hpp"

namespace lambdalab {

struct CorpusEntry {
  std::string id;
  Term term;
  // Seed that regenerates the term through random_term, for random entries.
  std::optional<std::uint64_t> seed;
};

struct Corpus {
  std::string description;
  std::vector<CorpusEntry> entries;
};

Corpus merge(const std::vector<Corpus>& parts);

struct LawConfig {
  // Fuel for certifying weak normalization through LO.
  std::size_t fuel = 10'000;
  // Certification gives up on terms that grow past this many nodes.
  std::size_t certify_size_limit = 5'000;
  std::size_t state_cap = 20'000;
  ReductionCaps caps{};
  // Brute-force laws skip terms larger than this.
  std::size_t brute_force_size_cap = 12;
  std::size_t trace_horizon = 2'000;
  std::vector<Probability> eps_grid = default_eps_grid();

  static std::vector<Probability> default_eps_grid();
};

struct CorpusParams {
  std::uint64_t seed = 0;
  std::size_t random_count = 200;
  std::size_t size_cap = 12;
};

// I, omega, Omega, example1, example2, Cn:1..5 and Mn:1..5.
Corpus named_corpus();
// `count` λA terms, `count` LO-certified λI terms, or `count` unrestricted
// terms, each with its replay seed.
Corpus random_corpus(SubCalculusTag filter, const CorpusParams& params,
                     const LawConfig& config = {});
Corpus default_corpus(const CorpusParams& params = {}, const LawConfig& config = {});

// Replay seed of the k-th candidate of a random corpus.
std::uint64_t corpus_term_seed(std::uint64_t corpus_seed, SubCalculusTag filter,
                               std::uint64_t k);

// N_LO(t) when LO reaches a normal form within the configured fuel and size.
std::optional<std::size_t> certified_lo_steps(const Term& t,
                                              const LawConfig& config);

struct Counterexample {
  std::string entry_id;
  std::string term;
  std::optional<std::uint64_t> seed;
  std::string details;
};

struct LawReport {
  std::string law_id;
  std::string corpus;
  std::size_t cases_run = 0;
  std::size_t cases_passed = 0;
  std::size_t inconclusive = 0;
  std::size_t failures = 0;
  // Corpus entries outside the law's scope or over the brute-force caps.
  std::size_t skipped = 0;
  // The first counterexample found, if any.
  std::optional<Counterexample> counterexample;
  std::vector<std::string> warnings;

  bool ok() const noexcept { return failures == 0; }
  double inconclusive_fraction() const noexcept {
    return cases_run == 0 ? 0.0
                          : static_cast<double>(inconclusive) /
                                static_cast<double>(cases_run);
  }
};

// N_LO(u) ≤ N_LO(t) for every one-step reduct u of a certified term t.
LawReport law_lo_monotone(const Corpus& corpus, const LawConfig& config = {});
// All maximal β-ANF sequences ending in a normal form have one length.
// Fails on some terms, e.g. (\y.(\u.a) (y (\z.\w.z))) (\x.b) has β-ANF
// sequences of lengths 2 and 3; the law reports such terms as counterexamples.
LawReport law_anf_equal_length(const Corpus& corpus, const LawConfig& config = {});
// λI and λA are closed under β (λI also keeps its free variables) and λA
// terms are strongly normalizing.
LawReport law_subcalculus_stability(const Corpus& corpus,
                                    const LawConfig& config = {});
// For λA terms, N_LO is minimal among all sequences to normal form.
LawReport law_lambdaA_lo_optimal(const Corpus& corpus, const LawConfig& config = {});
// For λI terms, every β-ANF sequence to normal form is no longer than any
// β sequence to normal form. Fails on (\x.(\y.y y) (x z)) (\w.w), where
// β-ANF needs 4 steps against a shortest β sequence of 3.
LawReport law_lambdaI_anf_optimal(const Corpus& corpus, const LawConfig& config = {});
// Over the ε grid, exact expected length under P_ε is minimal at ε = 1 on
// λA terms and at ε = 0 on normalizing λI terms.
LawReport law_eps_minimum(const Corpus& corpus, const LawConfig& config = {});
// Exact expected length under P_ε is at most N_LO/ε for every grid ε > 0.
LawReport law_foster(const Corpus& corpus, const LawConfig& config = {});
// Evolution traces lose mass monotonically, conserve Σ Der + tail = 1, and
// their truncated expected length matches the chain solver to 1e-6.
LawReport law_pars_semantics(const Corpus& corpus, const LawConfig& config = {});

const std::vector<std::string>& law_ids();
// Runs one law by id, or all of them for "all". Throws std::invalid_argument
// for unknown ids.
std::vector<LawReport> run_laws(std::string_view suite, const Corpus& corpus,
                                const LawConfig& config = {});

std::string law_table_text(const std::vector<LawReport>& reports);
std::string law_reports_json(const std::vector<LawReport>& reports);

}  // namespace lambdalab

#endif  // LAMBDALAB_LAWS_HPP
