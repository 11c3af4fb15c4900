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

#include "lambdalab/laws.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "lambdalab/corpus.hpp"
#include "lambdalab/errors.hpp"
#include "lambdalab/montecarlo.hpp"
#include "lambdalab/pars.hpp"
#include "lambdalab/strategy.hpp"
#include "lambdalab/syntax.hpp"

namespace lambdalab {

std::vector<Probability> LawConfig::default_eps_grid() {
  return {Probability(1, 10), Probability(1, 4),  Probability(1, 2),
          Probability(3, 4),  Probability(9, 10), Probability(1, 1)};
}

Corpus merge(const std::vector<Corpus>& parts) {
  Corpus out;
  for (const auto& part : parts) {
    if (!out.description.empty()) out.description += " + ";
    out.description += part.description;
    out.entries.insert(out.entries.end(), part.entries.begin(), part.entries.end());
  }
  return out;
}

std::optional<std::size_t> certified_lo_steps(const Term& t, const LawConfig& config) {
  Term cur = t;
  for (std::size_t n = 0; n <= config.fuel; ++n) {
    const auto p = lo_redex(cur);
    if (!p) return n;
    cur = reduce_at(cur, *p);
    if (cur.size() > config.certify_size_limit) return std::nullopt;
  }
  return std::nullopt;
}

Corpus named_corpus() {
  Corpus c;
  c.description = "named terms";
  for (const char* name : {"I", "omega", "Omega", "example1", "example2"}) {
    c.entries.push_back({name, *named_term(name), std::nullopt});
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    c.entries.push_back({"Cn:" + std::to_string(n), mk_Cn(n), std::nullopt});
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    c.entries.push_back({"Mn:" + std::to_string(n), mk_Mn(n), std::nullopt});
  }
  return c;
}

std::uint64_t corpus_term_seed(std::uint64_t corpus_seed, SubCalculusTag filter,
                               std::uint64_t k) {
  const auto salt = static_cast<std::uint64_t>(filter) + 1;
  return splitmix64(splitmix64(corpus_seed ^ (salt << 56)) + k);
}

Corpus random_corpus(SubCalculusTag filter, const CorpusParams& params, const LawConfig& config) {
  const bool require_wn = filter == SubCalculusTag::LambdaI;
  Corpus c;
  c.description = std::to_string(params.random_count) + " random " + to_string(filter) +
                  (require_wn ? " (LO-certified)" : "") + " terms, size <= " +
                  std::to_string(params.size_cap) + ", seed " + std::to_string(params.seed);
  const std::uint64_t budget = 100 * std::max<std::uint64_t>(params.random_count, 1);
  for (std::uint64_t k = 0; k < budget && c.entries.size() < params.random_count; ++k) {
    const std::uint64_t seed = corpus_term_seed(params.seed, filter, k);
    Term t = random_term(seed, params.size_cap, filter);
    if (require_wn && !certified_lo_steps(t, config)) continue;
    c.entries.push_back({to_string(filter) + "#" + std::to_string(k), std::move(t), seed});
  }
  if (c.entries.size() < params.random_count) {
    throw GenerationExhausted("only " + std::to_string(c.entries.size()) + " of " +
                              std::to_string(params.random_count) + " " + to_string(filter) +
                              " corpus terms found");
  }
  return c;
}

Corpus default_corpus(const CorpusParams& params, const LawConfig& config) {
  return merge({named_corpus(), random_corpus(SubCalculusTag::LambdaA, params, config),
                random_corpus(SubCalculusTag::LambdaI, params, config),
                random_corpus(SubCalculusTag::FullLambda, params, config)});
}

namespace {

enum class Verdict { Pass, Fail, Inconclusive, Skip };

struct Outcome {
  Verdict verdict;
  std::string details;
};

Outcome pass() { return {Verdict::Pass, {}}; }
Outcome skip() { return {Verdict::Skip, {}}; }
Outcome fail(std::string details) { return {Verdict::Fail, std::move(details)}; }
Outcome inconclusive(std::string details) { return {Verdict::Inconclusive, std::move(details)}; }

using Emit = std::function<void(Outcome)>;

LawReport run_law(const std::string& id, const Corpus& corpus,
                  const std::function<void(const CorpusEntry&, const Emit&)>& check) {
  LawReport report;
  report.law_id = id;
  report.corpus = corpus.description;
  for (const auto& entry : corpus.entries) {
    check(entry, [&](Outcome o) {
      switch (o.verdict) {
        case Verdict::Skip:
          ++report.skipped;
          return;
        case Verdict::Pass:
          ++report.cases_run;
          ++report.cases_passed;
          return;
        case Verdict::Inconclusive:
          ++report.cases_run;
          ++report.inconclusive;
          return;
        case Verdict::Fail:
          ++report.cases_run;
          ++report.failures;
          if (!report.counterexample) {
            report.counterexample =
                Counterexample{entry.id, render(entry.term), entry.seed, std::move(o.details)};
          }
          return;
      }
    });
  }
  if (report.cases_run == 0) report.warnings.push_back("vacuous: no applicable cases");
  return report;
}

bool over_brute_force_cap(const Term& t, const LawConfig& config) {
  return t.size() > config.brute_force_size_cap;
}

std::string eps_label(const Probability& eps) { return "eps=" + eps.str(); }

}  // namespace

LawReport law_lo_monotone(const Corpus& corpus, const LawConfig& config) {
  return run_law("lo_monotone", corpus, [&](const CorpusEntry& e, const Emit& emit) {
    const auto k = certified_lo_steps(e.term, config);
    if (!k) return emit(skip());
    const auto paths = redexes(e.term);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const Term u = reduce_at(e.term, paths[i]);
      const StepCount nu = n_steps(u, DeterministicStrategy::LeftmostOutermost, *k);
      if (!nu.is_finite()) {
        return emit(fail("N_LO(t) = " + std::to_string(*k) + " but the reduct at " +
                         paths[i].str() + " (" + render(u) + ") needs more"));
      }
    }
    emit(pass());
  });
}

LawReport law_anf_equal_length(const Corpus& corpus, const LawConfig& config) {
  return run_law("anf_equal_length", corpus, [&](const CorpusEntry& e, const Emit& emit) {
    if (over_brute_force_cap(e.term, config)) return emit(skip());
    const auto g = explore_reductions(e.term, Relation::BetaAnf, config.caps);
    if (!g.complete) return emit(inconclusive("beta-ANF graph exceeds caps"));
    const auto lengths = normalizing_lengths(g);
    if (lengths.unbounded) {
      return emit(fail("beta-ANF sequences to normal form of unbounded length"));
    }
    if (lengths.lengths.size() > 1) {
      std::string seen;
      for (auto len : lengths.lengths) seen += (seen.empty() ? "" : ",") + std::to_string(len);
      return emit(fail("beta-ANF sequences to normal form have lengths {" + seen + "}"));
    }
    emit(pass());
  });
}

LawReport law_subcalculus_stability(const Corpus& corpus, const LawConfig& config) {
  return run_law("subcalculus_stability", corpus, [&](const CorpusEntry& e, const Emit& emit) {
    const bool in_i = is_lambda_I(e.term);
    const bool in_a = is_lambda_A(e.term);
    if (!in_i && !in_a) return emit(skip());
    if (over_brute_force_cap(e.term, config)) return emit(skip());
    const auto g = explore_reductions(e.term, Relation::Beta, config.caps);
    const auto fv = free_vars(e.term);
    for (const auto& u : g.nodes) {
      if (in_i && !is_lambda_I(u)) return emit(fail("reduct leaves lambdaI: " + render(u)));
      if (in_i && free_vars(u) != fv) {
        return emit(fail("reduct changes free variables: " + render(u)));
      }
      if (in_a && !is_lambda_A(u)) return emit(fail("reduct leaves lambdaA: " + render(u)));
    }
    if (!g.complete) return emit(inconclusive("beta graph exceeds caps"));
    if (in_a && !is_strongly_normalizing(g)) {
      return emit(fail("lambdaA term with an infinite reduction sequence"));
    }
    emit(pass());
  });
}

LawReport law_lambdaA_lo_optimal(const Corpus& corpus, const LawConfig& config) {
  return run_law("lambdaA_lo_optimal", corpus, [&](const CorpusEntry& e, const Emit& emit) {
    if (!is_lambda_A(e.term) || over_brute_force_cap(e.term, config)) return emit(skip());
    const StepCount lo = n_steps(e.term, DeterministicStrategy::LeftmostOutermost, config.fuel);
    if (!lo.is_finite()) return emit(inconclusive("LO exhausted fuel"));
    const auto g = explore_reductions(e.term, Relation::Beta, config.caps);
    const auto shortest = shortest_normalizing_length(g);
    if (!shortest) return emit(inconclusive("shortest sequence not certified within caps"));
    if (lo.steps() > *shortest) {
      return emit(fail("N_LO = " + lo.str() + " > shortest sequence " +
                       std::to_string(*shortest)));
    }
    emit(pass());
  });
}

LawReport law_lambdaI_anf_optimal(const Corpus& corpus, const LawConfig& config) {
  return run_law("lambdaI_anf_optimal", corpus, [&](const CorpusEntry& e, const Emit& emit) {
    if (!is_lambda_I(e.term) || over_brute_force_cap(e.term, config)) return emit(skip());
    if (!certified_lo_steps(e.term, config)) return emit(skip());
    const auto anf = explore_reductions(e.term, Relation::BetaAnf, config.caps);
    if (!anf.complete) return emit(inconclusive("beta-ANF graph exceeds caps"));
    const auto lengths = normalizing_lengths(anf);
    if (lengths.unbounded) return emit(fail("beta-ANF sequences of unbounded length"));
    if (lengths.lengths.empty()) return emit(fail("no beta-ANF sequence reaches the normal form"));
    const auto beta = explore_reductions(e.term, Relation::Beta, config.caps);
    const auto shortest = shortest_normalizing_length(beta);
    if (!shortest) return emit(inconclusive("shortest beta sequence not certified within caps"));
    const std::size_t longest_anf = *lengths.lengths.rbegin();
    if (longest_anf > *shortest) {
      return emit(fail("a beta-ANF sequence of length " + std::to_string(longest_anf) +
                       " exceeds the shortest beta sequence of length " +
                       std::to_string(*shortest)));
    }
    emit(pass());
  });
}

LawReport law_eps_minimum(const Corpus& corpus, const LawConfig& config) {
  std::vector<Probability> grid = config.eps_grid;
  const bool has_zero = std::any_of(grid.begin(), grid.end(),
                                    [](const Probability& p) { return p.is_zero(); });
  if (!has_zero) grid.insert(grid.begin(), Probability(0, 1));
  const bool has_one = std::any_of(grid.begin(), grid.end(),
                                   [](const Probability& p) { return p.is_one(); });
  if (!has_one) grid.push_back(Probability(1, 1));

  return run_law("eps_minimum", corpus, [&, grid](const CorpusEntry& e, const Emit& emit) {
    const bool in_a = is_lambda_A(e.term);
    const bool in_i = is_lambda_I(e.term) && certified_lo_steps(e.term, config).has_value();
    if (!in_a && !in_i) return emit(skip());

    std::vector<ExpectedLength> values;
    try {
      for (const auto& eps : grid) {
        values.push_back(analyze(e.term, Strategy::p_eps(eps), config.state_cap).expected_length());
      }
    } catch (const StateCapExceeded& ex) {
      return emit(inconclusive(ex.what()));
    }
    auto value_at = [&](bool one) -> const ExpectedLength& {
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (one ? grid[i].is_one() : grid[i].is_zero()) return values[i];
      }
      return values.front();
    };
    auto check_min = [&](const ExpectedLength& candidate, const char* where) -> std::optional<std::string> {
      if (!candidate.is_finite()) return std::string("infinite expected length at ") + where;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (values[i].is_finite() && values[i].value() < candidate.value()) {
          return "E(" + grid[i].str() + ") = " + values[i].str() + " < E(" + where +
                 ") = " + candidate.str();
        }
      }
      return std::nullopt;
    };
    if (in_a) {
      if (auto bad = check_min(value_at(true), "1")) return emit(fail("lambdaA: " + *bad));
    }
    if (in_i) {
      if (auto bad = check_min(value_at(false), "0")) return emit(fail("lambdaI: " + *bad));
    }
    emit(pass());
  });
}

LawReport law_foster(const Corpus& corpus, const LawConfig& config) {
  return run_law("foster", corpus, [&](const CorpusEntry& e, const Emit& emit) {
    if (!certified_lo_steps(e.term, config)) return emit(skip());
    for (const auto& eps : config.eps_grid) {
      if (eps.is_zero()) continue;
      const auto report = check_foster(e.term, eps, config.fuel, config.state_cap);
      switch (report.verdict) {
        case FosterVerdict::Holds:
          emit(pass());
          break;
        case FosterVerdict::Inconclusive:
          emit(inconclusive(eps_label(eps) + ": " + report.note));
          break;
        case FosterVerdict::Violated:
          emit(fail(eps_label(eps) + ": expected length " + report.exact->str() +
                    " exceeds N_LO/eps = " + to_string(*report.bound)));
          break;
      }
    }
  });
}

LawReport law_pars_semantics(const Corpus& corpus, const LawConfig& config) {
  const Rational tolerance(1, 1'000'000);
  return run_law("pars_semantics", corpus, [&](const CorpusEntry& e, const Emit& emit) {
    for (const auto& eps : config.eps_grid) {
      const Strategy strategy = Strategy::p_eps(eps);
      std::optional<ChainAnalysis> chain;
      try {
        chain = analyze(e.term, strategy, config.state_cap);
      } catch (const StateCapExceeded& ex) {
        emit(inconclusive(eps_label(eps) + ": " + ex.what()));
        continue;
      }
      const auto trace = evolve_trace(e.term, strategy, config.trace_horizon);
      if (trace.masses.front() != 1) {
        emit(fail(eps_label(eps) + ": initial mass is not 1"));
        continue;
      }
      bool monotone = true;
      for (std::size_t i = 0; i + 1 < trace.masses.size(); ++i) {
        monotone = monotone && trace.masses[i + 1] <= trace.masses[i];
      }
      if (!monotone) {
        emit(fail(eps_label(eps) + ": mass increases along the trace"));
        continue;
      }
      const auto der = derivation_length_dist(trace);
      Rational total = trace.masses.back();
      for (const auto& d : der) total += d;
      if (total != 1) {
        emit(fail(eps_label(eps) + ": sum of Der plus tail is " + to_string(total)));
        continue;
      }
      if (der != chain_derivation_length_dist(*chain, der.size())) {
        emit(fail(eps_label(eps) + ": trace and chain disagree on Der"));
        continue;
      }
      if (chain->termination_probability() == 1) {
        const auto truncated = expected_length_truncated(trace);
        Rational gap = chain->expected_length().value() - truncated.value;
        if (gap < 0) gap = -gap;
        if (gap >= tolerance) {
          emit(fail(eps_label(eps) + ": truncated " + to_decimal(truncated.value) +
                    " vs exact " + chain->expected_length().str()));
          continue;
        }
      }
      emit(pass());
    }
  });
}

const std::vector<std::string>& law_ids() {
  static const std::vector<std::string> ids = {
      "lo_monotone",         "anf_equal_length", "subcalculus_stability",
      "lambdaA_lo_optimal",  "lambdaI_anf_optimal", "eps_minimum",
      "foster",              "pars_semantics"};
  return ids;
}

std::vector<LawReport> run_laws(std::string_view suite, const Corpus& corpus,
                                const LawConfig& config) {
  using LawFn = LawReport (*)(const Corpus&, const LawConfig&);
  static const std::vector<std::pair<std::string, LawFn>> table = {
      {"lo_monotone", &law_lo_monotone},
      {"anf_equal_length", &law_anf_equal_length},
      {"subcalculus_stability", &law_subcalculus_stability},
      {"lambdaA_lo_optimal", &law_lambdaA_lo_optimal},
      {"lambdaI_anf_optimal", &law_lambdaI_anf_optimal},
      {"eps_minimum", &law_eps_minimum},
      {"foster", &law_foster},
      {"pars_semantics", &law_pars_semantics},
  };
  std::vector<LawReport> out;
  for (const auto& [id, fn] : table) {
    if (suite == "all" || suite == id) out.push_back(fn(corpus, config));
  }
  if (out.empty()) throw std::invalid_argument("unknown law suite '" + std::string(suite) + "'");
  return out;
}

std::string law_table_text(const std::vector<LawReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(24) << "law" << std::right << std::setw(7) << "run"
      << std::setw(8) << "passed" << std::setw(8) << "failed" << std::setw(8) << "inconc"
      << std::setw(9) << "skipped" << "  status\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(24) << r.law_id << std::right << std::setw(7) << r.cases_run
        << std::setw(8) << r.cases_passed << std::setw(8) << r.failures << std::setw(8)
        << r.inconclusive << std::setw(9) << r.skipped << "  " << (r.ok() ? "PASS" : "FAIL")
        << '\n';
  }
  for (const auto& r : reports) {
    for (const auto& w : r.warnings) out << "warning: " << r.law_id << ": " << w << '\n';
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      out << "counterexample: " << r.law_id << ": " << c.entry_id << " " << c.term;
      if (c.seed) out << " (seed " << *c.seed << ")";
      out << ": " << c.details << '\n';
    }
  }
  return out.str();
}

std::string law_reports_json(const std::vector<LawReport>& reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["law"] = r.law_id;
    j["corpus"] = r.corpus;
    j["cases_run"] = r.cases_run;
    j["cases_passed"] = r.cases_passed;
    j["failures"] = r.failures;
    j["inconclusive"] = r.inconclusive;
    j["skipped"] = r.skipped;
    j["status"] = r.ok() ? "pass" : "fail";
    j["warnings"] = r.warnings;
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      j["counterexample"] = {{"entry", c.entry_id},
                             {"term", c.term},
                             {"seed", c.seed ? nlohmann::ordered_json(*c.seed) : nullptr},
                             {"details", c.details}};
    } else {
      j["counterexample"] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace lambdalab
