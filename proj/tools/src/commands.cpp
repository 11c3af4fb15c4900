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

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "lambdalab/cli/commands.hpp"
#include "lambdalab/corpus.hpp"
#include "lambdalab/errors.hpp"
#include "lambdalab/laws.hpp"
#include "lambdalab/montecarlo.hpp"
#include "lambdalab/strategy.hpp"
#include "lambdalab/syntax.hpp"

namespace lambdalab::cli {

using json = nlohmann::ordered_json;

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

namespace {

std::string fixed(double v, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

}  // namespace

int cmd_reduce(const ReduceOptions& opts, std::ostream& out) {
  const Term start = resolve_term(opts.term);
  const Strategy strategy = Strategy::parse(opts.strategy);
  RandomStream rng(opts.seed);

  struct Step {
    RedexPath path;
    Term term;
  };
  std::vector<Step> trace;
  Term cur = start;
  bool normal = false;
  while (true) {
    const auto lo = lo_redex(cur);
    if (!lo) {
      normal = true;
      break;
    }
    if (trace.size() == opts.fuel) break;
    RedexPath path = *lo;
    if (strategy.kind() == Strategy::Kind::RightmostInnermost) {
      path = *ri_redex(cur);
    } else if (strategy.kind() == Strategy::Kind::Randomized) {
      const auto ri = *ri_redex(cur);
      if (!(ri == path) && !rng.bernoulli(strategy.epsilon())) path = ri;
    }
    cur = reduce_at(cur, path);
    trace.push_back({path, cur});
  }

  if (opts.format == Format::Json) {
    json j;
    j["term"] = render(start);
    j["strategy"] = strategy.str();
    auto steps = json::array();
    for (std::size_t i = 0; i < trace.size(); ++i) {
      steps.push_back({{"step", i + 1}, {"redex", trace[i].path.str()},
                       {"term", render(trace[i].term)}});
    }
    j["steps"] = std::move(steps);
    j["status"] = normal ? "normal_form" : "fuel_exhausted";
    out << j.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < trace.size(); ++i) {
      out << (i + 1) << ": " << render(trace[i].term) << "    [" << trace[i].path.str()
          << "]\n";
    }
    if (normal) {
      out << "normal form after " << trace.size() << " step(s)\n";
    } else {
      out << "fuel exhausted after " << trace.size() << " step(s)\n";
    }
  }
  return normal ? kExitOk : kExitInconclusive;
}

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out) {
  const Term t = resolve_term(opts.term);
  const auto chain = analyze(t, Strategy::p_eps(Probability::parse(opts.eps)), opts.state_cap);
  if (opts.format == Format::Json) {
    out << chain_report_json(chain) << '\n';
  } else {
    out << chain_report_text(chain);
  }
  return kExitOk;
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out) {
  const auto rows = sweep(opts.term, parse_grid(opts.grid), opts.fuel, opts.state_cap);
  switch (opts.format) {
    case Format::Csv:
      out << sweep_csv(rows);
      break;
    case Format::Json: {
      auto arr = json::array();
      for (const auto& r : rows) {
        json j;
        j["term_id"] = r.term_id;
        j["epsilon"] = r.epsilon.str();
        j["expected_length"] = r.expected_length.str();
        j["expected_length_decimal"] = r.expected_length_decimal;
        j["termination_prob"] = to_string(r.termination_prob);
        j["n_lo"] = r.n_lo ? json(*r.n_lo) : json("div");
        j["n_ri"] = r.n_ri ? json(*r.n_ri) : json("div");
        j["foster_bound"] = r.foster_bound ? json(to_string(*r.foster_bound))
                                           : json(r.epsilon.is_zero() ? "inf" : "div");
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::Text: {
      out << std::left << std::setw(10) << "epsilon" << std::setw(16) << "E[len]"
          << std::setw(16) << "decimal" << std::setw(10) << "P[term]" << std::setw(6) << "LO"
          << std::setw(6) << "RI" << "N_LO/eps\n";
      for (const auto& r : rows) {
        out << std::left << std::setw(10) << r.epsilon.str() << std::setw(16)
            << r.expected_length.str() << std::setw(16) << r.expected_length_decimal
            << std::setw(10) << to_string(r.termination_prob) << std::setw(6)
            << (r.n_lo ? std::to_string(*r.n_lo) : "div") << std::setw(6)
            << (r.n_ri ? std::to_string(*r.n_ri) : "div")
            << (r.foster_bound ? to_string(*r.foster_bound)
                               : (r.epsilon.is_zero() ? "inf" : "div"))
            << '\n';
      }
      break;
    }
  }
  return kExitOk;
}

int cmd_montecarlo(const MonteCarloOptions& opts, std::ostream& out) {
  const Term t = resolve_term(opts.term);
  const Strategy strategy = Strategy::p_eps(Probability::parse(opts.eps));
  const auto est = estimate(t, strategy, opts.seed, opts.samples, opts.max_steps, opts.threads);
  if (opts.format == Format::Json) {
    json j;
    j["term"] = render(t);
    j["strategy"] = strategy.str();
    j["seed"] = opts.seed;
    j["samples"] = est.sample_count;
    j["cutoff"] = est.cutoff_count;
    j["mean"] = fixed(est.mean);
    j["sample_variance"] = fixed(est.sample_variance);
    j["confidence_halfwidth_95"] = fixed(est.confidence_halfwidth_95);
    out << j.dump(2) << '\n';
  } else {
    out << "term:       " << render(t) << '\n'
        << "strategy:   " << strategy.str() << '\n'
        << "seed:       " << opts.seed << '\n'
        << "samples:    " << est.sample_count << " (" << est.cutoff_count << " cut off at "
        << opts.max_steps << " steps)\n"
        << "mean:       " << fixed(est.mean) << '\n'
        << "variance:   " << fixed(est.sample_variance) << '\n'
        << "95% CI:     +/- " << fixed(est.confidence_halfwidth_95) << '\n';
  }
  return est.cutoff_count > 0 ? kExitInconclusive : kExitOk;
}

int cmd_laws(const LawsOptions& opts, std::ostream& out) {
  LawConfig config;
  CorpusParams params;
  params.seed = opts.seed;
  params.size_cap = opts.size_cap;
  params.random_count = opts.count;
  Corpus corpus;
  if (opts.corpus == "default") {
    corpus = default_corpus(params, config);
  } else if (opts.corpus == "named") {
    corpus = named_corpus();
  } else if (opts.corpus == "empty") {
    corpus.description = "empty corpus";
  } else {
    throw std::invalid_argument("unknown corpus '" + opts.corpus + "'");
  }
  const auto reports = run_laws(opts.suite, corpus, config);
  if (opts.format == Format::Json) {
    out << law_reports_json(reports) << '\n';
  } else {
    out << "corpus: " << corpus.description << " (" << corpus.entries.size() << " terms)\n"
        << law_table_text(reports);
  }
  for (const auto& r : reports) {
    if (!r.ok()) return kExitViolation;
  }
  return kExitOk;
}

namespace {

void add_format(CLI::App* sub, std::string& target, std::vector<std::string> allowed) {
  sub->add_option("--format", target, "Output format")->check(CLI::IsMember(allowed));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduction-strategy lab for the untyped lambda calculus"};
  app.name(args.empty() ? "lambdalab" : args.front());
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write command output to this file");

  std::string format;

  ReduceOptions reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Print a reduction trace");
  reduce_cmd->add_option("term", reduce.term, "Term literal or name")->required();
  reduce_cmd->add_option("--strategy", reduce.strategy, "lo, ri or peps:<num>/<den>");
  reduce_cmd->add_option("--fuel", reduce.fuel, "Step budget");
  reduce_cmd->add_option("--seed", reduce.seed, "Seed for randomized strategies");
  add_format(reduce_cmd, format, {"text", "json"});

  AnalyzeOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Exact absorbing-chain analysis under P_eps");
  analyze_cmd->add_option("term", analyze_opts.term, "Term literal or name")->required();
  analyze_cmd->add_option("--eps", analyze_opts.eps, "Epsilon as num/den, 0 or 1");
  analyze_cmd->add_option("--state-cap", analyze_opts.state_cap, "Maximum chain states");
  add_format(analyze_cmd, format, {"text", "json"});

  SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "Expected length over an epsilon grid");
  sweep_cmd->add_option("term", sweep_opts.term, "Term literal or name")->required();
  sweep_cmd->add_option("--grid", sweep_opts.grid, "Comma-separated epsilons");
  sweep_cmd->add_option("--fuel", sweep_opts.fuel, "Step budget for LO and RI");
  sweep_cmd->add_option("--state-cap", sweep_opts.state_cap, "Maximum chain states");
  add_format(sweep_cmd, format, {"text", "csv", "json"});

  MonteCarloOptions mc;
  auto* mc_cmd = app.add_subcommand("montecarlo", "Monte Carlo estimate of the expected length");
  mc_cmd->add_option("term", mc.term, "Term literal or name")->required();
  mc_cmd->add_option("--eps", mc.eps, "Epsilon as num/den, 0 or 1");
  mc_cmd->add_option("--seed", mc.seed, "Base seed");
  mc_cmd->add_option("--samples", mc.samples, "Number of runs");
  mc_cmd->add_option("--max-steps", mc.max_steps, "Per-run step cutoff");
  mc_cmd->add_option("--threads", mc.threads, "Worker threads, 0 for all cores");
  add_format(mc_cmd, format, {"text", "json"});

  LawsOptions laws;
  auto* laws_cmd = app.add_subcommand("laws", "Run the property-law suite");
  laws_cmd->add_option("--suite", laws.suite, "all or a law id");
  laws_cmd->add_option("--seed", laws.seed, "Corpus seed");
  laws_cmd->add_option("--size-cap", laws.size_cap, "Maximum size of random terms");
  laws_cmd->add_option("--count", laws.count, "Random terms per sub-calculus");
  laws_cmd->add_option("--corpus", laws.corpus, "default, named or empty")
      ->check(CLI::IsMember({"default", "named", "empty"}));
  add_format(laws_cmd, format, {"text", "json"});

  ReproOptions repro;
  auto* repro_cmd = app.add_subcommand("repro", "Reproduce every reference number with pass/fail");
  repro_cmd->add_option("--seed", repro.seed, "Corpus seed");
  repro_cmd->add_option("--mc-seeds", repro.mc_seeds, "Monte Carlo base seeds per term");

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << out_path << "' for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  try {
    if (*reduce_cmd) {
      if (!format.empty()) reduce.format = parse_format(format);
      return cmd_reduce(reduce, sink);
    }
    if (*analyze_cmd) {
      if (!format.empty()) analyze_opts.format = parse_format(format);
      return cmd_analyze(analyze_opts, sink);
    }
    if (*sweep_cmd) {
      if (!format.empty()) sweep_opts.format = parse_format(format);
      return cmd_sweep(sweep_opts, sink);
    }
    if (*mc_cmd) {
      if (!format.empty()) mc.format = parse_format(format);
      return cmd_montecarlo(mc, sink);
    }
    if (*laws_cmd) {
      if (!format.empty()) laws.format = parse_format(format);
      return cmd_laws(laws, sink);
    }
    return cmd_repro(repro, sink);
  } catch (const StateCapExceeded& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const GenerationExhausted& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace lambdalab::cli
