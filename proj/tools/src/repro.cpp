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

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lambdalab/cli/commands.hpp"
#include "lambdalab/corpus.hpp"
#include "lambdalab/laws.hpp"
#include "lambdalab/montecarlo.hpp"
#include "lambdalab/strategy.hpp"
#include "lambdalab/syntax.hpp"

namespace lambdalab::cli {

Rational mn_closed_form(std::size_t n, const Probability& epsilon) {
  const Rational& e = epsilon.value();
  const Rational k = Rational(static_cast<long>(n)) - 3;
  return k * e * e * e + 4 * e * e + Rational(2) / e;
}

namespace {

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void section(const std::string& title) { out_ << "\n== " << title << " ==\n"; }
  std::ostream& line() { return out_ << "  "; }
  void verdict(int id, bool ok, const std::string& summary) {
    out_ << (ok ? "PASS" : "FAIL") << " [" << id << "] " << summary << '\n';
    all_ok_ = all_ok_ && ok;
  }
  bool all_ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool all_ok_ = true;
};

std::vector<Probability> grid(std::initializer_list<std::pair<long, long>> items) {
  std::vector<Probability> out;
  for (const auto& [n, d] : items) out.emplace_back(n, d);
  return out;
}

void print_trace(Report& r, const Term& t, DeterministicStrategy s) {
  Term cur = t;
  r.line() << render(cur) << '\n';
  while (auto next = s == DeterministicStrategy::LeftmostOutermost ? step_lo(cur) : step_ri(cur)) {
    cur = *next;
    r.line() << "-> " << render(cur) << '\n';
  }
}

std::string law_summary(const LawReport& l) {
  std::ostringstream s;
  s << l.law_id << ": " << l.cases_passed << "/" << l.cases_run << " passed, " << l.failures
    << " failed, " << l.inconclusive << " inconclusive";
  return s.str();
}

void print_counterexample(Report& r, const LawReport& l) {
  if (!l.counterexample) return;
  const auto& c = *l.counterexample;
  auto& os = r.line() << "counterexample " << l.law_id << ": " << c.entry_id << " " << c.term;
  if (c.seed) os << " (seed " << *c.seed << ")";
  os << ": " << c.details << '\n';
}

}  // namespace

int cmd_repro(const ReproOptions& opts, std::ostream& out) {
  Report r(out);
  const auto lo = DeterministicStrategy::LeftmostOutermost;
  const auto ri = DeterministicStrategy::RightmostInnermost;

  r.section("1. erasing a looping argument");
  {
    const Term t = mk_example1();
    const auto n_lo = n_steps(t, lo, kDefaultFuel);
    const auto n_ri = n_steps(t, ri, 1000);
    r.line() << render(t) << ": LO " << n_lo.str() << ", RI " << n_ri.str() << " (fuel 1000)\n";
    r.verdict(1, n_lo == StepCount::finite(1) && !n_ri.is_finite(),
              "example1: LO = 1, RI exhausts fuel 1000");
  }

  r.section("2. duplicating a reducible argument");
  {
    const Term t = mk_example2();
    r.line() << "LO:\n";
    print_trace(r, t, lo);
    r.line() << "RI:\n";
    print_trace(r, t, ri);
    const auto n_lo = n_steps(t, lo, kDefaultFuel);
    const auto n_ri = n_steps(t, ri, kDefaultFuel);
    r.verdict(2, n_lo == StepCount::finite(4) && n_ri == StepCount::finite(3),
              "example2: LO = " + n_lo.str() + ", RI = " + n_ri.str());
  }

  r.section("3. expected length 1/eps on example1");
  {
    bool ok = true;
    for (const auto& eps : grid({{1, 10}, {1, 4}, {1, 2}, {3, 4}, {1, 1}})) {
      const auto e = analyze(mk_example1(), Strategy::p_eps(eps)).expected_length();
      const Rational want = Rational(1) / eps.value();
      const bool hit = e.is_finite() && e.value() == want;
      ok = ok && hit;
      r.line() << "eps " << std::setw(5) << eps.str() << "  exact " << std::setw(6) << e.str()
               << "  1/eps " << to_string(want) << (hit ? "" : "  MISMATCH") << '\n';
    }
    r.verdict(3, ok, "example1: E = 1/eps on the grid");
  }

  r.section("4. expected length 3 + eps on example2");
  {
    bool ok = true;
    for (const auto& eps : grid({{0, 1}, {1, 10}, {1, 4}, {1, 2}, {3, 4}, {1, 1}})) {
      const auto e = analyze(mk_example2(), Strategy::p_eps(eps)).expected_length();
      const Rational want = 3 + eps.value();
      const bool hit = e.is_finite() && e.value() == want;
      ok = ok && hit;
      r.line() << "eps " << std::setw(5) << eps.str() << "  exact " << std::setw(6) << e.str()
               << "  3+eps " << to_string(want) << (hit ? "" : "  MISMATCH") << '\n';
    }
    r.verdict(4, ok, "example2: E = 3 + eps, endpoints 3 (RI) and 4 (LO)");
  }

  CorpusParams params;
  params.seed = opts.seed;
  LawConfig config;
  const Corpus corpus = default_corpus(params, config);
  r.section("corpus");
  r.line() << corpus.description << " (" << corpus.entries.size() << " terms)\n";

  r.section("5. expected length <= N_LO/eps");
  {
    const auto l = law_foster(corpus, config);
    r.line() << law_summary(l) << '\n';
    print_counterexample(r, l);
    r.verdict(5, l.ok(), "bound holds on every certified term and grid eps > 0");
  }

  r.section("6. Mn family");
  {
    const auto mn_grid = grid({{1, 10}, {1, 4}, {1, 2}, {3, 4}, {9, 10}, {1, 1}});
    bool at_one = true;
    bool dips = true;
    std::size_t discrepancies = 0;
    r.line() << std::left << std::setw(4) << "n" << std::setw(7) << "eps" << std::setw(16)
             << "solver" << std::setw(16) << "closed form" << "match\n";
    for (std::size_t n = 2; n <= 5; ++n) {
      const Term t = mk_Mn(n);
      const Rational target(static_cast<long>(n + 3));
      const auto n_lo = n_steps(t, lo, kDefaultFuel);
      const auto n_ri = n_steps(t, ri, kDefaultFuel);
      bool below = false;
      for (const auto& eps : mn_grid) {
        const auto e = analyze(t, Strategy::p_eps(eps)).expected_length();
        const Rational closed = mn_closed_form(n, eps);
        const bool match = e.is_finite() && e.value() == closed;
        if (!match) ++discrepancies;
        r.line() << std::left << std::setw(4) << n << std::setw(7) << eps.str() << std::setw(16)
                 << e.str() << std::setw(16) << to_string(closed) << (match ? "yes" : "NO")
                 << '\n';
        if (eps.is_one()) {
          at_one = at_one && e.is_finite() && e.value() == target && n_lo.is_finite() &&
                   n_lo.steps() == n + 3 && closed == target;
        } else if (e.is_finite() && e.value() < target &&
                   (!n_ri.is_finite() || e.value() < Rational(n_ri.steps()))) {
          below = true;
        }
      }
      dips = dips && below;
      r.line() << "  n=" << n << ": N_LO " << n_lo.str() << ", N_RI " << n_ri.str() << '\n';
    }
    r.line() << "closed-form discrepancies: " << discrepancies << '\n';
    r.verdict(6, at_one && dips,
              "Mn: E(1) = n+3 and some eps in (0,1) beats both LO and RI, n = 2..5");
  }

  r.section("7. sub-calculus optimal epsilon");
  {
    const auto a = law_eps_minimum(random_corpus(SubCalculusTag::LambdaA, params, config), config);
    const auto i = law_eps_minimum(random_corpus(SubCalculusTag::LambdaI, params, config), config);
    r.line() << "lambdaA " << law_summary(a) << '\n';
    print_counterexample(r, a);
    r.line() << "lambdaI " << law_summary(i) << '\n';
    print_counterexample(r, i);
    r.verdict(7, a.ok() && i.ok() && a.inconclusive == 0 && i.inconclusive == 0,
              "grid minimum at eps = 1 on lambdaA and at eps = 0 on lambdaI");
  }

  r.section("8. law suite");
  {
    std::size_t run = 0;
    std::size_t inconclusive = 0;
    bool ok = true;
    for (const char* id : {"lo_monotone", "anf_equal_length", "subcalculus_stability",
                           "lambdaA_lo_optimal", "lambdaI_anf_optimal"}) {
      const auto l = run_laws(id, corpus, config).front();
      r.line() << law_summary(l) << '\n';
      print_counterexample(r, l);
      run += l.cases_run;
      inconclusive += l.inconclusive;
      ok = ok && l.ok();
    }
    const double fraction = run == 0 ? 0.0 : static_cast<double>(inconclusive) / run;
    r.line() << "inconclusive fraction: " << std::fixed << std::setprecision(4) << fraction
             << std::defaultfloat << '\n';
    r.verdict(8, ok && fraction < 0.05, "five reduction laws, no counterexamples");
  }

  r.section("9. distribution semantics");
  {
    const auto l = law_pars_semantics(corpus, config);
    r.line() << law_summary(l) << '\n';
    print_counterexample(r, l);
    r.verdict(9, l.ok(), "mass monotone, Der sums to one, truncated mean matches exact");
  }

  r.section("10. Monte Carlo");
  {
    bool ok = true;
    const Probability half(1, 2);
    for (const Term& t : {mk_example1(), mk_example2()}) {
      const auto exact = analyze(t, Strategy::p_eps(half)).expected_length();
      const double target = exact.value().convert_to<double>();
      std::size_t within = 0;
      for (std::size_t k = 0; k < opts.mc_seeds; ++k) {
        const auto est = estimate(t, Strategy::p_eps(half), k * 10000, 10000, 10000);
        if (std::abs(est.mean - target) <= 3 * est.confidence_halfwidth_95) ++within;
      }
      r.line() << render(t) << ": " << within << "/" << opts.mc_seeds
               << " seeds within 3 half-widths of " << exact.str() << '\n';
      ok = ok && 100 * within >= 99 * opts.mc_seeds;
    }
    r.verdict(10, ok, "Monte Carlo means agree with the exact solver");
  }

  out << '\n' << (r.all_ok() ? "all items pass" : "some items FAIL") << '\n';
  return r.all_ok() ? kExitOk : kExitViolation;
}

}  // namespace lambdalab::cli
