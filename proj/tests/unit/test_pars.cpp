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

#include <gtest/gtest.h>

#include <json.hpp>

#include "lambdalab/corpus.hpp"
#include "lambdalab/errors.hpp"
#include "lambdalab/pars.hpp"
#include "lambdalab/syntax.hpp"
#include "oracle.hpp"

namespace lambdalab {
namespace {

Strategy peps(long n, long d) { return Strategy::p_eps(Probability(n, d)); }

TEST(EvolveTest, ErasingExampleHalvesEachStep) {
  const auto trace = evolve_trace(mk_example1(), peps(1, 2), 3);
  EXPECT_EQ(trace.masses, (std::vector<Rational>{Rational(1), Rational(1), Rational(1, 2),
                                                 Rational(1, 4)}));
  EXPECT_EQ(trace.horizon(), 3u);
  const auto truncated = expected_length_truncated(trace);
  EXPECT_EQ(truncated.value, Rational(7, 4));
  EXPECT_EQ(truncated.trailing_mass, Rational(1, 4));
  EXPECT_FALSE(truncated.exact());
}

TEST(EvolveTest, NormalFormHasNoMassAfterStart) {
  const auto trace = evolve_trace(mk_I(), peps(1, 2), 4);
  EXPECT_EQ(trace.masses.front(), 1);
  for (std::size_t i = 1; i < trace.masses.size(); ++i) EXPECT_EQ(trace.masses[i], 0);
  EXPECT_EQ(expected_length_truncated(trace).value, 0);
}

TEST(EvolveTest, ConfigurationStepCounter) {
  auto c = Configuration::dirac(mk_example2());
  c = evolve(c, peps(1, 3));
  EXPECT_EQ(c.step, 1u);
  EXPECT_EQ(c.distribution.mass(), 1);
  EXPECT_EQ(c.distribution.support_size(), 2u);
}

TEST(EvolveTest, DerivationLengthDistributionMatchesOracle) {
  for (const auto& eps : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)}) {
    const auto trace = evolve_trace(mk_example2(), Strategy::p_eps(Probability(eps)), 8);
    EXPECT_EQ(trace.masses, oracle::example2_running_mass(eps, 8));
    const auto der = derivation_length_dist(trace);
    ASSERT_EQ(der.size(), 8u);
    EXPECT_EQ(der[0], 0);
    EXPECT_EQ(der[3], 1 - eps);
    EXPECT_EQ(der[4], eps);
  }
}

TEST(EvolveTest, MassMonotoneAndConservedOnRandomTerms) {
  oracle::TermSource src(53);
  for (int i = 0; i < 150; ++i) {
    const Term t = src.next(12);
    const auto trace = evolve_trace(t, peps(1, 3), 12);
    for (std::size_t k = 0; k + 1 < trace.masses.size(); ++k) {
      ASSERT_LE(trace.masses[k + 1], trace.masses[k]) << render(t);
    }
    Rational total = trace.masses.back();
    for (const auto& d : derivation_length_dist(trace)) total += d;
    ASSERT_EQ(total, 1) << render(t);
  }
}

TEST(ChainTest, ErasingExampleIsOneOverEpsilon) {
  for (long d : {1, 2, 4, 10}) {
    const auto a = analyze(mk_example1(), peps(1, d));
    EXPECT_EQ(a.expected_length().value(), Rational(d));
    EXPECT_EQ(a.termination_probability(), 1);
    EXPECT_EQ(a.state_count(), 2u);
  }
  EXPECT_EQ(analyze(mk_example1(), peps(3, 4)).expected_length().value(), Rational(4, 3));
}

TEST(ChainTest, ErasingExampleNeverTerminatesInnermost) {
  const auto a = analyze(mk_example1(), peps(0, 1));
  EXPECT_FALSE(a.expected_length().is_finite());
  EXPECT_EQ(a.termination_probability(), 0);
}

TEST(ChainTest, DuplicatingExampleAgainstHandSolvedChain) {
  for (const auto& eps : {Rational(0), Rational(1, 10), Rational(1, 4), Rational(1, 2),
                          Rational(3, 4), Rational(1)}) {
    const auto a = analyze(mk_example2(), Strategy::p_eps(Probability(eps)));
    EXPECT_EQ(a.expected_length().value(), oracle::example2_expected_length(eps));
    EXPECT_EQ(a.expected_length().value(), 3 + eps);
  }
  EXPECT_EQ(analyze(mk_example2(), peps(1, 2)).state_count(), 7u);
}

TEST(ChainTest, LoopingTerm) {
  const auto a = analyze(mk_Omega(), peps(1, 2));
  EXPECT_EQ(a.expected_length().str(), "inf");
  EXPECT_EQ(a.termination_probability(), 0);
}

TEST(ChainTest, NormalFormOrigin) {
  const auto a = analyze(mk_I(), peps(1, 2));
  EXPECT_TRUE(a.origin_is_terminal);
  EXPECT_EQ(a.expected_length().value(), 0);
  EXPECT_EQ(a.termination_probability(), 1);
  EXPECT_EQ(a.state_count(), 1u);
}

TEST(ChainTest, TerminationIsAllOrNothing) {
  // Reducts of a normalizing term keep its normal form and the LO branch keeps
  // a finite budget, so absorption is 0 or 1 for every term.
  oracle::TermSource src(59);
  int terminating = 0;
  int looping = 0;
  for (int i = 0; i < 300; ++i) {
    const Term t = app(src.next(8), mk_Omega());
    const auto a = analyze(t, peps(1, 3), 2000);
    const auto& p = a.termination_probability();
    ASSERT_TRUE(p == 0 || p == 1) << render(t) << " " << to_string(p);
    (p == 1 ? terminating : looping)++;
  }
  EXPECT_GT(terminating, 10);
  EXPECT_GT(looping, 10);
}

TEST(ChainTest, StateCap) {
  const Term grow = parse("(\\x.x x x) (\\x.x x x)");
  try {
    analyze(grow, peps(1, 2), 50);
    FAIL() << "expected StateCapExceeded";
  } catch (const StateCapExceeded& e) {
    EXPECT_EQ(e.state_cap(), 50u);
  }
}

TEST(ChainTest, MnAtEpsilonOneMatchesLeftmostOutermost) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto a = analyze(mk_Mn(n), peps(1, 1));
    EXPECT_EQ(a.expected_length().value(), Rational(static_cast<long>(n + 3)));
  }
}

TEST(ChainTest, SolverAgreesWithLongTrace) {
  oracle::TermSource src(61);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Term t = src.next(12);
    const auto a = analyze(t, peps(2, 5), 2000);
    if (a.termination_probability() != 1) continue;
    const auto trace = evolve_trace(t, peps(2, 5), 400);
    const auto truncated = expected_length_truncated(trace);
    Rational gap = a.expected_length().value() - truncated.value;
    ASSERT_GE(gap, 0) << render(t);
    ASSERT_LT(gap, Rational(1, 1000000)) << render(t);
    ASSERT_EQ(derivation_length_dist(trace), chain_derivation_length_dist(a, 400)) << render(t);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(ChainTest, ReportsAreDeterministic) {
  const auto a = analyze(mk_example2(), peps(1, 2));
  const auto j = nlohmann::json::parse(chain_report_json(a));
  EXPECT_EQ(j["expected_length"], "7/2");
  EXPECT_EQ(j["termination_prob"], "1/1");
  EXPECT_EQ(j["states"].size(), 7u);
  EXPECT_EQ(j["states"].back()["id"], "trm");
  EXPECT_EQ(chain_report_text(a), chain_report_text(analyze(mk_example2(), peps(1, 2))));
  double total = 0;
  for (const auto& e : j["transitions"]) {
    if (e["from"] == "s0") total += parse_rational(e["probability"].get<std::string>()).convert_to<double>();
  }
  EXPECT_DOUBLE_EQ(total, 1.0);
}

TEST(FosterTest, DuplicatingExample) {
  const auto r = check_foster(mk_example2(), Probability(1, 2));
  EXPECT_EQ(r.verdict, FosterVerdict::Holds);
  EXPECT_EQ(r.exact->value(), Rational(7, 2));
  EXPECT_EQ(*r.bound, Rational(8));
  EXPECT_EQ(to_string(r.verdict), "holds");
}

TEST(FosterTest, InconclusiveWithoutNormalForm) {
  const auto r = check_foster(mk_Omega(), Probability(1, 2));
  EXPECT_EQ(r.verdict, FosterVerdict::Inconclusive);
  EXPECT_THROW(check_foster(mk_example2(), Probability(0, 1)), InvalidEpsilon);
}

}  // namespace
}  // namespace lambdalab
