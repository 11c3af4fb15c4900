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
#include "lambdalab/laws.hpp"
#include "lambdalab/pars.hpp"
#include "lambdalab/syntax.hpp"

namespace lambdalab {
namespace {

Corpus single(const std::string& text) {
  Corpus c;
  c.description = "single term";
  c.entries.push_back({"t", parse(text), std::nullopt});
  return c;
}

// Found by the suite: the innermost redex erases, the outer one turns the
// erased argument into a redex, so the two orders differ by one step.
constexpr const char* kErasingCounterexample = "(\\y.(\\u.a) (y (\\z.\\w.z))) (\\x.b)";
// Duplicating variant inside the lambdaI fragment: the argument x z becomes a
// redex after substitution, and it is then copied.
constexpr const char* kDuplicatingCounterexample = "(\\x.(\\y.y y) (x z)) (\\w.w)";

TEST(CorpusBuildTest, DefaultCorpusShape) {
  const auto c = default_corpus();
  EXPECT_EQ(c.entries.size(), named_corpus().entries.size() + 600);
  std::size_t lambda_i = 0;
  for (const auto& e : c.entries) {
    if (e.id.rfind("lambdaI#", 0) == 0) {
      ++lambda_i;
      EXPECT_TRUE(is_lambda_I(e.term));
      EXPECT_TRUE(certified_lo_steps(e.term, {}).has_value());
      EXPECT_LE(e.term.size(), 12u);
    }
    if (e.id.rfind("lambdaA#", 0) == 0) {
      EXPECT_TRUE(is_lambda_A(e.term));
    }
  }
  EXPECT_EQ(lambda_i, 200u);
}

TEST(CorpusBuildTest, SeedsReplayTerms) {
  const auto c = random_corpus(SubCalculusTag::LambdaA, CorpusParams{3, 20, 12}, LawConfig{});
  for (const auto& e : c.entries) {
    ASSERT_TRUE(e.seed.has_value());
    EXPECT_EQ(random_term(*e.seed, 12, SubCalculusTag::LambdaA), e.term);
  }
}

TEST(CertifyTest, LeftmostOutermostCount) {
  EXPECT_EQ(certified_lo_steps(mk_example2(), {}), std::optional<std::size_t>(4));
  EXPECT_FALSE(certified_lo_steps(mk_Omega(), {}).has_value());
  LawConfig tight;
  tight.fuel = 3;
  EXPECT_FALSE(certified_lo_steps(mk_example2(), tight).has_value());
}

TEST(LawTest, NamedTermsPassEveryLaw) {
  for (const auto& r : run_laws("all", named_corpus(), {})) {
    EXPECT_TRUE(r.ok()) << r.law_id << ": "
                        << (r.counterexample ? r.counterexample->details : "");
    EXPECT_EQ(r.inconclusive, 0u) << r.law_id;
    EXPECT_GT(r.cases_run, 0u) << r.law_id;
  }
}

TEST(LawTest, EmptyCorpusIsVacuousWithWarning) {
  Corpus empty;
  for (const auto& r : run_laws("all", empty, {})) {
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.cases_run, 0u);
    ASSERT_EQ(r.warnings.size(), 1u);
    EXPECT_NE(r.warnings[0].find("vacuous"), std::string::npos);
  }
}

TEST(LawTest, UnknownSuite) {
  EXPECT_THROW(run_laws("nope", named_corpus(), {}), std::invalid_argument);
  EXPECT_EQ(run_laws("foster", named_corpus(), {}).size(), 1u);
  EXPECT_EQ(law_ids().size(), 8u);
}

TEST(LawTest, AnfEqualLengthSimpleCases) {
  EXPECT_TRUE(law_anf_equal_length(single("(\\x.x x) ((\\x.x) (\\x.x))")).ok());
  EXPECT_TRUE(law_anf_equal_length(single("(\\x.x) ((\\x.x) (\\x.x))")).ok());
  EXPECT_TRUE(law_anf_equal_length(single("\\x.x")).ok());
}

TEST(LawTest, AnfEqualLengthFailsOnErasingCounterexample) {
  const auto g = explore_reductions(parse(kErasingCounterexample), Relation::BetaAnf);
  ASSERT_TRUE(g.complete);
  EXPECT_EQ(normalizing_lengths(g).lengths, (std::set<std::size_t>{2, 3}));
  const auto r = law_anf_equal_length(single(kErasingCounterexample));
  EXPECT_FALSE(r.ok());
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(r.counterexample->term, kErasingCounterexample);
}

TEST(LawTest, LambdaIClaimsFailOnDuplicatingCounterexample) {
  const Term t = parse(kDuplicatingCounterexample);
  ASSERT_TRUE(is_lambda_I(t));
  const auto anf = explore_reductions(t, Relation::BetaAnf);
  EXPECT_EQ(normalizing_lengths(anf).lengths, (std::set<std::size_t>{3, 4}));
  EXPECT_EQ(shortest_normalizing_length(explore_reductions(t, Relation::Beta)),
            std::optional<std::size_t>(3));
  EXPECT_FALSE(law_anf_equal_length(single(kDuplicatingCounterexample)).ok());
  EXPECT_FALSE(law_lambdaI_anf_optimal(single(kDuplicatingCounterexample)).ok());
  // E(eps) = 4 - eps + eps^2, so eps = 1/2 beats eps = 0.
  auto e = [&](long n, long d) {
    return analyze(t, Strategy::p_eps(Probability(n, d))).expected_length().value();
  };
  EXPECT_EQ(e(0, 1), Rational(4));
  EXPECT_EQ(e(1, 2), Rational(15, 4));
  EXPECT_EQ(e(1, 1), Rational(4));
  EXPECT_FALSE(law_eps_minimum(single(kDuplicatingCounterexample)).ok());
}

TEST(LawTest, LoMonotoneOnDuplicatingExample) {
  EXPECT_TRUE(law_lo_monotone(single("(\\x.x x) ((\\x.x) (\\x.x))")).ok());
}

TEST(LawTest, NonNormalizingTermsAreSkipped) {
  const auto r = law_foster(single("(\\x.x x) (\\x.x x)"));
  EXPECT_EQ(r.cases_run, 0u);
  EXPECT_EQ(r.skipped, 1u);
}

TEST(LawTest, CapsReportInconclusive) {
  LawConfig config;
  config.caps = ReductionCaps{2, 100};
  config.brute_force_size_cap = 100;
  const auto r = law_lambdaA_lo_optimal(single("(\\x.\\y.y) ((\\a.a) ((\\b.b) ((\\c.c) d)))"), config);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.inconclusive, 0u);
  const auto s = law_anf_equal_length(single("(\\x.(\\a.a) ((\\b.b) ((\\c.c) x))) d"), config);
  EXPECT_EQ(s.inconclusive, 1u);
}

TEST(LawTest, JsonTable) {
  const auto reports = run_laws("all", named_corpus(), {});
  const auto j = nlohmann::json::parse(law_reports_json(reports));
  ASSERT_EQ(j.size(), 8u);
  EXPECT_EQ(j[0]["law"], "lo_monotone");
  EXPECT_EQ(j[0]["status"], "pass");
  EXPECT_TRUE(j[0]["counterexample"].is_null());
  const auto text = law_table_text(reports);
  EXPECT_NE(text.find("pars_semantics"), std::string::npos);
}

}  // namespace
}  // namespace lambdalab
