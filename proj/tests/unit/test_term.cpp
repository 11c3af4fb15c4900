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

#include "lambdalab/errors.hpp"
#include "lambdalab/syntax.hpp"
#include "lambdalab/term.hpp"
#include "oracle.hpp"

namespace lambdalab {
namespace {

const Term kI = lam("x", var("x"));

TEST(TermTest, SizeCountsNodes) {
  EXPECT_EQ(var("x").size(), 1u);
  EXPECT_EQ(kI.size(), 2u);
  EXPECT_EQ(app(kI, var("y")).size(), 4u);
  EXPECT_EQ(parse("(\\x.y) ((\\x.x x) (\\x.x x))").size(), 12u);
}

TEST(TermTest, FreeVariables) {
  EXPECT_EQ(free_vars(parse("\\x.x y (\\y.y z)")), (std::set<std::string>{"y", "z"}));
  EXPECT_TRUE(free_vars(kI).empty());
  EXPECT_EQ(free_occurrences(parse("x (\\x.x) x y"), "x"), 2u);
  EXPECT_TRUE(is_free_in("y", parse("\\x.y")));
  EXPECT_FALSE(is_free_in("x", parse("\\x.x")));
}

TEST(TermTest, AlphaEquivalence) {
  EXPECT_TRUE(alpha_eq(parse("\\x.x"), parse("\\y.y")));
  EXPECT_TRUE(alpha_eq(parse("\\x.\\y.x y"), parse("\\a.\\b.a b")));
  EXPECT_FALSE(alpha_eq(parse("\\x.\\y.x"), parse("\\x.\\y.y")));
  EXPECT_FALSE(alpha_eq(parse("\\x.y"), parse("\\x.z")));
  EXPECT_FALSE(alpha_eq(parse("\\x.y"), parse("\\y.y")));
  EXPECT_FALSE(alpha_eq(parse("x"), parse("y")));
}

TEST(TermTest, CanonicalFormMatchesAlphaEquivalence) {
  oracle::TermSource src(7);
  std::vector<Term> terms;
  for (int i = 0; i < 150; ++i) terms.push_back(src.next(7));
  for (const auto& t : terms) {
    for (const auto& u : terms) {
      ASSERT_EQ(alpha_eq(t, u), canonicalize(t) == canonicalize(u))
          << render(t) << " vs " << render(u);
    }
  }
}

TEST(TermTest, DecodeInvertsCanonicalize) {
  oracle::TermSource src(11);
  for (int i = 0; i < 500; ++i) {
    const Term t = src.next(14);
    const Term back = decode(canonicalize(t));
    ASSERT_TRUE(alpha_eq(t, back)) << render(t) << " decoded as " << render(back);
    ASSERT_EQ(free_vars(t), free_vars(back));
  }
}

TEST(TermTest, DecodeAvoidsCapturingFreeNames) {
  const Term t = parse("\\q.x q");
  const Term back = decode(canonicalize(t));
  EXPECT_TRUE(alpha_eq(t, back)) << render(back);
}

TEST(SubstitutionTest, ReplacesFreeOccurrencesOnly) {
  EXPECT_TRUE(alpha_eq(substitute(parse("x (\\x.x)"), "x", var("z")), parse("z (\\x.x)")));
  EXPECT_TRUE(alpha_eq(substitute(parse("y"), "x", var("z")), parse("y")));
}

TEST(SubstitutionTest, AvoidsCapture) {
  // (\y.x){y/x} must not become \y.y
  const Term r = substitute(parse("\\y.x"), "x", var("y"));
  EXPECT_TRUE(alpha_eq(r, parse("\\w.y"))) << render(r);
  const Term r2 = substitute(parse("\\y.\\z.x y z"), "x", parse("y z"));
  EXPECT_TRUE(alpha_eq(r2, parse("\\a.\\b.y z a b"))) << render(r2);
}

TEST(SubstitutionTest, SubstitutionLemma) {
  // t{N/x}{L/y} = t{L/y}{N{L/y}/x} when x != y and x not free in L.
  oracle::TermSource src(19);
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 400; ++i) {
    const Term t = src.next(10);
    const Term n = src.next(6);
    const Term l = src.next(6);
    if (is_free_in("x", l)) continue;
    const Term lhs = substitute(substitute(t, "x", n), "y", l);
    const Term rhs = substitute(substitute(t, "y", l), "x", substitute(n, "y", l));
    ASSERT_TRUE(alpha_eq(lhs, rhs)) << render(t) << " | " << render(n) << " | " << render(l);
    ++checked;
  }
  EXPECT_GE(checked, 400);
}

TEST(RedexTest, PreOrderPositions) {
  const Term t = parse("(\\x.x x) ((\\x.x) (\\x.x))");
  const auto r = redexes(t);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE(r[0].is_root());
  EXPECT_EQ(r[1].str(), "a");
  EXPECT_TRUE(redexes(parse("\\x.x")).empty());
}

TEST(RedexTest, OrderMatchesTextualBeginning) {
  oracle::TermSource src(23);
  for (int i = 0; i < 1000; ++i) {
    const Term t = src.next(16);
    oracle::PositionRenderer pr(t);
    ASSERT_EQ(pr.text, render(t));
    ASSERT_EQ(redexes(t), pr.textual_order()) << pr.text;
  }
}

TEST(RedexTest, ReduceAtContractsTheAddressedRedex) {
  const Term t = parse("(\\x.x x) ((\\x.x) (\\x.x))");
  EXPECT_TRUE(alpha_eq(reduce_at(t, redexes(t)[0]), parse("(\\x.x) (\\x.x) ((\\x.x) (\\x.x))")));
  EXPECT_TRUE(alpha_eq(reduce_at(t, redexes(t)[1]), parse("(\\x.x x) (\\x.x)")));
}

TEST(RedexTest, InvalidPathsThrow) {
  const Term t = parse("(\\x.x) y");
  EXPECT_THROW(reduce_at(t, RedexPath({Step::IntoArgument})), InvalidPath);
  EXPECT_THROW(reduce_at(t, RedexPath({Step::IntoBody})), InvalidPath);
  EXPECT_THROW(subterm_at(t, RedexPath({Step::IntoFunction, Step::IntoBody, Step::IntoBody})),
               InvalidPath);
}

TEST(RedexTest, AnfAndMultiplicity) {
  const Term t = parse("(\\x.x x) ((\\x.x) (\\x.x))");
  const auto r = redexes(t);
  EXPECT_FALSE(is_anf_redex(t, r[0]));
  EXPECT_TRUE(is_anf_redex(t, r[1]));
  EXPECT_EQ(multiplicity(t, r[0]), 2u);
  EXPECT_EQ(multiplicity(t, r[1]), 1u);
  const Term e = parse("(\\x.y) z");
  EXPECT_EQ(multiplicity(e, redexes(e)[0]), 0u);
}

TEST(RedexTest, RightmostRedexIsAnf) {
  oracle::TermSource src(29);
  for (int i = 0; i < 1000; ++i) {
    const Term t = src.next(16);
    const auto r = redexes(t);
    if (r.empty()) {
      ASSERT_TRUE(is_normal_form(t));
      continue;
    }
    ASSERT_TRUE(is_anf_redex(t, r.back())) << render(t);
  }
}

TEST(SubCalculusTest, Classification) {
  EXPECT_EQ(classify(parse("\\x.x")), SubCalculusTag::Both);
  EXPECT_EQ(classify(parse("\\x.x x")), SubCalculusTag::LambdaI);
  EXPECT_EQ(classify(parse("\\x.y")), SubCalculusTag::LambdaA);
  EXPECT_EQ(classify(parse("(\\x.y) ((\\x.x x) (\\x.x x))")), SubCalculusTag::FullLambda);
  EXPECT_TRUE(satisfies(parse("\\x.x x"), SubCalculusTag::FullLambda));
  EXPECT_FALSE(satisfies(parse("\\x.x x"), SubCalculusTag::LambdaA));
  EXPECT_EQ(to_string(SubCalculusTag::LambdaI), "lambdaI");
}

TEST(SubCalculusTest, OneStepStabilityOnRandomTerms) {
  oracle::TermSource src(31);
  int seen_i = 0;
  int seen_a = 0;
  for (int i = 0; i < 4000; ++i) {
    const Term t = src.next(12);
    const bool in_i = is_lambda_I(t);
    const bool in_a = is_lambda_A(t);
    if (!in_i && !in_a) continue;
    for (const auto& p : redexes(t)) {
      const Term u = reduce_at(t, p);
      if (in_i) {
        ++seen_i;
        ASSERT_TRUE(is_lambda_I(u)) << render(t);
        ASSERT_EQ(free_vars(u), free_vars(t)) << render(t);
      }
      if (in_a) {
        ++seen_a;
        ASSERT_TRUE(is_lambda_A(u)) << render(t);
        ASSERT_LT(u.size(), t.size()) << render(t);
      }
    }
  }
  EXPECT_GT(seen_i, 50);
  EXPECT_GT(seen_a, 50);
}

}  // namespace
}  // namespace lambdalab
