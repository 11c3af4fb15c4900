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

#include "lambdalab/corpus.hpp"
#include "lambdalab/errors.hpp"
#include "lambdalab/syntax.hpp"

namespace lambdalab {
namespace {

TEST(CorpusTest, NamedTerms) {
  EXPECT_EQ(render(mk_I()), "\\x.x");
  EXPECT_EQ(render(mk_omega()), "\\x.x x");
  EXPECT_EQ(render(mk_Omega()), "(\\x.x x) (\\x.x x)");
  EXPECT_EQ(render(mk_example1()), "(\\x.y) ((\\x.x x) (\\x.x x))");
  EXPECT_EQ(render(mk_example2()), "(\\x.x x) ((\\x.x) (\\x.x))");
}

TEST(CorpusTest, ChurchStyleCopiers) {
  EXPECT_TRUE(alpha_eq(mk_Cn(1), parse("\\x.x")));
  EXPECT_TRUE(alpha_eq(mk_Cn(2), parse("\\x.x x")));
  EXPECT_TRUE(alpha_eq(mk_Cn(4), parse("\\x.x x x x")));
  EXPECT_THROW(mk_Cn(0), InvalidArity);
}

TEST(CorpusTest, MnFamily) {
  EXPECT_TRUE(alpha_eq(mk_Mn(2), parse("(\\x.(\\y.z) ((\\x.x x) (\\x.x x)) x) ((\\x.x x) ((\\x.x) y))")));
  EXPECT_EQ(mk_Mn(5).size(), 2 * 5 + 21u);
  EXPECT_THROW(mk_Mn(0), InvalidArity);
}

TEST(CorpusTest, ResolvesNamesAndLiterals) {
  EXPECT_EQ(resolve_term("example1"), mk_example1());
  EXPECT_EQ(resolve_term("Cn:3"), mk_Cn(3));
  EXPECT_EQ(resolve_term("Mn:4"), mk_Mn(4));
  EXPECT_EQ(resolve_term("\\x.x"), mk_I());
  EXPECT_THROW(named_term("Cn:x"), InvalidArity);
  EXPECT_FALSE(named_term("nonsense").has_value());
  EXPECT_THROW(resolve_term("Cn:0"), InvalidArity);
  EXPECT_THROW(resolve_term("(\\x."), SyntaxError);
}

TEST(RandomTermTest, DeterministicInSeed) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_EQ(random_term(seed, 12, SubCalculusTag::FullLambda),
              random_term(seed, 12, SubCalculusTag::FullLambda));
  }
}

TEST(RandomTermTest, RespectsSizeAndFilter) {
  for (auto filter : {SubCalculusTag::FullLambda, SubCalculusTag::LambdaI,
                      SubCalculusTag::LambdaA, SubCalculusTag::Both}) {
    std::size_t distinct_sizes = 0;
    std::vector<bool> seen(41, false);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const Term t = random_term(seed, 40, filter);
      ASSERT_LE(t.size(), 40u);
      ASSERT_TRUE(satisfies(t, filter)) << render(t);
      if (!seen[t.size()]) ++distinct_sizes;
      seen[t.size()] = true;
    }
    EXPECT_GT(distinct_sizes, 5u) << to_string(filter);
  }
}

TEST(RandomTermTest, SizeOneAndZero) {
  EXPECT_EQ(random_term(1, 1, SubCalculusTag::LambdaI).size(), 1u);
  EXPECT_THROW(random_term(1, 0, SubCalculusTag::FullLambda), InvalidArity);
}

}  // namespace
}  // namespace lambdalab
