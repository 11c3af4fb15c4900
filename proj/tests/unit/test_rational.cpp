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
#include "lambdalab/rational.hpp"

namespace lambdalab {
namespace {

TEST(RationalTest, RendersNumeratorOverDenominator) {
  EXPECT_EQ(to_string(Rational(10)), "10/1");
  EXPECT_EQ(to_string(Rational(4, 3)), "4/3");
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
  EXPECT_EQ(to_string(Rational(-1, 2)), "-1/2");
}

TEST(RationalTest, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("7/2"), Rational(7, 2));
  EXPECT_EQ(parse_rational("10"), Rational(10));
  EXPECT_EQ(parse_rational("-3/9"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("123456789012345678901234567890/1"),
            Rational(Integer("123456789012345678901234567890")));
}

TEST(RationalTest, RejectsDecimalsAndGarbage) {
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/2/3"), std::invalid_argument);
  EXPECT_THROW(parse_rational("a/b"), std::invalid_argument);
}

TEST(RationalTest, DecimalHasTwelveSignificantDigits) {
  EXPECT_EQ(to_decimal(Rational(7, 2)), "3.5");
  EXPECT_EQ(to_decimal(Rational(10)), "10");
  EXPECT_EQ(to_decimal(Rational(1, 3)), "0.333333333333");
  EXPECT_EQ(to_decimal(Rational(2, 3)), "0.666666666667");
  EXPECT_EQ(to_decimal(Rational(1025, 192)), "5.33854166667");
  EXPECT_EQ(to_decimal(Rational(0)), "0");
}

TEST(ProbabilityTest, ParsesExactForms) {
  EXPECT_EQ(Probability::parse("1/2").value(), Rational(1, 2));
  EXPECT_TRUE(Probability::parse("0").is_zero());
  EXPECT_TRUE(Probability::parse("1").is_one());
  EXPECT_TRUE(Probability::parse("3/3").is_one());
  EXPECT_EQ(Probability::parse("2/4"), Probability(1, 2));
}

TEST(ProbabilityTest, RejectsOutOfRangeAndDecimals) {
  EXPECT_THROW(Probability::parse("0.5"), InvalidProbability);
  EXPECT_THROW(Probability::parse("3/2"), InvalidProbability);
  EXPECT_THROW(Probability::parse("-1/2"), InvalidProbability);
  EXPECT_THROW(Probability::parse("2"), InvalidProbability);
  EXPECT_THROW(Probability::parse("1/0"), InvalidProbability);
  EXPECT_THROW(Probability(5, 4), InvalidProbability);
}

TEST(ProbabilityTest, ComplementAndParts) {
  const Probability p(3, 10);
  EXPECT_EQ(p.complement(), Probability(7, 10));
  EXPECT_EQ(p.numerator(), 3);
  EXPECT_EQ(p.denominator(), 10);
  EXPECT_EQ(p.str(), "3/10");
  EXPECT_LT(Probability(1, 10), Probability(1, 4));
}

}  // namespace
}  // namespace lambdalab
