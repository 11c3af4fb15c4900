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

#include "lambdalab/rational.hpp"

#include <cctype>

#include <boost/multiprecision/gmp.hpp>

#include "lambdalab/errors.hpp"

namespace lambdalab {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& value) {
  return mp::numerator(value).str() + "/" + mp::denominator(value).str();
}

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    return Rational(Integer(std::string(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  Integer d(std::string{den});
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(Integer(std::string{num}), d);
}

std::string to_decimal(const Rational& value, int significant_digits) {
  // Enough working precision that rounding to 12-ish digits is exact.
  using Float = mp::mpf_float_100;
  Float f(value);
  return f.str(significant_digits, std::ios_base::fmtflags(0));
}

Probability::Probability(Rational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1) {
    throw InvalidProbability("probability out of [0,1]: " + to_string(value_));
  }
}

Probability::Probability(long numerator, long denominator)
    : Probability(denominator == 0
                      ? throw InvalidProbability("zero denominator")
                      : Rational(numerator, denominator)) {}

Probability Probability::parse(std::string_view text) {
  try {
    return Probability(parse_rational(text));
  } catch (const std::invalid_argument&) {
    throw InvalidProbability("expected num/den, 0 or 1, got '" +
                             std::string(text) + "'");
  }
}

Integer Probability::numerator() const { return mp::numerator(value_); }
Integer Probability::denominator() const { return mp::denominator(value_); }

Probability Probability::complement() const { return Probability(1 - value_); }
bool Probability::is_zero() const { return value_ == 0; }
bool Probability::is_one() const { return value_ == 1; }

}  // namespace lambdalab
