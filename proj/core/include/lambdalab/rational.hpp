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

#ifndef LAMBDALAB_RATIONAL_HPP
#define LAMBDALAB_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace lambdalab {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Always "num/den", including integers ("2/1") and zero ("0/1").
std::string to_string(const Rational& value);

// Accepts "num/den" or a plain integer. Decimal notation is rejected.
Rational parse_rational(std::string_view text);

// Decimal rendering rounded to `significant_digits` significant digits.
std::string to_decimal(const Rational& value, int significant_digits = 12);

/// An exact probability: a rational in [0, 1] kept in lowest terms.
class Probability {
 public:
  Probability() = default;
  explicit Probability(Rational value);
  Probability(long numerator, long denominator);

  /// Parses "num/den", "0" or "1"; anything else (notably decimals) throws
  /// InvalidProbability.
  static Probability parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  Integer numerator() const;
  Integer denominator() const;

  Probability complement() const;
  bool is_zero() const;
  bool is_one() const;

  std::string str() const { return to_string(value_); }

  friend bool operator==(const Probability& a, const Probability& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const Probability& a, const Probability& b) {
    return a.value_ < b.value_;
  }

 private:
  Rational value_{0};
};

}  // namespace lambdalab

#endif  // LAMBDALAB_RATIONAL_HPP
