// Copyright 2026 The polishtop Authors
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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polishtop {

// Exact rational number, always kept in canonical reduced form with a
// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "p", "p/q" or "-p/q". Throws ParseError on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

// Formats as "num/den" (the denominator is always written, so "1/1").
std::string format_rational(const Rational& value);

// Formats as "num" when the denominator is 1, otherwise "num/den".
std::string format_rational_short(const Rational& value);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// 2^exponent for any signed exponent.
Rational pow2(int exponent);

Rational abs(const Rational& value);

inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}
inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

// Approximate value for display and diagnostics only.
double to_double(const Rational& value);

}  // namespace polishtop
