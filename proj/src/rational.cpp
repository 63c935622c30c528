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

#include "polishtop/rational.hpp"

#include <cctype>

namespace polishtop {
namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) ||
      den_text.front() == '-' || den_text.front() == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  std::string num_str(num_text);
  if (num_str.front() == '+') num_str.erase(0, 1);
  Integer num(num_str, 10);
  Integer den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_rational_short(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return format_rational(value);
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational value(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  value.canonicalize();
  return value;
}

Rational pow2(int exponent) {
  Integer power;
  const unsigned long magnitude = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_ui_pow_ui(power.get_mpz_t(), 2, magnitude);
  if (exponent >= 0) return Rational(power);
  return Rational(Integer(1), power);
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace polishtop
