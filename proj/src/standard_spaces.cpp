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

#include "polishtop/standard_spaces.hpp"

#include <cmath>
#include <numbers>

#include "polishtop/errors.hpp"

namespace polishtop {
namespace {

std::size_t bit_reverse(std::size_t k, int bits) {
  std::size_t out = 0;
  for (int b = 0; b < bits; ++b) {
    out = (out << 1) | ((k >> b) & 1U);
  }
  return out;
}

}  // namespace

Presentation dyadic_interval(int depth) {
  if (depth < 0 || depth > 24) throw ParameterError("dyadic depth must lie in [0, 24]");
  Presentation pres("dyadic-interval");
  pres.add(SparsePoint{});
  pres.add(SparsePoint{{0, Rational(1)}});
  for (int level = 1; level <= depth; ++level) {
    const long den = 1L << level;
    for (long j = 1; j < den; j += 2) pres.add(SparsePoint{{0, make_rational(j, den)}});
  }
  return pres;
}

Presentation rational_circle(std::size_t n) {
  if (n < 3) throw ParameterError("a circle sample needs at least 3 points");
  int bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  const bool power_of_two = (std::size_t{1} << bits) == n;

  Presentation pres("rational-circle");
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = power_of_two ? bit_reverse(i, bits) : i;
    if (k == 0) {
      pres.add(SparsePoint::planar(Rational(-1), Rational(0)));
      continue;
    }
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(n) -
                         std::numbers::pi;
    const long q = std::lround(std::tan(theta / 2.0) * 4096.0);
    const Rational t = make_rational(q, 4096);
    const Rational denom = 1 + t * t;
    pres.add(SparsePoint::planar(Rational((1 - t * t) / denom), Rational(2 * t / denom)));
  }
  return pres;
}

Presentation line_segment_grid(int reach, int den) {
  if (reach < 0 || den < 1) throw ParameterError("segment grid needs reach >= 0 and den >= 1");
  Presentation pres("line-grid");
  pres.add(SparsePoint{});
  for (long k = 1; k <= static_cast<long>(reach) * den; ++k) {
    pres.add(SparsePoint{{0, make_rational(k, den)}});
    pres.add(SparsePoint{{0, make_rational(-k, den)}});
  }
  return pres;
}

Presentation dyadic_line(int reach, int depth) {
  if (reach < 0 || depth < 0 || depth > 24) {
    throw ParameterError("dyadic line needs reach >= 0 and depth in [0, 24]");
  }
  Presentation pres("dyadic-line");
  pres.add(SparsePoint{});
  for (long k = 1; k <= reach; ++k) {
    pres.add(SparsePoint{{0, Rational(k)}});
    pres.add(SparsePoint{{0, Rational(-k)}});
  }
  for (int level = 1; level <= depth; ++level) {
    const long den = 1L << level;
    for (long j = 1; j < static_cast<long>(reach) * den; j += 2) {
      pres.add(SparsePoint{{0, make_rational(j, den)}});
      pres.add(SparsePoint{{0, make_rational(-j, den)}});
    }
  }
  return pres;
}

}  // namespace polishtop
