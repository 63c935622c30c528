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

#include "polishtop/sawtooth.hpp"

#include "polishtop/errors.hpp"

namespace polishtop {

SawtoothParams default_params() {
  SawtoothParams p;
  p.a = [](int i) { return pow2(-2 * i); };
  p.b = [](int i) { return Rational(pow2(-2 * i) / 2); };
  p.l = [a = p.a, b = p.b](int i, int j) {
    return Rational(a(i + 1) + (b(i) - a(i + 1)) * (1 - pow2(-j)));
  };
  p.r = [a = p.a, b = p.b](int i, int j) {
    return Rational(a(i) - (a(i) - b(i)) * (1 - pow2(-j)));
  };
  return p;
}

int sawtooth_block(const Rational& t, const SawtoothParams& params) {
  if (t <= 0 || t > 1) throw ParameterError("sawtooth block needs t in (0,1]");
  int i = 0;
  while (t < params.a(i + 1)) ++i;
  return i;
}

Rational sawtooth_f(const Rational& t, const WTable& w, const SawtoothParams& params) {
  if (t < 0 || t > 1) throw ParameterError("sawtooth f is defined on [0,1]");
  if (t == 0) return Rational(0);
  const int i = sawtooth_block(t, params);
  const Rational& bi = params.b(i);
  auto weight = [&](int j) { return pow2(-static_cast<int>(w.count_below(i, j))); };
  if (t == bi) return Rational(t * pow2(-static_cast<int>(w.column_size(i))));
  if (t < bi) {
    int j = 0;
    while (t > params.l(i, j + 1)) ++j;
    const Rational lo = params.l(i, j);
    const Rational hi = params.l(i, j + 1);
    return Rational(t * ((t - lo) / (hi - lo) * (weight(j + 1) - weight(j)) + weight(j)));
  }
  int j = 0;
  while (t < params.r(i, j + 1)) ++j;
  const Rational lo = params.r(i, j + 1);
  const Rational hi = params.r(i, j);
  return Rational(t * ((t - lo) / (hi - lo) * (weight(j) - weight(j + 1)) + weight(j + 1)));
}

Presentation gen_sawtooth(const WTable& w, int depth, const SawtoothParams& params) {
  if (depth < 1 || depth > 24) throw ParameterError("sawtooth depth must lie in [1, 24]");
  Presentation pres("sawtooth");
  auto is_b = [&](const Rational& x) {
    if (x <= 0) return false;
    return x == params.b(sawtooth_block(x, params));
  };
  auto emit_level = [&](const std::vector<Rational>& xs) {
    for (const auto& x : xs) pres.add_if_new(SparsePoint::planar(x, Rational(0)));
    for (const auto& x : xs) {
      if (is_b(x)) continue;
      pres.add_if_new(SparsePoint::planar(x, sawtooth_f(x, w, params)));
    }
  };
  emit_level({Rational(0), Rational(1)});
  for (int level = 1; level <= depth; ++level) {
    const long den = 1L << level;
    std::vector<Rational> xs;
    for (long j = 1; j < den; j += 2) xs.push_back(make_rational(j, den));
    emit_level(xs);
  }
  return pres;
}

}  // namespace polishtop
