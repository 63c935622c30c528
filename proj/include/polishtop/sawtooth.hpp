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

#include <functional>

#include "polishtop/presentation.hpp"
#include "polishtop/rational.hpp"
#include "polishtop/w_table.hpp"

namespace polishtop {

// The partition of (0,1]: 0 < ... < b_1 < a_1 < b_0 < a_0 = 1, with
// a_{i+1} = l_i^0 < l_i^1 < ... -> b_i <- ... < r_i^1 < r_i^0 = a_i.
struct SawtoothParams {
  std::function<Rational(int)> a;
  std::function<Rational(int)> b;
  std::function<Rational(int, int)> l;
  std::function<Rational(int, int)> r;
};

// a_i = 4^-i, b_i = 4^-i / 2, l_i^j = a_{i+1} + (b_i - a_{i+1})(1 - 2^-j),
// r_i^j = a_i - (a_i - b_i)(1 - 2^-j).
SawtoothParams default_params();

// The sawtooth function f on [0,1] for the finite table w. Throws
// ParameterError for t outside [0,1].
Rational sawtooth_f(const Rational& t, const WTable& w, const SawtoothParams& params);

// Index i with a_{i+1} <= t <= a_i (the smaller i at a shared endpoint).
int sawtooth_block(const Rational& t, const SawtoothParams& params);

// X_W = graph(f) u [0,1]x{0} sampled on the dyadics with denominator
// <= 2^depth. Level by level, the base points (x,0) of that level come
// first, then the graph points (x,f(x)); graph points at exact b_i are
// skipped, as are graph points coinciding with base points.
Presentation gen_sawtooth(const WTable& w, int depth, const SawtoothParams& params);

}  // namespace polishtop
