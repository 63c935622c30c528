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

#include <utility>
#include <vector>

#include "polishtop/rational.hpp"

namespace polishtop {

// Continuous piecewise-linear function on [front().x, back().x] given by its
// breakpoints; evaluation is exact linear interpolation.
class PLFunction {
 public:
  using Breakpoint = std::pair<Rational, Rational>;

  PLFunction() = default;
  // Throws ParameterError unless there are >= 2 breakpoints with strictly
  // increasing x.
  explicit PLFunction(std::vector<Breakpoint> breakpoints);

  static PLFunction constant(const Rational& lo, const Rational& hi, const Rational& value);

  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  const Rational& lo() const { return points_.front().first; }
  const Rational& hi() const { return points_.back().first; }

  // Throws ParameterError outside [lo, hi].
  Rational operator()(const Rational& x) const;

  // Same function with collinear interior breakpoints removed.
  PLFunction simplified() const;

  // Pointwise maximum over the common domain (which must coincide), with
  // crossing points inserted so the result is exact.
  static PLFunction max(const PLFunction& a, const PLFunction& b);

 private:
  std::vector<Breakpoint> points_;
};

// sup over [lo, hi] of (f - g), where f and g are piecewise linear on
// [lo, hi] with the given breakpoint abscissae. Both are supplied as
// evaluators; the supremum is attained at one of the abscissae or at lo/hi.
template <typename F, typename G>
Rational sup_difference(const F& f, const G& g, const Rational& lo, const Rational& hi,
                        const std::vector<Rational>& abscissae) {
  Rational best = f(lo) - g(lo);
  auto consider = [&](const Rational& x) {
    Rational d = f(x) - g(x);
    if (best < d) best = d;
  };
  consider(hi);
  for (const auto& x : abscissae) {
    if (lo < x && x < hi) consider(x);
  }
  return best;
}

}  // namespace polishtop
