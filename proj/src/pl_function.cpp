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

#include "polishtop/pl_function.hpp"

#include <algorithm>

#include "polishtop/errors.hpp"

namespace polishtop {

PLFunction::PLFunction(std::vector<Breakpoint> breakpoints) : points_(std::move(breakpoints)) {
  if (points_.size() < 2) throw ParameterError("a PL function needs two breakpoints");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].first < points_[i].first)) {
      throw ParameterError("PL breakpoints must have strictly increasing x");
    }
  }
}

PLFunction PLFunction::constant(const Rational& lo, const Rational& hi, const Rational& value) {
  return PLFunction({{lo, value}, {hi, value}});
}

Rational PLFunction::operator()(const Rational& x) const {
  if (x < lo() || x > hi()) {
    throw ParameterError("PL function evaluated at " + format_rational_short(x) +
                         " outside its domain");
  }
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const Breakpoint& b, const Rational& v) { return b.first < v; });
  if (it->first == x) return it->second;
  const auto& [x1, y1] = *it;
  const auto& [x0, y0] = *(it - 1);
  return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

PLFunction PLFunction::simplified() const {
  std::vector<Breakpoint> out{points_.front()};
  for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
    const auto& [x0, y0] = out.back();
    const auto& [x1, y1] = points_[i];
    const auto& [x2, y2] = points_[i + 1];
    // Keep unless (x1, y1) lies on the segment from out.back() to the next point.
    if ((y1 - y0) * (x2 - x0) != (y2 - y0) * (x1 - x0)) out.push_back(points_[i]);
  }
  out.push_back(points_.back());
  return PLFunction(std::move(out));
}

PLFunction PLFunction::max(const PLFunction& a, const PLFunction& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi()) {
    throw ParameterError("PL max needs a common domain");
  }
  std::vector<Rational> xs;
  xs.reserve(a.points_.size() + b.points_.size());
  for (const auto& p : a.points_) xs.push_back(p.first);
  for (const auto& p : b.points_) xs.push_back(p.first);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Breakpoint> out;
  Rational prev_diff;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Rational ya = a(xs[i]);
    const Rational yb = b(xs[i]);
    const Rational diff = ya - yb;
    if (i > 0 && sgn(diff) * sgn(prev_diff) < 0) {
      // Both are linear on [xs[i-1], xs[i]]; insert the crossing.
      const Rational& x0 = xs[i - 1];
      const Rational t = prev_diff / (prev_diff - diff);
      const Rational xc = x0 + t * (xs[i] - x0);
      out.emplace_back(xc, a(xc));
    }
    out.emplace_back(xs[i], polishtop::max(ya, yb));
    prev_diff = diff;
  }
  return PLFunction(std::move(out)).simplified();
}

}  // namespace polishtop
