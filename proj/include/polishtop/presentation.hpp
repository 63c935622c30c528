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

#include <cstddef>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "polishtop/rational.hpp"
#include "polishtop/sparse_point.hpp"

namespace polishtop {

using PointId = std::size_t;

// A presented Polish space: an enumerated countable set of special points in
// the sup-metric sequence space. The completion of the enumerated points is
// the space under study; only a finite prefix is ever materialized.
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(std::string label) : label_(std::move(label)) {}

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // Appends a new special point. Throws PreconditionError if the point is
  // already enumerated (enumerations are injective).
  PointId add(SparsePoint point);

  // Appends the point unless it is already enumerated. Returns true if added.
  bool add_if_new(SparsePoint point);

  bool contains(const SparsePoint& point) const { return seen_.count(point) > 0; }

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  // Throws LookupError for ids outside the materialized prefix.
  const SparsePoint& point(PointId id) const;
  std::span<const SparsePoint> points() const { return points_; }

  // Re-enumerates the points: result[i] = this[order[i]].
  Presentation permuted(std::span<const std::size_t> order) const;

 private:
  std::string label_;
  std::vector<SparsePoint> points_;
  std::set<SparsePoint> seen_;
};

// Metric oracle. Returns a rational within 2^-k of d(i, j); under the
// sup-metric ambient the value is exact and does not depend on k.
Rational metric_approx(const Presentation& pres, PointId i, PointId j, int k);

// True iff |x_{i+1} - x_i| < 2^-i for every consecutive pair.
bool verify_fast_cauchy(std::span<const Rational> sequence);

// Textual format:
//   ambient sup-metric
//   point <id> : <coord>:<num>/<den> ...
void write_presentation(std::ostream& out, const Presentation& pres);
std::string presentation_to_string(const Presentation& pres);

// Throws ParseError naming the offending line.
Presentation read_presentation(std::istream& in);
Presentation presentation_from_string(const std::string& text);

}  // namespace polishtop
