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

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "polishtop/rational.hpp"

namespace polishtop {

using CoordIndex = std::uint32_t;

// A finitely supported rational vector in the sequence space c_0 (or any
// l^infinity slice of it). Only nonzero coordinates are stored, sorted by
// index.
class SparsePoint {
 public:
  using Entry = std::pair<CoordIndex, Rational>;

  SparsePoint() = default;
  SparsePoint(std::initializer_list<Entry> entries);

  // Convenience for planar points (x at index 0, y at index 1).
  static SparsePoint planar(const Rational& x, const Rational& y);

  Rational get(CoordIndex index) const;
  void set(CoordIndex index, const Rational& value);
  void add_to(CoordIndex index, const Rational& delta);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  SparsePoint scaled(const Rational& factor) const;
  SparsePoint operator+(const SparsePoint& other) const;
  SparsePoint operator-(const SparsePoint& other) const;

  // Moves every coordinate index up by `offset`.
  SparsePoint shifted(CoordIndex offset) const;

  friend bool operator==(const SparsePoint& a, const SparsePoint& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const SparsePoint& a, const SparsePoint& b);

 private:
  std::vector<Entry> entries_;
};

// Sup-norm distance; exact.
Rational sup_distance(const SparsePoint& a, const SparsePoint& b);

Rational sup_norm(const SparsePoint& p);

}  // namespace polishtop
