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

#include "polishtop/sparse_point.hpp"

#include <algorithm>

namespace polishtop {
namespace {

auto find_slot(std::vector<SparsePoint::Entry>& entries, CoordIndex index) {
  return std::lower_bound(entries.begin(), entries.end(), index,
                          [](const SparsePoint::Entry& e, CoordIndex i) { return e.first < i; });
}

}  // namespace

SparsePoint::SparsePoint(std::initializer_list<Entry> entries) {
  for (const auto& [index, value] : entries) set(index, value);
}

SparsePoint SparsePoint::planar(const Rational& x, const Rational& y) {
  SparsePoint p;
  p.set(0, x);
  p.set(1, y);
  return p;
}

Rational SparsePoint::get(CoordIndex index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, CoordIndex i) { return e.first < i; });
  if (it == entries_.end() || it->first != index) return Rational(0);
  return it->second;
}

void SparsePoint::set(CoordIndex index, const Rational& value) {
  auto it = find_slot(entries_, index);
  const bool present = it != entries_.end() && it->first == index;
  if (value == 0) {
    if (present) entries_.erase(it);
    return;
  }
  if (present) {
    it->second = value;
  } else {
    entries_.insert(it, Entry{index, value});
  }
}

void SparsePoint::add_to(CoordIndex index, const Rational& delta) {
  if (delta == 0) return;
  set(index, get(index) + delta);
}

SparsePoint SparsePoint::scaled(const Rational& factor) const {
  SparsePoint out;
  if (factor == 0) return out;
  out.entries_ = entries_;
  for (auto& e : out.entries_) e.second *= factor;
  return out;
}

SparsePoint SparsePoint::operator+(const SparsePoint& other) const {
  SparsePoint out = *this;
  for (const auto& [index, value] : other.entries_) out.add_to(index, value);
  return out;
}

SparsePoint SparsePoint::operator-(const SparsePoint& other) const {
  SparsePoint out = *this;
  for (const auto& [index, value] : other.entries_) out.add_to(index, -value);
  return out;
}

SparsePoint SparsePoint::shifted(CoordIndex offset) const {
  SparsePoint out = *this;
  for (auto& e : out.entries_) e.first += offset;
  return out;
}

bool operator<(const SparsePoint& a, const SparsePoint& b) {
  return std::lexicographical_compare(
      a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
      [](const SparsePoint::Entry& x, const SparsePoint::Entry& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

Rational sup_distance(const SparsePoint& a, const SparsePoint& b) {
  Rational best(0);
  Rational diff;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      diff = ea[i].second;
      ++i;
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      diff = eb[j].second;
      ++j;
    } else {
      diff = ea[i].second - eb[j].second;
      ++i;
      ++j;
    }
    if (diff < 0) diff = -diff;
    if (best < diff) best = diff;
  }
  return best;
}

Rational sup_norm(const SparsePoint& p) { return sup_distance(p, SparsePoint{}); }

}  // namespace polishtop
