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

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "polishtop/finite_net.hpp"
#include "polishtop/rational.hpp"

namespace polishtop {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Query accelerator over a FiniteNet. Distance comparisons are decided on a
// double shadow of the matrix and fall back to exact rationals whenever the
// shadow is too close to call, so every answer is exact. Adjacency rows are
// memoized per threshold.
class NetIndex {
 public:
  // The net must outlive the index.
  explicit NetIndex(const FiniteNet& net);
  explicit NetIndex(FiniteNet&&) = delete;

  const FiniteNet& net() const { return *net_; }
  std::size_t size() const { return n_; }

  bool less(std::size_t i, std::size_t j, const Rational& r) const;
  bool less_equal(std::size_t i, std::size_t j, const Rational& r) const;

  // Row v of the graph joining points at distance < eps (v itself excluded).
  const Bits& neighbors(std::size_t v, const Rational& eps);

  Bits ball(std::size_t center, const Rational& radius, BallMode mode) const;
  Bits region(const Region& region) const;
  Bits all() const;

  // Every point reachable from x by an eps-path whose points other than the
  // final one lie in `expandable` (x itself is always expanded).
  Bits reach(std::size_t x, const Rational& eps, const Bits& expandable);

  // Fewest-hop eps-path from x to y under the same rule as reach().
  std::optional<std::vector<std::size_t>> path(std::size_t x, std::size_t y,
                                               const Rational& eps, const Bits& expandable);

  // Component labels of the eps-graph induced on `vertices`; -1 outside.
  // Labels are numbered in order of each component's lowest position.
  std::vector<int> components(const Rational& eps, const Bits& vertices);

 private:
  int compare(std::size_t i, std::size_t j, const Rational& r, double rd) const;
  const std::vector<Bits>& adjacency(const Rational& eps);

  const FiniteNet* net_;
  std::size_t n_;
  std::vector<double> shadow_;
  std::map<Rational, std::vector<Bits>> adjacency_;
};

}  // namespace polishtop
