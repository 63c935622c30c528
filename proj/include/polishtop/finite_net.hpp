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
#include <optional>
#include <string>
#include <vector>

#include "polishtop/presentation.hpp"
#include "polishtop/rational.hpp"

namespace polishtop {

// The first n special points of a presentation together with their exact
// pairwise distances. Points are addressed by their position 0..n-1, which
// coincides with the PointId of the source presentation.
class FiniteNet {
 public:
  FiniteNet() = default;

  // `upper` holds d(i, j) for i < j in row-major order of the upper triangle.
  FiniteNet(std::size_t n, std::vector<Rational> upper, int precision_k);

  std::size_t size() const { return n_; }
  int precision() const { return precision_k_; }

  // Throws LookupError outside 0..size()-1.
  const Rational& dist(std::size_t i, std::size_t j) const;

  // Exhaustive check of symmetry-by-construction, zero diagonal and the
  // triangle inequality over all triples. Returns a violating triple if any.
  std::optional<std::vector<std::size_t>> find_triangle_violation() const;
  bool verify_triangle() const { return !find_triangle_violation().has_value(); }

  // Sub-net on the given positions, in the given order.
  FiniteNet restricted(const std::vector<std::size_t>& positions) const;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  int precision_k_ = 0;
  std::vector<Rational> upper_;
};

// Materializes the first n points of `pres`. Throws ParameterError for
// n == 0 and SizeError if the presentation has fewer than n points.
FiniteNet build_net(const Presentation& pres, std::size_t n, int k);

// Net file:
//   net <n> <k>
//   d <i> <j> <num>/<den>      (every i < j, in order)
void write_net(std::ostream& out, const FiniteNet& net);
std::string net_to_string(const FiniteNet& net);
FiniteNet read_net(std::istream& in);
FiniteNet net_from_string(const std::string& text);

enum class BallMode { Open, Closed };

bool ball_relation(const FiniteNet& net, std::size_t center, const Rational& radius,
                   std::size_t p, BallMode mode);

struct Ball {
  std::size_t center = 0;
  Rational radius;
  BallMode mode = BallMode::Open;
};

// A finite union of balls centered on net points.
struct Region {
  std::vector<Ball> balls;

  bool contains(const FiniteNet& net, std::size_t p) const;
  bool empty() const { return balls.empty(); }
};

struct PathWitness {
  std::vector<std::size_t> points;
  Rational eps;
};

// Breadth-first search for an eps-path from x to y whose interior points lie
// outside `forbidden`. The endpoints themselves are not tested against the
// region. Returns a shortest witness (fewest hops, lowest positions first).
// Throws ParameterError for eps <= 0 and LookupError for unknown points.
std::optional<PathWitness> eps_path(const FiniteNet& net, std::size_t x, std::size_t y,
                                    const Rational& eps, const Region& forbidden = {});

// Checks the PathWitness invariants against the net and region. The region
// is tested on interior points only, matching eps_path.
bool is_valid_path(const FiniteNet& net, const PathWitness& witness, std::size_t x,
                   std::size_t y, const Region& forbidden = {});

}  // namespace polishtop
