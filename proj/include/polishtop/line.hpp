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
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polishtop/checkers.hpp"
#include "polishtop/finite_net.hpp"
#include "polishtop/presentation.hpp"
#include "polishtop/rational.hpp"
#include "polishtop/sparse_point.hpp"

namespace polishtop {

// ---- one-point compactification -------------------------------------------

// 1 / (1 + d(basepoint, x)). Throws LookupError for unknown ids.
Rational h_value(const Presentation& pres, PointId basepoint, PointId x);

// Position 0 is the added point at infinity; position i >= 1 is base point
// i - 1. Distances are d^(x,y) = min(d(x,y), h(x) + h(y)) and
// d^(inf, x) = h(x). This is not a sup metric, so it is only available as a
// net.
class CompactifiedPresentation {
 public:
  // Throws PreconditionError for an empty presentation and LookupError for
  // an unknown basepoint.
  CompactifiedPresentation(Presentation base, PointId basepoint);

  const Presentation& base() const { return base_; }
  PointId basepoint() const { return basepoint_; }
  std::size_t size() const { return base_.size() + 1; }

  Rational h(std::size_t position) const;
  Rational distance(std::size_t i, std::size_t j) const;

  // First n positions (infinity included). Throws ParameterError for n == 0
  // and SizeError for n > size().
  FiniteNet net(std::size_t n, int precision_k = 0) const;

 private:
  Presentation base_;
  PointId basepoint_ = 0;
};

CompactifiedPresentation compactify(const Presentation& pres, PointId basepoint);

// Non-compactness of the base net plus classify_circle of the compactified
// net, both over every enumerated point.
CompositeReport check_real_line(const Presentation& pres, PointId basepoint,
                                const Resolution& res);

// ---- trees and the embedding p -------------------------------------------

using TreeNode = std::vector<std::int64_t>;

// A finite tree of nonempty integer sequences (the root is implicit),
// enumerated breadth first: by length, then lexicographically. Nodes are
// numbered from 1.
class TreeSpec {
 public:
  TreeSpec() = default;
  // Throws ParameterError for an empty node or a node whose proper prefix is
  // missing. Repeated nodes are merged.
  explicit TreeSpec(std::vector<TreeNode> nodes);

  static TreeSpec single_path(std::size_t depth);  // (0), (0,0), ...
  static TreeSpec antichain(std::size_t count);    // (0), (1), ...

  std::size_t size() const { return nodes_.size(); }
  bool contains(const TreeNode& node) const { return index_.count(node) != 0; }
  // sigma_n; throws LookupError outside 1..size().
  const TreeNode& node(std::size_t n) const;
  std::optional<std::size_t> index_of(const TreeNode& node) const;
  const std::vector<TreeNode>& nodes() const { return nodes_; }

 private:
  std::vector<TreeNode> nodes_;
  std::map<TreeNode, std::size_t> index_;
};

// One node per line as space-separated integers; blank lines and '#'
// comments are skipped. Throws ParseError on malformed lines.
TreeSpec read_tree(std::istream& in);
TreeSpec tree_from_string(const std::string& text);
void write_tree(std::ostream& out, const TreeSpec& tree);

// Coordinates of the ambient vectors: w at 0, v_n at 2n+1, u_{sigma_k} at
// 2k+2.
CoordIndex w_coordinate();
CoordIndex v_coordinate(std::size_t n);
CoordIndex u_coordinate(std::size_t k);

// Stand-in for e^-t: 1/(1+t) for t >= 0 and 1 - t for t < 0.
Rational decay(const Rational& t);

// 1/|sigma| for sigma in T, 1 otherwise. Throws ParameterError for the
// empty sequence.
Rational chi(const TreeNode& sigma, const TreeSpec& tree);

// Sum of chi(rho) u_rho over the nonempty prefixes rho of tau. Throws
// ParameterError for empty tau and LookupError if a prefix is not
// enumerated.
SparsePoint x_tau(const TreeNode& tau, const TreeSpec& tree);

// Tent on [n, n+1] with apex 1 at n + 1/2, zero elsewhere.
Rational psi(std::int64_t n, const Rational& t);

// p(t) with decay(t) in place of e^-t. Throws LookupError when t needs
// sigma_m for m beyond the enumeration.
SparsePoint embed_p(const Rational& t, const TreeSpec& tree);

// p over the grid in grid order, repeated grid values dropped.
Presentation gen_line_presentation(const TreeSpec& tree, const std::vector<Rational>& grid);

}  // namespace polishtop
