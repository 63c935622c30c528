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

#include "polishtop/line.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "polishtop/errors.hpp"
#include "polishtop/net_index.hpp"

namespace polishtop {

Rational h_value(const Presentation& pres, PointId basepoint, PointId x) {
  return 1 / (1 + sup_distance(pres.point(basepoint), pres.point(x)));
}

CompactifiedPresentation::CompactifiedPresentation(Presentation base, PointId basepoint)
    : base_(std::move(base)), basepoint_(basepoint) {
  if (base_.size() == 0) throw PreconditionError("cannot compactify an empty presentation");
  base_.point(basepoint_);  // throws LookupError
}

Rational CompactifiedPresentation::h(std::size_t position) const {
  if (position == 0 || position >= size()) {
    throw LookupError("h is defined on base positions 1.." + std::to_string(size() - 1));
  }
  return h_value(base_, basepoint_, position - 1);
}

Rational CompactifiedPresentation::distance(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw LookupError("position outside the compactification");
  if (i == j) return 0;
  if (i == 0) return h(j);
  if (j == 0) return h(i);
  const Rational d = sup_distance(base_.point(i - 1), base_.point(j - 1));
  const Rational via = h(i) + h(j);
  return min(d, via);
}

FiniteNet CompactifiedPresentation::net(std::size_t n, int precision_k) const {
  if (n == 0) throw ParameterError("a net needs at least one point");
  if (n > size()) throw SizeError("compactification has only " + std::to_string(size()) + " points");
  std::vector<Rational> hs(n);
  for (std::size_t i = 1; i < n; ++i) hs[i] = h(i);
  std::vector<Rational> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (i == 0) {
        upper.push_back(hs[j]);
        continue;
      }
      const Rational d = sup_distance(base_.point(i - 1), base_.point(j - 1));
      const Rational via = hs[i] + hs[j];
      upper.push_back(min(d, via));
    }
  }
  return FiniteNet(n, std::move(upper), precision_k);
}

CompactifiedPresentation compactify(const Presentation& pres, PointId basepoint) {
  return CompactifiedPresentation(pres, basepoint);
}

CompositeReport check_real_line(const Presentation& pres, PointId basepoint,
                                const Resolution& res) {
  validate(res);
  const CompactifiedPresentation hat = compactify(pres, basepoint);
  const FiniteNet base_net = build_net(pres, pres.size(), 0);
  NetIndex base_index(base_net);
  CompositeReport report = classify_circle(hat.net(hat.size()), res);
  report.label = "real-line";
  report.verdicts.insert(report.verdicts.begin(), check_noncompact(base_index, res));
  return report;
}

// ---- trees ----------------------------------------------------------------

namespace {

bool bfs_less(const TreeNode& a, const TreeNode& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

TreeSpec::TreeSpec(std::vector<TreeNode> nodes) {
  std::sort(nodes.begin(), nodes.end(), bfs_less);
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  const std::set<TreeNode> all(nodes.begin(), nodes.end());
  for (const auto& node : nodes) {
    if (node.empty()) throw ParameterError("tree nodes must be nonempty sequences");
    if (node.size() > 1 && all.count(TreeNode(node.begin(), node.end() - 1)) == 0) {
      throw ParameterError("tree is not closed under prefixes");
    }
  }
  nodes_ = std::move(nodes);
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i + 1);
}

TreeSpec TreeSpec::single_path(std::size_t depth) {
  std::vector<TreeNode> nodes;
  for (std::size_t d = 1; d <= depth; ++d) nodes.emplace_back(d, 0);
  return TreeSpec(std::move(nodes));
}

TreeSpec TreeSpec::antichain(std::size_t count) {
  std::vector<TreeNode> nodes;
  for (std::size_t i = 0; i < count; ++i) nodes.push_back({static_cast<std::int64_t>(i)});
  return TreeSpec(std::move(nodes));
}

const TreeNode& TreeSpec::node(std::size_t n) const {
  if (n == 0 || n > nodes_.size()) {
    throw LookupError("tree enumeration has no node " + std::to_string(n));
  }
  return nodes_[n - 1];
}

std::optional<std::size_t> TreeSpec::index_of(const TreeNode& node) const {
  auto it = index_.find(node);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TreeSpec read_tree(std::istream& in) {
  std::vector<TreeNode> nodes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    TreeNode node;
    std::string word;
    while (words >> word) {
      std::int64_t v = 0;
      const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
      if (ec != std::errc() || end != word.data() + word.size()) {
        throw ParseError("tree line " + std::to_string(line_no) + ": bad integer '" + word + "'");
      }
      node.push_back(v);
    }
    if (!node.empty()) nodes.push_back(std::move(node));
  }
  try {
    return TreeSpec(std::move(nodes));
  } catch (const ParameterError& e) {
    throw ParseError(std::string("tree file: ") + e.what());
  }
}

TreeSpec tree_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_tree(in);
}

void write_tree(std::ostream& out, const TreeSpec& tree) {
  for (const auto& node : tree.nodes()) {
    for (std::size_t i = 0; i < node.size(); ++i) out << (i ? " " : "") << node[i];
    out << '\n';
  }
}

// ---- the embedding p ---------------------------------------------------------

CoordIndex w_coordinate() { return 0; }
CoordIndex v_coordinate(std::size_t n) { return static_cast<CoordIndex>(2 * n + 1); }
CoordIndex u_coordinate(std::size_t k) { return static_cast<CoordIndex>(2 * k + 2); }

Rational decay(const Rational& t) {
  if (t >= 0) return 1 / (1 + t);
  return 1 - t;
}

Rational chi(const TreeNode& sigma, const TreeSpec& tree) {
  if (sigma.empty()) throw ParameterError("chi is undefined at the root");
  if (!tree.contains(sigma)) return 1;
  return Rational(1, static_cast<unsigned long>(sigma.size()));
}

SparsePoint x_tau(const TreeNode& tau, const TreeSpec& tree) {
  if (tau.empty()) throw ParameterError("x_tau needs a nonempty sequence");
  SparsePoint out;
  for (std::size_t len = 1; len <= tau.size(); ++len) {
    const TreeNode prefix(tau.begin(), tau.begin() + static_cast<std::ptrdiff_t>(len));
    const auto k = tree.index_of(prefix);
    if (!k) throw LookupError("prefix of length " + std::to_string(len) + " is not enumerated");
    out.set(u_coordinate(*k), chi(prefix, tree));
  }
  return out;
}

Rational psi(std::int64_t n, const Rational& t) {
  const Rational lo(static_cast<long>(n));
  if (t <= lo || t >= lo + 1) return 0;
  const Rational mid = lo + Rational(1, 2);
  if (t <= mid) return 2 * (t - lo);
  return 2 * (lo + 1 - t);
}

SparsePoint embed_p(const Rational& t, const TreeSpec& tree) {
  SparsePoint out;
  if (t > 0) {
    Integer floor_t;
    mpz_fdiv_q(floor_t.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    if (!floor_t.fits_slong_p()) throw LookupError("t beyond the tree enumeration");
    const long n = floor_t.get_si();
    auto x = [&](long m) { return x_tau(tree.node(static_cast<std::size_t>(m)), tree); };
    if (n == 0) {
      out = x(1).scaled(t);
    } else if (t == Rational(n)) {
      out = x(n);
    } else {
      out = x(n).scaled(Rational(n + 1) - t) + x(n + 1).scaled(t - Rational(n));
      out.set(v_coordinate(static_cast<std::size_t>(n)), psi(n, t));
    }
  }
  out.set(w_coordinate(), decay(t));
  return out;
}

Presentation gen_line_presentation(const TreeSpec& tree, const std::vector<Rational>& grid) {
  Presentation pres("tree-line");
  std::set<Rational> seen;
  for (const auto& t : grid) {
    if (!seen.insert(t).second) continue;
    pres.add(embed_p(t, tree));
  }
  return pres;
}

}  // namespace polishtop
