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

#include "polishtop/net_index.hpp"

#include <cmath>

namespace polishtop {
namespace {

// Shadow values carry a relative error near 2^-52; anything closer than this
// margin is settled exactly.
constexpr double kMargin = 1e-9;

}  // namespace

NetIndex::NetIndex(const FiniteNet& net) : net_(&net), n_(net.size()), shadow_(n_ * n_, 0.0) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double d = to_double(net.dist(i, j));
      shadow_[i * n_ + j] = d;
      shadow_[j * n_ + i] = d;
    }
  }
}

int NetIndex::compare(std::size_t i, std::size_t j, const Rational& r, double rd) const {
  const double d = shadow_[i * n_ + j];
  const double slack = kMargin * std::max(1.0, std::fabs(rd));
  if (d < rd - slack) return -1;
  if (d > rd + slack) return 1;
  return cmp(net_->dist(i, j), r);
}

bool NetIndex::less(std::size_t i, std::size_t j, const Rational& r) const {
  return compare(i, j, r, to_double(r)) < 0;
}

bool NetIndex::less_equal(std::size_t i, std::size_t j, const Rational& r) const {
  return compare(i, j, r, to_double(r)) <= 0;
}

const std::vector<Bits>& NetIndex::adjacency(const Rational& eps) {
  auto it = adjacency_.find(eps);
  if (it != adjacency_.end()) return it->second;
  std::vector<Bits> rows(n_, Bits(n_));
  const double rd = to_double(eps);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (compare(i, j, eps, rd) < 0) {
        rows[i].set(j);
        rows[j].set(i);
      }
    }
  }
  return adjacency_.emplace(eps, std::move(rows)).first->second;
}

const Bits& NetIndex::neighbors(std::size_t v, const Rational& eps) { return adjacency(eps)[v]; }

Bits NetIndex::ball(std::size_t center, const Rational& radius, BallMode mode) const {
  Bits out(n_);
  const double rd = to_double(radius);
  for (std::size_t p = 0; p < n_; ++p) {
    const int c = compare(center, p, radius, rd);
    if (c < 0 || (c == 0 && mode == BallMode::Closed)) out.set(p);
  }
  return out;
}

Bits NetIndex::region(const Region& region) const {
  Bits out(n_);
  for (const Ball& b : region.balls) out |= ball(b.center, b.radius, b.mode);
  return out;
}

Bits NetIndex::all() const {
  Bits out(n_);
  out.set();
  return out;
}

Bits NetIndex::reach(std::size_t x, const Rational& eps, const Bits& expandable) {
  const auto& adj = adjacency(eps);
  Bits visited(n_);
  visited.set(x);
  Bits frontier(n_);
  frontier.set(x);
  Bits next(n_);
  while (frontier.any()) {
    next.reset();
    for (auto v = frontier.find_first(); v != Bits::npos; v = frontier.find_next(v)) {
      next |= adj[v];
    }
    next -= visited;
    visited |= next;
    frontier = next & expandable;
  }
  return visited;
}

std::optional<std::vector<std::size_t>> NetIndex::path(std::size_t x, std::size_t y,
                                                       const Rational& eps,
                                                       const Bits& expandable) {
  if (x == y) return std::vector<std::size_t>{x};
  const auto& adj = adjacency(eps);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n_, kNone);
  Bits visited(n_);
  visited.set(x);
  std::vector<std::size_t> frontier{x};
  while (!frontier.empty() && !visited.test(y)) {
    std::vector<std::size_t> next;
    for (std::size_t v : frontier) {
      Bits fresh = adj[v] - visited;
      for (auto w = fresh.find_first(); w != Bits::npos; w = fresh.find_next(w)) {
        parent[w] = v;
        if (expandable.test(w)) next.push_back(w);
      }
      visited |= fresh;
    }
    frontier = std::move(next);
  }
  if (!visited.test(y)) return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t v = y; v != x; v = parent[v]) out.push_back(v);
  out.push_back(x);
  return std::vector<std::size_t>(out.rbegin(), out.rend());
}

std::vector<int> NetIndex::components(const Rational& eps, const Bits& vertices) {
  const auto& adj = adjacency(eps);
  std::vector<int> label(n_, -1);
  Bits unseen = vertices;
  int next_label = 0;
  for (auto root = unseen.find_first(); root != Bits::npos; root = unseen.find_first()) {
    Bits frontier(n_);
    frontier.set(root);
    unseen.reset(root);
    Bits grow(n_);
    while (frontier.any()) {
      grow.reset();
      for (auto v = frontier.find_first(); v != Bits::npos; v = frontier.find_next(v)) {
        label[v] = next_label;
        grow |= adj[v];
      }
      grow &= unseen;
      unseen -= grow;
      frontier = grow;
    }
    ++next_label;
  }
  return label;
}

}  // namespace polishtop
