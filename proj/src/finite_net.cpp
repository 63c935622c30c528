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

#include "polishtop/finite_net.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

#include "polishtop/errors.hpp"

namespace polishtop {

FiniteNet::FiniteNet(std::size_t n, std::vector<Rational> upper, int precision_k)
    : n_(n), precision_k_(precision_k), upper_(std::move(upper)) {
  if (upper_.size() != n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2) {
    throw PreconditionError("distance list has " + std::to_string(upper_.size()) +
                            " entries for a net of " + std::to_string(n_) + " points");
  }
  for (const Rational& d : upper_) {
    if (d < 0) throw PreconditionError("negative distance in net");
  }
}

std::size_t FiniteNet::slot(std::size_t i, std::size_t j) const {
  // Offset of row i in the upper triangle is i*n - i*(i+1)/2.
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

const Rational& FiniteNet::dist(std::size_t i, std::size_t j) const {
  static const Rational kZero(0);
  if (i >= n_ || j >= n_) {
    throw LookupError("net position " + std::to_string(std::max(i, j)) + " outside net of " +
                      std::to_string(n_) + " points");
  }
  if (i == j) return kZero;
  if (i > j) std::swap(i, j);
  return upper_[slot(i, j)];
}

std::optional<std::vector<std::size_t>> FiniteNet::find_triangle_violation() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (dist(i, k) > dist(i, j) + dist(j, k)) return std::vector<std::size_t>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

FiniteNet FiniteNet::restricted(const std::vector<std::size_t>& positions) const {
  std::vector<Rational> upper;
  upper.reserve(positions.size() * (positions.size() - (positions.empty() ? 0 : 1)) / 2);
  for (std::size_t a = 0; a < positions.size(); ++a) {
    for (std::size_t b = a + 1; b < positions.size(); ++b) {
      upper.push_back(dist(positions[a], positions[b]));
    }
  }
  return FiniteNet(positions.size(), std::move(upper), precision_k_);
}

FiniteNet build_net(const Presentation& pres, std::size_t n, int k) {
  if (n == 0) throw ParameterError("net size must be at least 1");
  if (n > pres.size()) {
    throw SizeError("presentation has " + std::to_string(pres.size()) +
                    " points, net of " + std::to_string(n) + " requested");
  }
  std::vector<Rational> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) upper.push_back(metric_approx(pres, i, j, k));
  }
  return FiniteNet(n, std::move(upper), k);
}

void write_net(std::ostream& out, const FiniteNet& net) {
  out << "net " << net.size() << ' ' << net.precision() << '\n';
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      out << "d " << i << ' ' << j << ' ' << format_rational(net.dist(i, j)) << '\n';
    }
  }
}

std::string net_to_string(const FiniteNet& net) {
  std::ostringstream out;
  write_net(out, net);
  return out.str();
}

FiniteNet read_net(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  auto fail = [&](const std::string& why) {
    return ParseError("line " + std::to_string(line_no) + ": " + why);
  };
  std::size_t n = 0;
  int k = 0;
  {
    if (!std::getline(in, line)) throw fail("expected header 'net <n> <k>'");
    std::istringstream header(line);
    std::string keyword;
    std::string rest;
    if (!(header >> keyword >> n >> k) || keyword != "net" || (header >> rest)) {
      throw fail("expected header 'net <n> <k>'");
    }
  }
  std::vector<Rational> upper;
  upper.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
  std::size_t ei = 0;
  std::size_t ej = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string keyword;
    std::size_t i = 0;
    std::size_t j = 0;
    std::string value;
    std::string rest;
    if (!(fields >> keyword >> i >> j >> value) || keyword != "d" || (fields >> rest)) {
      throw fail("expected 'd <i> <j> <num>/<den>'");
    }
    if (ei + 1 >= n || i != ei || j != ej) {
      throw fail("expected entry for pair (" + std::to_string(ei) + "," + std::to_string(ej) +
                 ")");
    }
    try {
      upper.push_back(parse_rational(value));
    } catch (const ParseError& e) {
      throw fail(e.what());
    }
    if (upper.back() < 0) throw fail("negative distance");
    if (++ej == n) {
      ++ei;
      ej = ei + 1;
    }
  }
  if (upper.size() != n * (n - (n > 0 ? 1 : 0)) / 2) throw fail("truncated net file");
  return FiniteNet(n, std::move(upper), k);
}

FiniteNet net_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_net(in);
}

bool ball_relation(const FiniteNet& net, std::size_t center, const Rational& radius,
                   std::size_t p, BallMode mode) {
  const Rational& d = net.dist(center, p);
  return mode == BallMode::Open ? d < radius : d <= radius;
}

bool Region::contains(const FiniteNet& net, std::size_t p) const {
  return std::any_of(balls.begin(), balls.end(), [&](const Ball& b) {
    return ball_relation(net, b.center, b.radius, p, b.mode);
  });
}

std::optional<PathWitness> eps_path(const FiniteNet& net, std::size_t x, std::size_t y,
                                    const Rational& eps, const Region& forbidden) {
  if (eps <= 0) throw ParameterError("eps must be positive");
  const std::size_t n = net.size();
  if (x >= n || y >= n) throw LookupError("path endpoint outside net");
  if (x == y) return PathWitness{{x}, eps};

  // y is allowed as a terminal vertex even when it lies in the region.
  std::vector<char> allowed(n);
  for (std::size_t p = 0; p < n; ++p) allowed[p] = !forbidden.contains(net, p);
  allowed[y] = 1;

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, kNone);
  parent[x] = x;
  std::deque<std::size_t> queue{x};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (v == y) break;
    // Only x and allowed points may be expanded.
    if (v != x && !allowed[v]) continue;
    for (std::size_t w = 0; w < n; ++w) {
      if (parent[w] != kNone || !allowed[w]) continue;
      if (net.dist(v, w) < eps) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (parent[y] == kNone) return std::nullopt;
  PathWitness witness{{}, eps};
  for (std::size_t v = y; v != x; v = parent[v]) witness.points.push_back(v);
  witness.points.push_back(x);
  std::reverse(witness.points.begin(), witness.points.end());
  return witness;
}

bool is_valid_path(const FiniteNet& net, const PathWitness& witness, std::size_t x,
                   std::size_t y, const Region& forbidden) {
  const auto& pts = witness.points;
  if (pts.empty() || pts.front() != x || pts.back() != y || witness.eps <= 0) return false;
  for (std::size_t p : pts) {
    if (p >= net.size()) return false;
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(net.dist(pts[i], pts[i + 1]) < witness.eps)) return false;
  }
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (forbidden.contains(net, pts[i])) return false;
  }
  return true;
}

}  // namespace polishtop
