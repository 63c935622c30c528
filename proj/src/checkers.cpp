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

#include "polishtop/checkers.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>

#include "polishtop/errors.hpp"

namespace polishtop {
namespace {

using Tuple4 = std::array<std::size_t, 4>;

EvidenceItem item(std::string kind, std::vector<std::size_t> points,
                  std::vector<Rational> params = {}) {
  return EvidenceItem{std::move(kind), std::move(points), std::move(params)};
}

std::size_t vertex_count(const NetIndex& index, const Resolution& res) {
  return std::min(res.n_points, index.size());
}

bool within_budget(std::size_t count, const Resolution& res) {
  return res.tuple_budget == 0 || count <= res.tuple_budget;
}

bool exceeds_cap(const std::vector<std::size_t>& path, const Resolution& res) {
  return res.max_path_len != 0 && path.size() - 1 > res.max_path_len;
}

void check_position(const NetIndex& index, std::size_t p) {
  if (p >= index.size()) {
    throw LookupError("net position " + std::to_string(p) + " outside net of " +
                      std::to_string(index.size()) + " points");
  }
}

// Greedy closed-ball cover of `members`, centers drawn from `members` in
// position order. Stops once more than `limit` centers are used (limit 0
// means no limit).
std::vector<std::size_t> greedy_cover(NetIndex& index, const Bits& members, const Rational& eps,
                                      std::size_t limit = 0) {
  std::vector<std::size_t> centers;
  Bits uncovered = members;
  for (auto c = uncovered.find_first(); c != Bits::npos; c = uncovered.find_first()) {
    centers.push_back(c);
    if (limit != 0 && centers.size() > limit) break;
    uncovered -= index.ball(c, eps, BallMode::Closed);
  }
  return centers;
}

// Canonical form of the partition of `members` induced by `labels`: each
// member is replaced by the rank of its label's first occurrence.
std::vector<int> canonical_partition(const std::vector<int>& labels, const Bits& members) {
  std::vector<int> remap(labels.size() + 1, -1);
  std::vector<int> out;
  int next = 0;
  for (auto p = members.find_first(); p != Bits::npos; p = members.find_next(p)) {
    int& slot = remap[static_cast<std::size_t>(labels[p])];
    if (slot < 0) slot = next++;
    out.push_back(slot);
  }
  return out;
}

// ---- BTW -----------------------------------------------------------------

struct Outcome {
  Status status = Status::Holds;
  std::vector<EvidenceItem> items;
};

// For each testable delta (one with a finer delta' in delta_grid and some
// eps in eps_grid below it), the most permissive choice is the largest such
// delta' and the finest eps: any avoiding path there avoids every smaller
// closed ball and is an eps-path for every larger eps.
Outcome evaluate_btw(NetIndex& index, std::size_t x, std::size_t y, std::size_t z,
                     const Resolution& res) {
  Outcome out;
  bool tested = false;
  const Rational& eps = res.eps_grid.back();
  for (std::size_t i = 0; i + 1 < res.delta_grid.size(); ++i) {
    const Rational& delta = res.delta_grid[i];
    const Rational& delta_prime = res.delta_grid[i + 1];
    if (!(eps < delta)) continue;
    tested = true;
    const std::vector<Rational> params{delta, delta_prime, eps};
    if (index.less_equal(y, x, delta_prime) || index.less_equal(y, z, delta_prime)) {
      out.items.push_back(item("btw-blocked", {x, y, z}, params));
      continue;
    }
    Bits expandable = index.ball(y, delta_prime, BallMode::Closed);
    expandable.flip();
    auto path = index.path(x, z, eps, expandable);
    if (!path) {
      out.items.push_back(item("btw-blocked", {x, y, z}, params));
      continue;
    }
    std::vector<std::size_t> pts{y};
    pts.insert(pts.end(), path->begin(), path->end());
    if (exceeds_cap(*path, res)) {
      out.status = Status::Inconclusive;
      out.items = {item("path-cap", std::move(pts), params)};
      return out;
    }
    out.status = Status::Fails;
    out.items = {item("btw-path", std::move(pts), params)};
    return out;
  }
  if (!tested) {
    out.status = Status::Inconclusive;
    out.items = {item("btw-untestable", {x, y, z})};
  }
  return out;
}

// ---- CIRC ----------------------------------------------------------------

Outcome evaluate_arrangement(NetIndex& index, const Tuple4& x, const Resolution& res) {
  Outcome out;
  if (res.delta_grid.size() < 2) {
    out.status = Status::Inconclusive;
    out.items = {item("circ-untestable", {x.begin(), x.end()})};
    return out;
  }
  const Rational& eps = res.eps_grid.back();
  // Clause (1): the finest delta serves as rho for every coarser delta.
  const Rational& rho = res.delta_grid.back();
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t a = x[i];
    const std::size_t b = x[(i + 1) % 4];
    const std::size_t c = x[(i + 2) % 4];
    const std::size_t d = x[(i + 3) % 4];
    Bits blocked = index.ball(c, rho, BallMode::Closed) | index.ball(d, rho, BallMode::Closed);
    if (blocked.test(a) || blocked.test(b)) {
      // A smaller rho would separate them; the grid has none.
      out.status = Status::Inconclusive;
      out.items = {item("circ-unseparated", {a, b, c, d}, {rho})};
      return out;
    }
    blocked.flip();
    auto path = index.path(a, b, eps, blocked);
    if (!path) {
      out.status = Status::Fails;
      out.items = {item("circ-clause1-blocked", {a, b, c, d}, {rho, eps})};
      return out;
    }
    if (exceeds_cap(*path, res)) {
      out.status = Status::Inconclusive;
      out.items = {item("path-cap", *path, {rho, eps})};
      return out;
    }
  }
  // Clause (2): the finest eps is the strongest candidate for "there is eps".
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t a = x[i];
    const std::size_t next = x[(i + 1) % 4];
    const std::size_t c = x[(i + 2) % 4];
    const std::size_t prev = x[(i + 3) % 4];
    for (const Rational& delta : res.delta_grid) {
      Bits region = index.ball(next, delta, BallMode::Open) | index.ball(prev, delta, BallMode::Open);
      if (region.test(a) || region.test(c)) continue;
      region.flip();
      auto path = index.path(a, c, eps, region);
      if (!path) continue;
      std::vector<std::size_t> pts{next, prev};
      pts.insert(pts.end(), path->begin(), path->end());
      out.status = Status::Fails;
      out.items = {item("circ-clause2-path", std::move(pts), {delta, eps})};
      return out;
    }
  }
  return out;
}

const std::array<Tuple4, 3> arrangements(std::size_t a, std::size_t b, std::size_t c,
                                         std::size_t d) {
  return {Tuple4{a, b, c, d}, Tuple4{a, b, d, c}, Tuple4{a, c, b, d}};
}

// Evaluates one 4-subset: Holds with the first cyclic arrangement that
// satisfies both clauses, Fails if all three fail.
Outcome evaluate_quad(NetIndex& index, std::size_t a, std::size_t b, std::size_t c,
                      std::size_t d, const Resolution& res) {
  Outcome out;
  std::vector<EvidenceItem> reasons;
  bool undecided = false;
  for (const Tuple4& arr : arrangements(a, b, c, d)) {
    Outcome r = evaluate_arrangement(index, arr, res);
    if (r.status == Status::Holds) {
      out.items = {item("circ-cyclic", {arr.begin(), arr.end()})};
      return out;
    }
    if (r.status == Status::Inconclusive) undecided = true;
    reasons.insert(reasons.end(), r.items.begin(), r.items.end());
  }
  if (undecided) {
    out.status = Status::Inconclusive;
    out.items = {item("circ-undecided", {a, b, c, d})};
    out.items.insert(out.items.end(), reasons.begin(), reasons.end());
    return out;
  }
  out.status = Status::Fails;
  out.items = {item("circ-acyclic", {a, b, c, d})};
  out.items.insert(out.items.end(), reasons.begin(), reasons.end());
  return out;
}

// ---- ORD -----------------------------------------------------------------

Outcome evaluate_triple(NetIndex& index, std::size_t a, std::size_t b, std::size_t c,
                        const Resolution& res) {
  Outcome out;
  std::vector<EvidenceItem> reasons;
  bool undecided = false;
  // Each of the three points in the middle.
  const std::array<std::array<std::size_t, 3>, 3> orders{
      {{a, b, c}, {b, a, c}, {a, c, b}}};
  for (const auto& o : orders) {
    Outcome r = evaluate_btw(index, o[0], o[1], o[2], res);
    if (r.status == Status::Holds) {
      out.items = {item("ord-ordered", {o[0], o[1], o[2]})};
      return out;
    }
    if (r.status == Status::Inconclusive) undecided = true;
    reasons.insert(reasons.end(), r.items.begin(), r.items.end());
  }
  out.status = undecided ? Status::Inconclusive : Status::Fails;
  out.items = {item(undecided ? "ord-undecided" : "ord-unordered", {a, b, c})};
  out.items.insert(out.items.end(), reasons.begin(), reasons.end());
  return out;
}

// Scans k-subsets of the first m positions in lexicographic order, at most
// `budget` of them (0: all). Stops at the first Fails.
Verdict scan_tuples(NetIndex& index, const Resolution& res, std::size_t k, std::string property,
                    const std::function<Outcome(const std::vector<std::size_t>&)>& evaluate) {
  Verdict v{std::move(property), Status::Holds, {}, res, {}};
  const std::size_t m = vertex_count(index, res);
  std::size_t checked = 0;
  std::optional<std::vector<EvidenceItem>> first_undecided;
  if (m >= k) {
    std::vector<std::size_t> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = i;
    while (true) {
      if (res.tuple_budget != 0 && checked == res.tuple_budget) break;
      ++checked;
      Outcome o = evaluate(t);
      if (o.status == Status::Fails) {
        v.status = Status::Fails;
        v.evidence = std::move(o.items);
        v.note = "tuples scanned: " + std::to_string(checked);
        return v;
      }
      if (o.status == Status::Inconclusive) {
        if (!first_undecided) first_undecided = std::move(o.items);
      } else {
        v.evidence.insert(v.evidence.end(), o.items.begin(), o.items.end());
      }
      // Next combination.
      std::size_t i = k;
      while (i > 0 && t[i - 1] == m - k + (i - 1)) --i;
      if (i == 0) break;
      ++t[i - 1];
      for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
    }
  }
  if (first_undecided) {
    v.status = Status::Inconclusive;
    v.evidence = std::move(*first_undecided);
  }
  v.note = "tuples scanned: " + std::to_string(checked);
  return v;
}

// ---- replay --------------------------------------------------------------

bool is_failure_kind(const std::string& kind) {
  return kind == "ndegen-degenerate" || kind == "conn-family-u" || kind == "btw-path" ||
         kind == "lc-split" || kind == "ord-unordered" || kind == "circ-acyclic" ||
         kind == "noncompact-bounded";
}

bool is_inconclusive_kind(const std::string& kind) {
  return kind == "cpct-budget" || kind == "btw-untestable" || kind == "lc-untestable" ||
         kind == "ord-undecided" || kind == "circ-undecided" || kind == "circ-untestable" ||
         kind == "path-cap" || kind == "noncompact-unbudgeted" || kind == "circ-unseparated";
}

std::optional<std::size_t> grid_position(const std::vector<Rational>& grid, const Rational& v) {
  auto it = std::find(grid.begin(), grid.end(), v);
  if (it == grid.end()) return std::nullopt;
  return static_cast<std::size_t>(it - grid.begin());
}

// Returns an empty string on success, otherwise the reason.
std::string verify_item(NetIndex& index, const EvidenceItem& it, const std::vector<EvidenceItem>& all,
                        const Resolution& res) {
  const auto& p = it.points;
  const auto& q = it.params;
  for (std::size_t pt : p) {
    if (pt >= index.size()) return "point outside net";
  }
  auto need = [&](std::size_t np, std::size_t nq) {
    return (np == 0 || p.size() == np) && q.size() == nq;
  };
  const std::string& k = it.kind;
  if (k == "ndegen-pair") {
    if (!need(2, 0)) return "malformed";
    return index.net().dist(p[0], p[1]) > 0 ? "" : "pair at distance 0";
  }
  if (k == "ndegen-degenerate") {
    for (std::size_t i = 0; i < index.size(); ++i) {
      for (std::size_t j = i + 1; j < index.size(); ++j) {
        if (index.net().dist(i, j) > 0) return "net has two distinct points";
      }
    }
    return index.size() >= 1 ? "" : "empty net";
  }
  if (k == "cpct-cover" || k == "cpct-budget") {
    if (q.empty() || !grid_position(res.eps_grid, q[0])) return "eps not in grid";
    if (k == "cpct-budget") {
      if (q.size() != 2) return "malformed";
      auto centers = greedy_cover(index, index.all(), q[0], res.tuple_budget);
      return within_budget(centers.size(), res) ? "cover fits the budget" : "";
    }
    Bits covered(index.size());
    for (std::size_t c : p) covered |= index.ball(c, q[0], BallMode::Closed);
    return covered.all() ? "" : "cover misses a point";
  }
  if (k == "conn-connected") {
    if (!need(0, 1)) return "malformed";
    auto labels = index.components(2 * q[0], index.all());
    return std::all_of(labels.begin(), labels.end(), [](int l) { return l == 0; })
               ? ""
               : "2eps-graph disconnected";
  }
  if (k == "conn-family-u" || k == "conn-family-v") {
    if (q.size() != 1) return "malformed";
    const EvidenceItem* other = nullptr;
    const std::string other_kind = k == "conn-family-u" ? "conn-family-v" : "conn-family-u";
    for (const auto& o : all) {
      if (o.kind == other_kind && o.params == q) other = &o;
    }
    if (other == nullptr || p.empty() || other->points.empty()) return "missing family";
    const Rational& eps = q[0];
    Bits covered(index.size());
    Bits u_star(index.size());
    Bits v_star(index.size());
    for (std::size_t c : p) {
      covered |= index.ball(c, eps, BallMode::Closed);
      u_star |= index.ball(c, 2 * eps, BallMode::Open);
    }
    for (std::size_t c : other->points) {
      covered |= index.ball(c, eps, BallMode::Closed);
      v_star |= index.ball(c, 2 * eps, BallMode::Open);
    }
    if (!covered.all()) return "families do not cover the net";
    return u_star.intersects(v_star) ? "enlargements intersect" : "";
  }
  if (k == "btw-blocked" || k == "btw-path") {
    if (q.size() != 3) return "malformed";
    auto di = grid_position(res.delta_grid, q[0]);
    if (!di || *di + 1 >= res.delta_grid.size() || res.delta_grid[*di + 1] != q[1] ||
        q[2] != res.eps_grid.back() || !(q[2] < q[0])) {
      return "parameters do not match the resolution";
    }
    if (k == "btw-blocked") {
      if (!need(3, 3)) return "malformed";
      const std::size_t x = p[0], y = p[1], z = p[2];
      if (index.less_equal(y, x, q[1]) || index.less_equal(y, z, q[1])) return "";
      Bits expandable = index.ball(y, q[1], BallMode::Closed);
      expandable.flip();
      return index.path(x, z, q[2], expandable) ? "an avoiding path exists" : "";
    }
    if (p.size() < 3) return "malformed";
    const std::size_t y = p[0];
    PathWitness w{std::vector<std::size_t>(p.begin() + 1, p.end()), q[2]};
    if (!is_valid_path(index.net(), w, w.points.front(), w.points.back())) return "invalid path";
    for (std::size_t a : w.points) {
      if (index.less_equal(y, a, q[1])) return "path enters the closed ball";
    }
    return "";
  }
  if (k == "btw-untestable") {
    for (std::size_t i = 0; i + 1 < res.delta_grid.size(); ++i) {
      if (res.eps_grid.back() < res.delta_grid[i]) return "a testable delta exists";
    }
    return "";
  }
  if (k == "ord-ordered" || k == "ord-unordered" || k == "ord-undecided") {
    if (!need(3, 0)) return "malformed";
    if (k == "ord-ordered") {
      return evaluate_btw(index, p[0], p[1], p[2], res).status == Status::Holds ? ""
                                                                                 : "not between";
    }
    const Status want = k == "ord-unordered" ? Status::Fails : Status::Inconclusive;
    return evaluate_triple(index, p[0], p[1], p[2], res).status == want ? ""
                                                                        : "triple status differs";
  }
  if (k == "lc-stable" || k == "lc-split") {
    if (q.size() != 3 || p.empty()) return "malformed";
    const auto n = res.eps_grid.size();
    if (n < 2 || q[1] != res.eps_grid[n - 2] || q[2] != res.eps_grid[n - 1] ||
        !grid_position(res.delta_grid, q[0])) {
      return "parameters do not match the resolution";
    }
    const Bits a_ball = index.ball(p[0], q[0], BallMode::Open);
    const Bits b_ball = index.ball(p[0], 2 * q[0], BallMode::Open);
    if (k == "lc-stable") {
      auto coarse = canonical_partition(index.components(q[1], b_ball), a_ball);
      auto fine = canonical_partition(index.components(q[2], b_ball), a_ball);
      return coarse == fine ? "" : "partition changes";
    }
    if (p.size() != 3 || !a_ball.test(p[1]) || !a_ball.test(p[2])) return "split points not in A";
    Bits inside = b_ball;
    if (!index.reach(p[1], q[1], inside).test(p[2])) return "no coarse path";
    Bits reach_fine = index.reach(p[1], q[2], inside) & inside;
    return reach_fine.test(p[2]) ? "fine path exists" : "";
  }
  if (k == "lc-untestable") return res.eps_grid.size() < 2 ? "" : "eps grid has two values";
  if (k == "circ-cyclic" || k == "circ-acyclic" || k == "circ-undecided") {
    if (!need(4, 0)) return "malformed";
    if (k == "circ-cyclic") {
      return evaluate_arrangement(index, Tuple4{p[0], p[1], p[2], p[3]}, res).status ==
                     Status::Holds
                 ? ""
                 : "arrangement fails";
    }
    const Status want = k == "circ-acyclic" ? Status::Fails : Status::Inconclusive;
    return evaluate_quad(index, p[0], p[1], p[2], p[3], res).status == want
               ? ""
               : "tuple status differs";
  }
  if (k == "circ-unseparated") {
    if (!need(4, 1) || q[0] != res.delta_grid.back()) return "malformed";
    Bits blocked =
        index.ball(p[2], q[0], BallMode::Closed) | index.ball(p[3], q[0], BallMode::Closed);
    return blocked.test(p[0]) || blocked.test(p[1]) ? "" : "endpoints are separated";
  }
  if (k == "circ-clause1-blocked") {
    if (!need(4, 2)) return "malformed";
    Bits blocked =
        index.ball(p[2], q[0], BallMode::Closed) | index.ball(p[3], q[0], BallMode::Closed);
    if (blocked.test(p[0]) || blocked.test(p[1])) return "endpoints not separated";
    blocked.flip();
    return index.path(p[0], p[1], q[1], blocked) ? "an avoiding path exists" : "";
  }
  if (k == "circ-clause2-path") {
    if (p.size() < 3 || q.size() != 2) return "malformed";
    PathWitness w{std::vector<std::size_t>(p.begin() + 2, p.end()), q[1]};
    if (!is_valid_path(index.net(), w, w.points.front(), w.points.back())) return "invalid path";
    for (std::size_t a : w.points) {
      if (index.less(p[0], a, q[0]) || index.less(p[1], a, q[0])) return "path meets a ball";
    }
    return "";
  }
  if (k == "circ-untestable") return res.delta_grid.size() < 2 ? "" : "delta grid has two values";
  if (k == "noncompact-family" || k == "noncompact-bounded") {
    if (q.size() != 2 || !grid_position(res.eps_grid, q[0]) ||
        q[1] != Rational(static_cast<long>(res.tuple_budget))) {
      return "parameters do not match the resolution";
    }
    if (k == "noncompact-family") {
      if (p.size() <= res.tuple_budget) return "family within budget";
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
          if (index.less_equal(p[i], p[j], q[0])) return "family not separated";
        }
      }
      return "";
    }
    if (p.size() > res.tuple_budget) return "cover exceeds budget";
    Bits covered(index.size());
    for (std::size_t c : p) covered |= index.ball(c, q[0], BallMode::Closed);
    return covered.all() ? "" : "cover misses a point";
  }
  if (k == "noncompact-unbudgeted") return res.tuple_budget == 0 ? "" : "budget is set";
  if (k == "path-cap") {
    if (res.max_path_len == 0) return "no cap in resolution";
    return p.size() > res.max_path_len + 1 ? "" : "path within cap";
  }
  return "unknown evidence kind '" + k + "'";
}

}  // namespace

void validate(const Resolution& res) {
  auto check_grid = [](const std::vector<Rational>& grid, const char* name) {
    if (grid.empty()) throw ParameterError(std::string(name) + " is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid[i] <= 0) throw ParameterError(std::string(name) + " has a non-positive value");
      if (i > 0 && !(grid[i] < grid[i - 1])) {
        throw ParameterError(std::string(name) + " is not strictly descending");
      }
    }
  };
  check_grid(res.eps_grid, "eps grid");
  check_grid(res.delta_grid, "delta grid");
}

Resolution scaled(const Resolution& res, const Rational& factor) {
  if (factor <= 0) throw ParameterError("scale factor must be positive");
  Resolution out = res;
  for (auto& e : out.eps_grid) e *= factor;
  for (auto& d : out.delta_grid) d *= factor;
  return out;
}

const char* status_name(Status status) {
  switch (status) {
    case Status::Holds:
      return "Holds";
    case Status::Fails:
      return "Fails";
    case Status::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

Status parse_status(const std::string& text) {
  if (text == "Holds") return Status::Holds;
  if (text == "Fails") return Status::Fails;
  if (text == "Inconclusive") return Status::Inconclusive;
  throw ParseError("unknown status '" + text + "'");
}

Status CompositeReport::overall() const {
  bool undecided = false;
  for (const auto& v : verdicts) {
    if (v.status == Status::Fails) return Status::Fails;
    if (v.status == Status::Inconclusive) undecided = true;
  }
  return undecided ? Status::Inconclusive : Status::Holds;
}

Verdict check_ndegen(NetIndex& index) {
  Verdict v{"ndegen", Status::Fails, {}, {}, {}};
  const FiniteNet& net = index.net();
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      if (net.dist(i, j) > 0) {
        v.status = Status::Holds;
        v.evidence = {item("ndegen-pair", {i, j})};
        return v;
      }
    }
  }
  v.evidence = {item("ndegen-degenerate", {})};
  return v;
}

Verdict check_cpct(NetIndex& index, const Resolution& res) {
  validate(res);
  Verdict v{"cpct", Status::Holds, {}, res, {}};
  for (const Rational& eps : res.eps_grid) {
    auto centers = greedy_cover(index, index.all(), eps, res.tuple_budget);
    if (!within_budget(centers.size(), res)) {
      v.status = Status::Inconclusive;
      v.evidence = {item("cpct-budget", {}, {eps, Rational(static_cast<long>(res.tuple_budget))})};
      v.note = "cover at eps " + format_rational_short(eps) + " exceeds the tuple budget";
      return v;
    }
    v.evidence.push_back(item("cpct-cover", std::move(centers), {eps}));
  }
  return v;
}

Verdict check_noncompact(NetIndex& index, const Resolution& res) {
  validate(res);
  Verdict v{"noncompact", Status::Fails, {}, res, {}};
  if (res.tuple_budget == 0) {
    v.status = Status::Inconclusive;
    v.evidence = {item("noncompact-unbudgeted", {})};
    v.note = "non-compactness is relative to a cover budget";
    return v;
  }
  const Rational budget(static_cast<long>(res.tuple_budget));
  for (const Rational& eps : res.eps_grid) {
    // Greedy centers are pairwise more than eps apart.
    auto centers = greedy_cover(index, index.all(), eps, res.tuple_budget);
    if (!within_budget(centers.size(), res)) {
      v.status = Status::Holds;
      v.evidence = {item("noncompact-family", std::move(centers), {eps, budget})};
      return v;
    }
    v.evidence.push_back(item("noncompact-bounded", std::move(centers), {eps, budget}));
  }
  v.note = "every grid eps admits a cover within the budget";
  return v;
}

Verdict check_conn(NetIndex& index, const Resolution& res) {
  validate(res);
  Verdict v{"conn", Status::Holds, {}, res, {}};
  for (const Rational& eps : res.eps_grid) {
    auto labels = index.components(2 * eps, index.all());
    Bits u(index.size());
    for (std::size_t p = 0; p < labels.size(); ++p) {
      if (labels[p] == 0) u.set(p);
    }
    if (u.all()) {
      v.evidence.push_back(item("conn-connected", {}, {eps}));
      continue;
    }
    Bits rest = ~u;
    v.status = Status::Fails;
    v.evidence = {item("conn-family-u", greedy_cover(index, u, eps), {eps}),
                  item("conn-family-v", greedy_cover(index, rest, eps), {eps})};
    v.note = "2eps-graph disconnected at eps " + format_rational_short(eps);
    return v;
  }
  return v;
}

Verdict check_btw(NetIndex& index, std::size_t x, std::size_t y, std::size_t z,
                  const Resolution& res) {
  validate(res);
  check_position(index, x);
  check_position(index, y);
  check_position(index, z);
  if (x == y || y == z || x == z) throw PreconditionError("BTW needs three distinct points");
  Outcome o = evaluate_btw(index, x, y, z, res);
  return Verdict{"btw", o.status, std::move(o.items), res, {}};
}

Verdict check_ord(NetIndex& index, const Resolution& res) {
  validate(res);
  return scan_tuples(index, res, 3, "ord", [&](const std::vector<std::size_t>& t) {
    return evaluate_triple(index, t[0], t[1], t[2], res);
  });
}

Verdict check_circ(NetIndex& index, const Resolution& res) {
  validate(res);
  return scan_tuples(index, res, 4, "circ", [&](const std::vector<std::size_t>& t) {
    return evaluate_quad(index, t[0], t[1], t[2], t[3], res);
  });
}

// A ball pair (A, B) = (B_r(c), B_2r(c)) passes when the eps-path partition
// of A inside B at some grid eps survives every finer grid eps'. Partitions
// only refine as eps shrinks, so that happens exactly when the two finest
// grid values give the same partition.
Verdict check_lc(NetIndex& index, const Resolution& res) {
  validate(res);
  Verdict v{"lc", Status::Holds, {}, res, {}};
  const auto ne = res.eps_grid.size();
  if (ne < 2) {
    v.status = Status::Inconclusive;
    v.evidence = {item("lc-untestable", {})};
    v.note = "LC needs at least two eps values";
    return v;
  }
  const Rational& coarse_eps = res.eps_grid[ne - 2];
  const Rational& fine_eps = res.eps_grid[ne - 1];
  const std::size_t m = vertex_count(index, res);
  for (std::size_t c = 0; c < m; ++c) {
    for (const Rational& r : res.delta_grid) {
      const Bits a_ball = index.ball(c, r, BallMode::Open);
      const Bits b_ball = index.ball(c, 2 * r, BallMode::Open);
      const auto coarse_labels = index.components(coarse_eps, b_ball);
      const auto fine_labels = index.components(fine_eps, b_ball);
      const auto coarse = canonical_partition(coarse_labels, a_ball);
      const auto fine = canonical_partition(fine_labels, a_ball);
      if (coarse == fine) {
        v.evidence.push_back(item("lc-stable", {c}, {r, coarse_eps, fine_eps}));
        continue;
      }
      // First pair of A-points joined at the coarse eps but split at the fine one.
      std::vector<std::size_t> members;
      for (auto p = a_ball.find_first(); p != Bits::npos; p = a_ball.find_next(p)) {
        members.push_back(p);
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          const std::size_t a = members[i];
          const std::size_t b = members[j];
          if (coarse_labels[a] == coarse_labels[b] && fine_labels[a] != fine_labels[b]) {
            v.status = Status::Fails;
            v.evidence = {item("lc-split", {c, a, b}, {r, coarse_eps, fine_eps})};
            v.note = "component splits between eps " + format_rational_short(coarse_eps) +
                     " and " + format_rational_short(fine_eps);
            return v;
          }
        }
      }
    }
  }
  return v;
}

Verdict check_ndegen(const FiniteNet& net) {
  NetIndex index(net);
  return check_ndegen(index);
}

Verdict check_cpct(const FiniteNet& net, const Resolution& res) {
  NetIndex index(net);
  return check_cpct(index, res);
}

Verdict check_noncompact(const FiniteNet& net, const Resolution& res) {
  NetIndex index(net);
  return check_noncompact(index, res);
}

Verdict check_conn(const FiniteNet& net, const Resolution& res) {
  NetIndex index(net);
  return check_conn(index, res);
}

Verdict check_lc(const FiniteNet& net, const Resolution& res) {
  NetIndex index(net);
  return check_lc(index, res);
}

Verdict check_btw(const FiniteNet& net, std::size_t x, std::size_t y, std::size_t z,
                  const Resolution& res) {
  NetIndex index(net);
  return check_btw(index, x, y, z, res);
}

Verdict check_ord(const FiniteNet& net, const Resolution& res) {
  NetIndex index(net);
  return check_ord(index, res);
}

Verdict check_circ(const FiniteNet& net, const Resolution& res) {
  NetIndex index(net);
  return check_circ(index, res);
}

CompositeReport classify_arc(const FiniteNet& net, const Resolution& res) {
  NetIndex index(net);
  CompositeReport report{"arc", {}};
  report.verdicts.push_back(check_ndegen(index));
  report.verdicts.back().resolution = res;
  report.verdicts.push_back(check_cpct(index, res));
  report.verdicts.push_back(check_conn(index, res));
  report.verdicts.push_back(check_lc(index, res));
  report.verdicts.push_back(check_ord(index, res));
  return report;
}

CompositeReport classify_circle(const FiniteNet& net, const Resolution& res) {
  NetIndex index(net);
  CompositeReport report{"circle", {}};
  report.verdicts.push_back(check_ndegen(index));
  report.verdicts.back().resolution = res;
  report.verdicts.push_back(check_cpct(index, res));
  report.verdicts.push_back(check_conn(index, res));
  report.verdicts.push_back(check_lc(index, res));
  report.verdicts.push_back(check_circ(index, res));
  return report;
}

ReplayOutcome replay(NetIndex& index, const Verdict& verdict) {
  const bool uses_grids = verdict.property != "ndegen";
  if (uses_grids) validate(verdict.resolution);
  bool has_failure = false;
  bool has_undecided = false;
  for (const auto& it : verdict.evidence) {
    has_failure = has_failure || is_failure_kind(it.kind);
    has_undecided = has_undecided || is_inconclusive_kind(it.kind);
  }
  switch (verdict.status) {
    case Status::Holds:
      if (has_failure || has_undecided) return {false, "Holds verdict carries failure evidence"};
      if (verdict.evidence.empty() && verdict.property != "ord" && verdict.property != "circ" &&
          verdict.property != "lc") {
        return {false, "Holds verdict without evidence"};
      }
      break;
    case Status::Fails:
      if (!has_failure) return {false, "Fails verdict without a counterexample"};
      break;
    case Status::Inconclusive:
      if (!has_undecided) return {false, "Inconclusive verdict without an exhausted bound"};
      break;
  }
  for (std::size_t i = 0; i < verdict.evidence.size(); ++i) {
    const std::string why =
        verify_item(index, verdict.evidence[i], verdict.evidence, verdict.resolution);
    if (!why.empty()) {
      return {false, "item " + std::to_string(i) + " (" + verdict.evidence[i].kind + "): " + why};
    }
  }
  return {true, std::string(status_name(verdict.status)) + " reproduced from " +
                    std::to_string(verdict.evidence.size()) + " evidence items"};
}

ReplayOutcome replay(const FiniteNet& net, const Verdict& verdict) {
  NetIndex index(net);
  return replay(index, verdict);
}

}  // namespace polishtop
