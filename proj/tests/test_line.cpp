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

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "polishtop/errors.hpp"
#include "polishtop/line.hpp"
#include "polishtop/standard_spaces.hpp"

namespace pt = polishtop;
using oracle::Q;

namespace {

Q frac(long k, long den) {
  Q q(k, den);
  q.canonicalize();
  return q;
}

std::map<long, Q> as_map(const pt::SparsePoint& p) {
  std::map<long, Q> out;
  for (const auto& [k, v] : p.entries()) out[static_cast<long>(k)] = v;
  return out;
}

Q dist(const pt::SparsePoint& a, const pt::SparsePoint& b) {
  return oracle::sup_dist(as_map(a), as_map(b));
}

std::size_t common_prefix(const pt::TreeNode& a, const pt::TreeNode& b) {
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  return i;
}

// A small branching tree: (0), (1), (0,0), (0,1), (1,0), (0,0,0), (0,1,5).
pt::TreeSpec bushy() {
  return pt::TreeSpec({{0}, {1}, {0, 0}, {0, 1}, {1, 0}, {0, 0, 0}, {0, 1, 5}});
}

}  // namespace

// ---- compactification ---------------------------------------------------------

TEST(Compactify, HExamples) {
  pt::Presentation pres("h");
  pres.add(pt::SparsePoint::planar(0, 0));
  pres.add(pt::SparsePoint::planar(1, 0));
  pres.add(pt::SparsePoint::planar(0, 3));
  EXPECT_EQ(pt::h_value(pres, 0, 0), 1);
  EXPECT_EQ(pt::h_value(pres, 0, 1), Q(1, 2));
  EXPECT_EQ(pt::h_value(pres, 0, 2), Q(1, 4));
  EXPECT_EQ(pt::h_value(pres, 1, 2), Q(1, 4));

  const auto hat = pt::compactify(pres, 0);
  EXPECT_EQ(hat.size(), 4u);
  EXPECT_EQ(hat.distance(0, 1), 1);  // infinity to the basepoint
  EXPECT_EQ(hat.distance(1, 3), Q(5, 4));  // min(3, 1 + 1/4)
  EXPECT_EQ(hat.distance(2, 3), Q(3, 4));  // min(3, 1/2 + 1/4)
  EXPECT_EQ(hat.distance(1, 2), Q(1));     // min(1, 1 + 1/2)
}

TEST(Compactify, FarPointsMeetThroughInfinity) {
  pt::Presentation pres("far");
  pres.add(pt::SparsePoint::planar(0, 0));
  pres.add(pt::SparsePoint::planar(100, 0));
  pres.add(pt::SparsePoint::planar(-100, 0));
  const auto hat = pt::compactify(pres, 0);
  EXPECT_EQ(hat.distance(2, 3), Q(2, 101));
  EXPECT_EQ(hat.distance(0, 2), Q(1, 101));
  EXPECT_LE(hat.distance(2, 3), Q(200));
}

TEST(Compactify, MatrixAgreesWithOracle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    pt::Presentation pres("random");
    std::vector<std::map<long, Q>> coords;
    while (pres.size() < 15) {
      const auto p = pt::SparsePoint::planar(oracle::random_q(rng, -20, 20, 4),
                                             oracle::random_q(rng, -20, 20, 4));
      if (pres.add_if_new(p)) coords.push_back(as_map(p));
    }
    const std::size_t base = rng() % 15;
    const auto hat = pt::compactify(pres, base);
    const auto net = hat.net(hat.size());
    auto h = [&](std::size_t i) -> Q { return 1 / (1 + oracle::sup_dist(coords[base], coords[i])); };
    for (std::size_t i = 0; i < 15; ++i) {
      EXPECT_EQ(net.dist(0, i + 1), h(i));
      for (std::size_t j = 0; j < 15; ++j) {
        if (i == j) continue;
        const Q d = oracle::sup_dist(coords[i], coords[j]);
        const Q via = h(i) + h(j);
        EXPECT_EQ(net.dist(i + 1, j + 1), d < via ? d : via);
        EXPECT_LE(net.dist(i + 1, j + 1), d);
      }
    }
    EXPECT_TRUE(net.verify_triangle());
  }
}

TEST(Compactify, Errors) {
  EXPECT_THROW(pt::compactify(pt::Presentation{}, 0), pt::PreconditionError);
  pt::Presentation one("one");
  one.add(pt::SparsePoint::planar(0, 0));
  EXPECT_THROW(pt::compactify(one, 3), pt::LookupError);
  const auto hat = pt::compactify(one, 0);
  EXPECT_THROW(hat.net(0), pt::ParameterError);
  EXPECT_THROW(hat.net(3), pt::SizeError);
  EXPECT_THROW(hat.h(0), pt::LookupError);
  EXPECT_THROW(hat.distance(0, 2), pt::LookupError);
}

// ---- trees --------------------------------------------------------------------

TEST(Tree, EnumerationIsBreadthFirst) {
  const auto t = bushy();
  ASSERT_EQ(t.size(), 7u);
  EXPECT_EQ(t.node(1), (pt::TreeNode{0}));
  EXPECT_EQ(t.node(2), (pt::TreeNode{1}));
  EXPECT_EQ(t.node(3), (pt::TreeNode{0, 0}));
  EXPECT_EQ(t.node(5), (pt::TreeNode{1, 0}));
  EXPECT_EQ(t.node(7), (pt::TreeNode{0, 1, 5}));
  EXPECT_EQ(t.index_of({0, 1}), 4u);
  EXPECT_FALSE(t.index_of({2}).has_value());
  EXPECT_THROW(t.node(0), pt::LookupError);
  EXPECT_THROW(t.node(8), pt::LookupError);
  EXPECT_EQ(pt::TreeSpec::single_path(3).node(3), (pt::TreeNode{0, 0, 0}));
  EXPECT_EQ(pt::TreeSpec::antichain(3).node(3), (pt::TreeNode{2}));
}

TEST(Tree, ParseAndErrors) {
  const auto t = pt::tree_from_string("0\n# comment\n0 1\n\n0 0  # tail\n1\n");
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.node(2), (pt::TreeNode{1}));
  std::ostringstream out;
  pt::write_tree(out, t);
  EXPECT_EQ(out.str(), "0\n1\n0 0\n0 1\n");
  EXPECT_EQ(pt::tree_from_string(out.str()).nodes(), t.nodes());
  EXPECT_THROW(pt::tree_from_string("0\n0 x\n"), pt::ParseError);
  EXPECT_THROW(pt::tree_from_string("0 1\n"), pt::ParseError);  // missing prefix (0)
  EXPECT_THROW(pt::TreeSpec(std::vector<pt::TreeNode>{pt::TreeNode{}}), pt::ParameterError);
}

TEST(Tree, ChiAndXTau) {
  const auto t = bushy();
  EXPECT_EQ(pt::chi({0}, t), 1);
  EXPECT_EQ(pt::chi({0, 1}, t), Q(1, 2));
  EXPECT_EQ(pt::chi({0, 1, 5}, t), Q(1, 3));
  EXPECT_EQ(pt::chi({7}, t), 1);  // not in the tree
  EXPECT_THROW(pt::chi({}, t), pt::ParameterError);

  const auto x = pt::x_tau({0, 1, 5}, t);
  EXPECT_EQ(x.get(pt::u_coordinate(1)), 1);
  EXPECT_EQ(x.get(pt::u_coordinate(4)), Q(1, 2));
  EXPECT_EQ(x.get(pt::u_coordinate(7)), Q(1, 3));
  EXPECT_EQ(x.support_size(), 3u);
  EXPECT_THROW(pt::x_tau({}, t), pt::ParameterError);
  EXPECT_THROW(pt::x_tau({3, 0}, t), pt::LookupError);
}

TEST(Tree, XTauDistancesMatchPrefixOracle) {
  // Nodes sharing a prefix of length c differ first at depth c+1, where the
  // weight is 1/(c+1); deeper weights are smaller.
  const auto t = bushy();
  for (const auto& a : t.nodes()) {
    for (const auto& b : t.nodes()) {
      if (a == b) continue;
      const std::size_t c = common_prefix(a, b);
      EXPECT_EQ(dist(pt::x_tau(a, t), pt::x_tau(b, t)), frac(1, static_cast<long>(c) + 1));
    }
  }
}

TEST(Embed, CoordinatesAndTent) {
  EXPECT_EQ(pt::decay(Q(0)), 1);
  EXPECT_EQ(pt::decay(Q(3)), Q(1, 4));
  EXPECT_EQ(pt::decay(Q(-2)), 3);
  EXPECT_EQ(pt::psi(2, Q(5, 2)), 1);
  EXPECT_EQ(pt::psi(2, Q(9, 4)), Q(1, 2));
  EXPECT_EQ(pt::psi(2, Q(2)), 0);
  EXPECT_EQ(pt::psi(2, Q(7, 2)), 0);

  const auto t = bushy();
  EXPECT_EQ(pt::embed_p(Q(0), t), (pt::SparsePoint{{pt::w_coordinate(), Q(1)}}));
  EXPECT_EQ(pt::embed_p(Q(-3), t), (pt::SparsePoint{{pt::w_coordinate(), Q(4)}}));
  const auto half = pt::embed_p(Q(1, 2), t);
  EXPECT_EQ(half.get(pt::u_coordinate(1)), Q(1, 2));
  EXPECT_EQ(half.get(pt::w_coordinate()), Q(2, 3));
  // Integer t lands on x_{sigma_t} plus the w coordinate.
  const auto three = pt::embed_p(Q(3), t);
  EXPECT_EQ(three.get(pt::u_coordinate(3)), Q(1, 2));
  EXPECT_EQ(three.get(pt::u_coordinate(1)), 1);
  EXPECT_EQ(three.get(pt::v_coordinate(3)), 0);
  // Between n and n+1 the path is the segment plus a tent in v_n.
  const Q s = Q(7, 2);
  const auto mid = pt::embed_p(s, t);
  EXPECT_EQ(mid.get(pt::v_coordinate(3)), 1);
  const auto seg = pt::x_tau(t.node(3), t).scaled(Q(1, 2)) + pt::x_tau(t.node(4), t).scaled(Q(1, 2));
  for (const auto& [k, v] : seg.entries()) EXPECT_EQ(mid.get(k), v);
  EXPECT_THROW(pt::embed_p(Q(8), t), pt::LookupError);
}

TEST(Embed, InjectiveOnAGrid) {
  const auto t = bushy();
  std::vector<Q> grid;
  for (int k = -8; k <= 6 * 8; ++k) grid.push_back(frac(k, 8));
  std::vector<pt::SparsePoint> pts;
  for (const auto& s : grid) pts.push_back(pt::embed_p(s, t));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      EXPECT_GT(dist(pts[i], pts[j]), 0) << grid[i] << ' ' << grid[j];
    }
  }
  // The w coordinate alone separates points and bounds distances below.
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    EXPECT_GE(dist(pts[i], pts[i + 1]), oracle::qabs(pt::decay(grid[i]) - pt::decay(grid[i + 1])));
  }
}

TEST(Embed, ConsecutivePathNodesConverge) {
  const auto path = pt::TreeSpec::single_path(40);
  for (std::size_t n = 20; n < 40; ++n) {
    EXPECT_EQ(dist(pt::x_tau(path.node(n), path), pt::x_tau(path.node(n + 1), path)),
              frac(1, static_cast<long>(n) + 1));
  }
  const auto anti = pt::TreeSpec::antichain(10);
  for (std::size_t i = 1; i < 10; ++i) {
    EXPECT_EQ(dist(pt::x_tau(anti.node(i), anti), pt::x_tau(anti.node(i + 1), anti)), 1);
  }
}

TEST(GenLine, GridDeduplicates) {
  const auto t = bushy();
  const auto one = pt::gen_line_presentation(t, {Q(0)});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.point(0), (pt::SparsePoint{{pt::w_coordinate(), Q(1)}}));
  const auto few = pt::gen_line_presentation(t, {Q(0), Q(1, 2), Q(0), Q(-1)});
  EXPECT_EQ(few.size(), 3u);
}

// ---- real-line pipeline ----------------------------------------------------------

TEST(RealLine, TruncatedLineLooksLikeTheLine) {
  pt::Resolution res;
  res.n_points = 13;
  res.eps_grid = {Q(1, 2), Q(1, 4), Q(1, 8)};
  res.delta_grid = {Q(1, 2), Q(1, 4), Q(1, 16)};
  res.tuple_budget = 100;
  const auto report = pt::check_real_line(pt::dyadic_line(16, 4), 0, res);
  ASSERT_EQ(report.verdicts.front().property, "noncompact");
  for (const auto& v : report.verdicts) EXPECT_EQ(v.status, pt::Status::Holds) << v.property;
}

TEST(RealLine, UnitIntervalIsCompact) {
  pt::Resolution res;
  res.n_points = 9;
  res.eps_grid = {Q(1, 2), Q(1, 4)};
  res.delta_grid = {Q(1, 2), Q(1, 4)};
  res.tuple_budget = 20;
  const auto report = pt::check_real_line(pt::dyadic_interval(4), 0, res);
  EXPECT_EQ(report.verdicts.front().status, pt::Status::Fails);
  EXPECT_EQ(report.overall(), pt::Status::Fails);
}
