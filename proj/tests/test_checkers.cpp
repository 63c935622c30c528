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

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "polishtop/checkers.hpp"
#include "polishtop/errors.hpp"
#include "polishtop/finite_net.hpp"
#include "polishtop/net_index.hpp"
#include "polishtop/report.hpp"
#include "polishtop/standard_spaces.hpp"

namespace pt = polishtop;
using oracle::Q;
using pt::Status;

namespace {

pt::Resolution grid(std::size_t n, std::vector<Q> eps, std::vector<Q> delta = {Q(1, 2)}) {
  pt::Resolution res;
  res.n_points = n;
  res.eps_grid = std::move(eps);
  res.delta_grid = std::move(delta);
  return res;
}

pt::FiniteNet line_net(std::vector<Q> xs) {
  pt::Presentation pres("line");
  for (const auto& x : xs) pres.add(pt::SparsePoint::planar(x, 0));
  return pt::build_net(pres, pres.size(), 0);
}

pt::FiniteNet step_line(int den) {  // 0, 1/den, ..., 1 in order
  std::vector<Q> xs;
  for (int i = 0; i <= den; ++i) xs.push_back(Q(i, den));
  return line_net(xs);
}

pt::FiniteNet net_of(const pt::Presentation& p) { return pt::build_net(p, p.size(), 0); }

pt::Presentation scaled(const pt::Presentation& p, const Q& f) {
  pt::Presentation out(p.label());
  for (const auto& pt_ : p.points()) out.add(pt_.scaled(f));
  return out;
}

pt::Presentation permuted(const pt::Presentation& p, std::uint64_t seed) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return p.permuted(order);
}

const std::vector<Q> kCoarse{Q(1, 2), Q(1, 4), Q(1, 8)};

}  // namespace

// ---- NDEGEN ----------------------------------------------------------------

TEST(Ndegen, Examples) {
  EXPECT_EQ(pt::check_ndegen(line_net({Q(0)})).status, Status::Fails);
  const auto v = pt::check_ndegen(line_net({Q(0), Q(1)}));
  EXPECT_EQ(v.status, Status::Holds);
  ASSERT_EQ(v.evidence.size(), 1u);
  EXPECT_EQ(v.evidence[0].points, (std::vector<std::size_t>{0, 1}));
  // Duplicated coordinates only: every pair at distance 0.
  const pt::FiniteNet dup(3, {Q(0), Q(0), Q(0)}, 0);
  EXPECT_EQ(pt::check_ndegen(dup).status, Status::Fails);
}

// ---- CPCT ------------------------------------------------------------------

TEST(Cpct, Examples) {
  const auto two = line_net({Q(0), Q(1)});
  auto v = pt::check_cpct(two, grid(2, {Q(1)}));
  ASSERT_EQ(v.status, Status::Holds);
  EXPECT_EQ(v.evidence[0].points.size(), 1u);  // eps >= diameter
  v = pt::check_cpct(two, grid(2, {Q(1, 4)}));
  EXPECT_EQ(v.evidence[0].points.size(), 2u);

  const auto dy = net_of(pt::dyadic_interval(6));
  v = pt::check_cpct(dy, grid(dy.size(), {Q(1, 8)}));
  ASSERT_EQ(v.status, Status::Holds);
  EXPECT_LE(v.evidence[0].points.size(), 9u);
}

TEST(Cpct, CoverIsValidAndMatchesGreedyOracle) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = oracle::random_graph_metric(rng, 20);
    std::vector<Q> upper;
    for (std::size_t i = 0; i < 20; ++i) {
      for (std::size_t j = i + 1; j < 20; ++j) upper.push_back(d[i][j]);
    }
    const pt::FiniteNet net(20, upper, 0);
    const Q eps = oracle::random_q(rng, 0, 1, 8) + Q(1, 16);
    const auto v = pt::check_cpct(net, grid(20, {eps}));
    ASSERT_EQ(v.status, Status::Holds);
    const auto& centers = v.evidence[0].points;
    EXPECT_EQ(centers.size(), oracle::greedy_cover_size(d, eps));
    for (std::size_t p = 0; p < 20; ++p) {
      EXPECT_TRUE(std::any_of(centers.begin(), centers.end(),
                              [&](std::size_t c) { return d[c][p] <= eps; }));
    }
  }
}

TEST(Cpct, BudgetMakesItInconclusive) {
  auto res = grid(3, {Q(1, 8)});
  res.tuple_budget = 2;
  EXPECT_EQ(pt::check_cpct(step_line(4), res).status, Status::Inconclusive);
}

// ---- CONN ------------------------------------------------------------------

TEST(Conn, Examples) {
  EXPECT_EQ(pt::check_conn(line_net({Q(0), Q(1, 2), Q(1)}), grid(3, {Q(1, 2)})).status,
            Status::Holds);
  // Chain spacing 1/2 is a 2eps-gap once eps <= 1/4.
  EXPECT_EQ(pt::check_conn(line_net({Q(0), Q(1, 2), Q(1)}), grid(3, kCoarse)).status,
            Status::Fails);
  const auto far = pt::check_conn(line_net({Q(0), Q(10)}), grid(2, {Q(1)}));
  ASSERT_EQ(far.status, Status::Fails);
  ASSERT_EQ(far.evidence.size(), 2u);
  EXPECT_EQ(far.evidence[0].points, (std::vector<std::size_t>{0}));
  EXPECT_EQ(far.evidence[1].points, (std::vector<std::size_t>{1}));
  EXPECT_EQ(pt::check_conn(line_net({Q(0)}), grid(1, kCoarse)).status, Status::Holds);
}

TEST(Conn, FindsTwoClustersInsideFineSamples) {
  std::vector<Q> xs;
  for (int i = 0; i <= 16; ++i) xs.push_back(Q(i, 16));
  for (int i = 0; i <= 16; ++i) xs.push_back(Q(3) + Q(i, 16));
  const auto net = line_net(xs);
  const auto v = pt::check_conn(net, grid(net.size(), {Q(1, 2), Q(1, 8)}));
  EXPECT_EQ(v.status, Status::Fails);
  EXPECT_TRUE(pt::replay(net, v).reproduced);
}

// ---- BTW -------------------------------------------------------------------

TEST(Btw, LineMiddleIsBetween) {
  const auto net = step_line(16);
  const auto res = grid(net.size(), {Q(1, 8), Q(1, 16) + Q(1, 64)}, {Q(1, 4), Q(1, 8)});
  const auto v = pt::check_btw(net, 0, 8, 16, res);
  EXPECT_EQ(v.status, Status::Holds);
  EXPECT_TRUE(pt::replay(net, v).reproduced);
  EXPECT_THROW(pt::check_btw(net, 0, 8, 0, res), pt::PreconditionError);
}

TEST(Btw, ShortcutAvoidingTheMiddleFails) {
  // x, y, z mutually near plus a dense arc from x to z far from y.
  pt::Presentation pres("shortcut");
  pres.add(pt::SparsePoint::planar(0, 0));           // x
  pres.add(pt::SparsePoint::planar(Q(1, 2), 0));     // y
  pres.add(pt::SparsePoint::planar(1, 0));           // z
  for (int i = 1; i < 16; ++i) pres.add(pt::SparsePoint::planar(Q(i, 16), 1));
  pres.add(pt::SparsePoint::planar(0, Q(1, 2)));
  pres.add(pt::SparsePoint::planar(1, Q(1, 2)));
  pres.add(pt::SparsePoint::planar(0, 1));
  pres.add(pt::SparsePoint::planar(1, 1));
  const auto net = net_of(pres);
  const auto v = pt::check_btw(net, 0, 1, 2, grid(net.size(), {Q(3, 4), Q(5, 8)}, {Q(3, 4), Q(1, 4)}));
  ASSERT_EQ(v.status, Status::Fails);
  EXPECT_TRUE(pt::replay(net, v).reproduced);
  bool has_path = false;
  for (const auto& e : v.evidence) has_path = has_path || e.kind == "btw-path";
  EXPECT_TRUE(has_path);
}

TEST(Btw, SymmetricInFirstAndThirdArgument) {
  const std::vector<pt::FiniteNet> nets{step_line(16), net_of(pt::rational_circle(32)),
                                        net_of(pt::dyadic_interval(5))};
  const auto res_for = [](std::size_t n) {
    return grid(n, {Q(1, 4), Q(1, 5)}, {Q(1, 2), Q(1, 4), Q(1, 8)});
  };
  std::mt19937_64 rng(17);
  for (const auto& net : nets) {
    for (int t = 0; t < 20; ++t) {
      std::size_t x = rng() % net.size(), y = rng() % net.size(), z = rng() % net.size();
      if (x == y || y == z || x == z) continue;
      EXPECT_EQ(pt::check_btw(net, x, y, z, res_for(net.size())).status,
                pt::check_btw(net, z, y, x, res_for(net.size())).status);
    }
  }
}

TEST(Btw, AtMostOneArrangementOnALine) {
  const auto net = net_of(pt::dyadic_interval(5));
  const auto res = grid(net.size(), {Q(1, 16), Q(1, 20)}, {Q(1, 8), Q(1, 16), Q(1, 32)});
  for (std::size_t x = 0; x < 8; ++x) {
    for (std::size_t y = x + 1; y < 8; ++y) {
      for (std::size_t z = y + 1; z < 8; ++z) {
        int holds = 0;
        holds += pt::check_btw(net, y, x, z, res).status == Status::Holds;
        holds += pt::check_btw(net, x, y, z, res).status == Status::Holds;
        holds += pt::check_btw(net, x, z, y, res).status == Status::Holds;
        EXPECT_LE(holds, 1) << x << ' ' << y << ' ' << z;
        EXPECT_GE(holds, 1) << x << ' ' << y << ' ' << z;
      }
    }
  }
}

// ---- ORD -------------------------------------------------------------------

TEST(Ord, Examples) {
  EXPECT_EQ(pt::check_ord(line_net({Q(0), Q(1)}), grid(2, kCoarse)).status, Status::Holds);
  const auto line = net_of(pt::dyadic_interval(5));
  const auto lv = pt::check_ord(line, grid(12, {Q(1, 16), Q(1, 20)}, {Q(1, 8), Q(1, 16), Q(1, 32)}));
  EXPECT_EQ(lv.status, Status::Holds);
  EXPECT_TRUE(pt::replay(line, lv).reproduced);

  const auto circle = net_of(pt::rational_circle(64));
  const auto cv = pt::check_ord(circle, grid(16, kCoarse, kCoarse));
  ASSERT_EQ(cv.status, Status::Fails);
  EXPECT_EQ(cv.evidence[0].kind, "ord-unordered");
  EXPECT_EQ(cv.evidence[0].points.size(), 3u);
  EXPECT_TRUE(pt::replay(circle, cv).reproduced);
}

TEST(Ord, CounterexamplePersistsUnderFinerGrids) {
  const auto circle = net_of(pt::rational_circle(64));
  const auto coarse = pt::check_ord(circle, grid(16, kCoarse, kCoarse));
  const auto finer = pt::check_ord(
      circle, grid(16, {Q(1, 2), Q(1, 4), Q(3, 16), Q(1, 8)}, {Q(1, 2), Q(3, 8), Q(1, 4), Q(1, 8)}));
  EXPECT_EQ(coarse.status, Status::Fails);
  EXPECT_EQ(finer.status, Status::Fails);
}

// ---- LC --------------------------------------------------------------------

TEST(Lc, Examples) {
  const auto line = step_line(32);
  EXPECT_EQ(pt::check_lc(line, grid(line.size(), {Q(1, 8), Q(1, 16)}, {Q(1, 4), Q(1, 8)})).status,
            Status::Holds);
  EXPECT_EQ(pt::check_lc(line_net({Q(0)}), grid(1, kCoarse)).status, Status::Holds);
}

TEST(Lc, CombSplitsAtTheAccumulatingTeeth) {
  // Base [0,1] and vertical teeth of height 1/2 at x = 0 and x = 2^-k.
  pt::Presentation comb("comb");
  for (int i = 0; i <= 128; ++i) comb.add_if_new(pt::SparsePoint::planar(Q(i, 128), 0));
  std::vector<Q> teeth{Q(0)};
  for (int k = 2; k <= 8; ++k) teeth.push_back(pt::pow2(-k));
  for (const auto& x : teeth) {
    for (int j = 1; j <= 64; ++j) comb.add_if_new(pt::SparsePoint::planar(x, Q(j, 128)));
  }
  const auto net = net_of(comb);
  pt::Resolution res = grid(net.size(), {Q(1, 32), Q(1, 64)}, {Q(1, 8)});
  const auto v = pt::check_lc(net, res);
  ASSERT_EQ(v.status, Status::Fails);
  EXPECT_EQ(v.evidence[0].kind, "lc-split");
  EXPECT_TRUE(pt::replay(net, v).reproduced);
}

// ---- CIRC ------------------------------------------------------------------

TEST(Circ, Examples) {
  const auto circle = net_of(pt::rational_circle(32));
  const auto cv = pt::check_circ(circle, grid(12, {Q(1, 2), Q(1, 4)}, {Q(1, 2), Q(1, 4), Q(1, 8)}));
  EXPECT_EQ(cv.status, Status::Holds);
  EXPECT_TRUE(pt::replay(circle, cv).reproduced);

  const auto line = net_of(pt::dyadic_interval(6));
  const auto lv = pt::check_circ(line, grid(16, kCoarse, kCoarse));
  ASSERT_EQ(lv.status, Status::Fails);
  EXPECT_EQ(lv.evidence[0].kind, "circ-acyclic");
  EXPECT_EQ(lv.evidence[0].points.size(), 4u);
  EXPECT_TRUE(pt::replay(line, lv).reproduced);

  EXPECT_EQ(pt::check_circ(step_line(2), grid(3, kCoarse, kCoarse)).status, Status::Holds);
}

TEST(Circ, UnseparatedTuplesAreInconclusive) {
  // Neighbouring circle samples sit inside each other's rho-ball.
  const auto circle = net_of(pt::rational_circle(64));
  const auto v = pt::check_circ(circle, grid(64, {Q(1, 2), Q(1, 4), Q(1, 8)}, {Q(1, 2), Q(1, 4), Q(1, 8)}));
  EXPECT_EQ(v.status, Status::Inconclusive);
  bool unseparated = false;
  for (const auto& e : v.evidence) unseparated = unseparated || e.kind == "circ-unseparated";
  EXPECT_TRUE(unseparated);
}

// ---- composites and properties ----------------------------------------------

TEST(Classify, ArcAndCircle) {
  const auto dy = net_of(pt::dyadic_interval(5));
  const auto res = grid(12, {Q(1, 8), Q(1, 16)}, {Q(1, 4), Q(1, 8), Q(1, 16)});
  EXPECT_EQ(pt::classify_arc(dy, res).overall(), Status::Holds);
  const auto circle = net_of(pt::rational_circle(32));
  const auto cres = grid(12, {Q(1, 2), Q(1, 4)}, {Q(1, 2), Q(1, 4), Q(1, 8)});
  EXPECT_EQ(pt::classify_circle(circle, cres).overall(), Status::Holds);
  EXPECT_EQ(pt::classify_arc(circle, grid(16, kCoarse, kCoarse)).overall(), Status::Fails);
  EXPECT_EQ(pt::classify_circle(dy, grid(16, kCoarse, kCoarse)).overall(), Status::Fails);
  const auto one = line_net({Q(0)});
  const auto r1 = pt::classify_circle(one, grid(1, kCoarse, kCoarse));
  EXPECT_EQ(r1.verdicts[0].property, "ndegen");
  EXPECT_EQ(r1.verdicts[0].status, Status::Fails);
  const auto two = pt::classify_arc(line_net({Q(0), Q(1, 32), Q(5), Q(5) + Q(1, 32)}),
                                    grid(4, {Q(1, 4), Q(1, 8)}, {Q(1, 4), Q(1, 8)}));
  EXPECT_EQ(two.verdicts[2].property, "conn");
  EXPECT_EQ(two.verdicts[2].status, Status::Fails);
}

TEST(Properties, InvariantUnderReEnumeration) {
  const std::vector<pt::Presentation> spaces{pt::dyadic_interval(4), pt::rational_circle(16)};
  for (const auto& space : spaces) {
    const auto res = grid(space.size(), {Q(1, 2), Q(1, 4)}, {Q(1, 2), Q(1, 4)});
    const auto base = net_of(space);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto perm = net_of(permuted(space, seed));
      EXPECT_EQ(pt::check_conn(base, res).status, pt::check_conn(perm, res).status);
      EXPECT_EQ(pt::check_lc(base, res).status, pt::check_lc(perm, res).status);
      EXPECT_EQ(pt::check_ord(base, res).status, pt::check_ord(perm, res).status);
      EXPECT_EQ(pt::check_circ(base, res).status, pt::check_circ(perm, res).status);
    }
  }
}

TEST(Properties, InvariantUnderUniformScaling) {
  const std::vector<pt::Presentation> spaces{pt::dyadic_interval(4), pt::rational_circle(16),
                                             pt::dyadic_line(2, 2)};
  for (const auto& space : spaces) {
    const auto res = grid(12, {Q(1, 2), Q(1, 4)}, {Q(1, 2), Q(1, 4)});
    for (const Q& f : {Q(3), Q(2, 7)}) {
      const auto a = pt::classify_circle(net_of(space), res);
      const auto b = pt::classify_circle(net_of(scaled(space, f)), pt::scaled(res, f));
      ASSERT_EQ(a.verdicts.size(), b.verdicts.size());
      for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
        EXPECT_EQ(a.verdicts[i].status, b.verdicts[i].status) << a.verdicts[i].property;
      }
    }
  }
}

TEST(Properties, EveryVerdictReplays) {
  const std::vector<pt::Presentation> spaces{pt::dyadic_interval(5), pt::rational_circle(32),
                                             pt::dyadic_line(4, 2)};
  for (const auto& space : spaces) {
    const auto net = net_of(space);
    const auto res = grid(10, {Q(1, 2), Q(1, 4), Q(1, 8)}, {Q(1, 2), Q(1, 4), Q(1, 8)});
    for (const auto& report : {pt::classify_arc(net, res), pt::classify_circle(net, res)}) {
      for (const auto& v : report.verdicts) {
        const auto out = pt::replay(net, v);
        EXPECT_TRUE(out.reproduced) << v.property << ": " << out.detail;
      }
    }
  }
}

TEST(Properties, TamperedEvidenceIsRejected) {
  const auto circle = net_of(pt::rational_circle(64));
  auto v = pt::check_ord(circle, grid(16, kCoarse, kCoarse));
  ASSERT_EQ(v.status, Status::Fails);
  v.status = Status::Holds;
  EXPECT_FALSE(pt::replay(circle, v).reproduced);
  const auto line = step_line(8);
  auto c = pt::check_cpct(line, grid(9, {Q(1, 4)}));
  c.evidence[0].points = {0};
  EXPECT_FALSE(pt::replay(line, c).reproduced);
}

// ---- noncompact --------------------------------------------------------------

TEST(Noncompact, SeparatedFamilyBeyondBudget) {
  const auto line = net_of(pt::dyadic_line(16, 0));
  auto res = grid(line.size(), {Q(1, 2)});
  res.tuple_budget = 10;
  const auto v = pt::check_noncompact(line, res);
  EXPECT_EQ(v.status, Status::Holds);
  EXPECT_TRUE(pt::replay(line, v).reproduced);
  res.tuple_budget = 0;
  EXPECT_EQ(pt::check_noncompact(line, res).status, Status::Inconclusive);
  const auto unit = net_of(pt::dyadic_interval(4));
  auto ures = grid(unit.size(), {Q(1, 2), Q(1, 4)});
  ures.tuple_budget = 10;
  const auto u = pt::check_noncompact(unit, ures);
  EXPECT_EQ(u.status, Status::Fails);
  EXPECT_TRUE(pt::replay(unit, u).reproduced);
}

// ---- resolution and reports ---------------------------------------------------

TEST(Resolution, Validation) {
  EXPECT_THROW(pt::validate(grid(3, {})), pt::ParameterError);
  EXPECT_THROW(pt::validate(grid(3, {Q(1, 4), Q(1, 2)})), pt::ParameterError);
  EXPECT_THROW(pt::validate(grid(3, {Q(0)})), pt::ParameterError);
  EXPECT_THROW(pt::validate(grid(3, {Q(1)}, {})), pt::ParameterError);
  EXPECT_NO_THROW(pt::validate(grid(3, {Q(1), Q(1, 2)})));
}

TEST(Report, RoundTripKeepsEvidence) {
  const auto line = net_of(pt::dyadic_interval(6));
  auto report = pt::classify_circle(line, grid(16, kCoarse, kCoarse));
  report.label = "roundtrip";
  const std::string text = pt::render_report(report);
  const auto back = pt::parse_report(text);
  EXPECT_EQ(back.label, "roundtrip");
  ASSERT_EQ(back.verdicts.size(), report.verdicts.size());
  for (std::size_t i = 0; i < back.verdicts.size(); ++i) {
    EXPECT_EQ(back.verdicts[i].status, report.verdicts[i].status);
    EXPECT_EQ(back.verdicts[i].evidence, report.verdicts[i].evidence);
    EXPECT_TRUE(pt::replay(line, back.verdicts[i]).reproduced);
  }
  EXPECT_EQ(pt::render_report(back), text);
  // Holds carries a witness block; Fails carries exact rationals.
  EXPECT_NE(text.find("item ndegen-pair"), std::string::npos);
  EXPECT_NE(text.find("verdict circ Fails"), std::string::npos);
  EXPECT_THROW(pt::parse_report("report x\nverdict ord Maybe\n"), pt::ParseError);
}
