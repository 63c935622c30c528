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
#include <string>
#include <vector>

#include "polishtop/finite_net.hpp"
#include "polishtop/net_index.hpp"
#include "polishtop/rational.hpp"

namespace polishtop {

// Finite instantiation of the quantifiers in the characterizing conditions.
//
// n_points: tuple vertices and LC ball centers are drawn from the first
//   n_points net positions; paths always run through the whole net.
// eps_grid, delta_grid: strictly positive, strictly descending.
// max_path_len: a path witness with more hops than this makes the instance
//   Inconclusive (0 means unbounded).
// tuple_budget: caps the number of tuples scanned by ORD and CIRC and the
//   size of a CPCT cover.
//
// The grids must be coarser than the sample spacing of the net for the
// "for all eps" clauses to be meaningful; this is the caller's choice.
struct Resolution {
  std::size_t n_points = 0;
  std::vector<Rational> eps_grid;
  std::vector<Rational> delta_grid;
  std::size_t max_path_len = 0;
  std::size_t tuple_budget = 0;
};

// Throws ParameterError if a grid is empty, non-positive or not strictly
// descending.
void validate(const Resolution& res);

// Scales both grids by `factor` (> 0).
Resolution scaled(const Resolution& res, const Rational& factor);

enum class Status { Holds, Fails, Inconclusive };

const char* status_name(Status status);
Status parse_status(const std::string& text);

// One self-contained, re-checkable claim about the net. `points` are net
// positions; the meaning of `points` and `params` depends on `kind`.
struct EvidenceItem {
  std::string kind;
  std::vector<std::size_t> points;
  std::vector<Rational> params;

  friend bool operator==(const EvidenceItem&, const EvidenceItem&) = default;
};

struct Verdict {
  std::string property;
  Status status = Status::Inconclusive;
  std::vector<EvidenceItem> evidence;
  Resolution resolution;
  std::string note;
};

struct CompositeReport {
  std::string label;
  std::vector<Verdict> verdicts;

  // Fails if any verdict fails, else Inconclusive if any is, else Holds.
  Status overall() const;
};

Verdict check_ndegen(const FiniteNet& net);
Verdict check_cpct(const FiniteNet& net, const Resolution& res);
Verdict check_conn(const FiniteNet& net, const Resolution& res);
Verdict check_lc(const FiniteNet& net, const Resolution& res);
Verdict check_btw(const FiniteNet& net, std::size_t x, std::size_t y, std::size_t z,
                  const Resolution& res);
Verdict check_ord(const FiniteNet& net, const Resolution& res);
Verdict check_circ(const FiniteNet& net, const Resolution& res);
// Holds when some grid eps has an eps-separated family larger than
// tuple_budget; Fails when every grid eps has a cover within the budget;
// Inconclusive when the budget is unlimited.
Verdict check_noncompact(const FiniteNet& net, const Resolution& res);

// Variants sharing one memoized index across several checks.
Verdict check_ndegen(NetIndex& index);
Verdict check_cpct(NetIndex& index, const Resolution& res);
Verdict check_conn(NetIndex& index, const Resolution& res);
Verdict check_lc(NetIndex& index, const Resolution& res);
Verdict check_btw(NetIndex& index, std::size_t x, std::size_t y, std::size_t z,
                  const Resolution& res);
Verdict check_ord(NetIndex& index, const Resolution& res);
Verdict check_circ(NetIndex& index, const Resolution& res);
Verdict check_noncompact(NetIndex& index, const Resolution& res);

// NDEGEN, CPCT, CONN, LC and ORD.
CompositeReport classify_arc(const FiniteNet& net, const Resolution& res);
// NDEGEN, CPCT, CONN, LC and CIRC.
CompositeReport classify_circle(const FiniteNet& net, const Resolution& res);

struct ReplayOutcome {
  bool reproduced = false;
  std::string detail;
};

// Re-verifies every evidence item of a Holds or Fails verdict against the
// net, using the verdict's own resolution. Inconclusive verdicts replay
// their exhausted-bound items.
ReplayOutcome replay(const FiniteNet& net, const Verdict& verdict);
ReplayOutcome replay(NetIndex& index, const Verdict& verdict);

}  // namespace polishtop
