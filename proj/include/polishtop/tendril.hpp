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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polishtop/pl_function.hpp"
#include "polishtop/presentation.hpp"
#include "polishtop/rational.hpp"
#include "polishtop/w_table.hpp"

namespace polishtop {

// Finite truncation knobs. Only tendrils 1..tendril_count exist. The main
// line is sampled on t/2^e with e = min(stage, main_cap); arcs of an
// instance with prime p are sampled on the lattice 1/p + j/2^e with
// e = min(stage, arc_cap).
struct Sigma3Config {
  int tendril_count = 5;
  int main_cap = 8;
  int arc_cap = 6;
};

// x |-> base(x) + coef * (x - anchor) on [start, 1].
struct Arc {
  std::shared_ptr<const PLFunction> base;
  Rational coef;
  Rational anchor;
  Rational start;

  Rational operator()(const Rational& x) const;
  // Breakpoints of the arc: start, the base breakpoints inside, and 1.
  std::vector<Rational> abscissae() const;
};

struct Tendril {
  int n = 0;
  Rational left;
  Rational right;
  Arc top;
  Arc bottom;
  int collapse_count = 0;
  std::uint64_t top_prime = 0;
  std::uint64_t bottom_prime = 0;
  int born_stage = 0;
};

enum class Provenance { Main, Top, Bottom };

struct LoggedPoint {
  Rational x;
  Rational y;
  int stage = 0;
  Provenance provenance = Provenance::Main;
  int tendril = 0;
};

// What happened during the most recent stage, kept for the audit.
struct StageTransition {
  int stage = 0;
  std::optional<int> trigger;       // column whose element entered
  int entry_count = 0;              // k: this is the k-th entry of that column
  PLFunction previous_main;
  std::optional<PLFunction> interpolant;  // collapse interpolant l on [l_n, 1]
  std::optional<Arc> collapsed_top;       // t_n before the collapse
  std::vector<Tendril> previous_tendrils;
  std::size_t first_new_point = 0;  // log index of the first point of this stage
};

struct StageState {
  int stage = 0;
  Sigma3Config config;
  PLFunction main;
  std::vector<Tendril> tendrils;  // tendrils[i].n == i + 1
  std::vector<int> collapse_counts;  // indexed by n, entry 0 unused
  std::vector<LoggedPoint> log;
  std::set<Rational> logged_x;
  std::optional<StageTransition> last;

  const Tendril& tendril(int n) const;
};

// Stage 0: flat main line, tendrils with l_n = -1/2 - 1/(2n),
// r_n = -1/2 - 1/(2n+1), points (-1,0) and (1,0) logged.
StageState init_stage0(const Sigma3Config& config = {});

// Collapses tendrils n, n+1, ...: the new main line is
// max(main, l) with l interpolating (l_n, main(l_n)), the logged points with
// x in (l_n, 1) below b_{n-1} (below 1 when n = 1), and (1, 0). The
// collapsed tendrils are removed. Throws StateError if tendril n does not
// exist.
StageState collapse_from(const StageState& state, int n);

// sup over [from, 1] of b_{n-1} - main; for n = 1 the bound 1 replaces
// b_0.
Rational gap(const StageState& state, int n, const Rational& from);

// Respawns tendrils n..tendril_count inside (-1/(2s+2), -1/(2s+4)) with
// arcs main + g/2^{k+s} (x - l_k)/(1 - l_k) (and likewise with r_k).
// Throws StateError if tendrils >= n are still alive.
StageState spawn_tendrils(const StageState& state, int n, int s);

// Prime for instance c of tendril n: (n, c, side) is pair-encoded to a rank
// k >= 1 and the (k+1)-st prime returned; 2 never occurs.
std::uint64_t prime_for(int n, int c, Provenance side);

// The k-th prime, 1-based (nth_prime(1) == 2).
std::uint64_t nth_prime(std::size_t k);

// Adds the stage-s sample points of the current target space.
StageState insert_points(const StageState& state, int s);

// One full stage s+1: trigger (lowest column containing s), collapse,
// respawn, insertion.
StageState advance_stage(const StageState& state, const WTable& w);

StageState run_sigma3_state(const WTable& w, int stages, const Sigma3Config& config = {});

// Logged points in logging order, as planar points.
Presentation run_sigma3(const WTable& w, int stages, const Sigma3Config& config = {});

struct InvariantItem {
  bool applicable = false;
  bool ok = true;
  std::string detail;
};

struct InvariantReport {
  int stage = 0;
  std::array<InvariantItem, 8> items;  // stage invariants 1..8

  bool ok() const;
};

InvariantReport check_stage_invariants(const StageState& state);

// Runs `stages` stages and audits every state, stage 0 included.
std::vector<InvariantReport> audit_stages(const WTable& w, int stages,
                                          const Sigma3Config& config = {});

// Chain Y_U: for m = 1..m_max the copy of X_{U_m} (run for `stages`
// stages) rescaled by (x, y) |-> ((x+1)/2, y) and placed as
// (sum_{i<m} 2^-i + 2^-m x) u + 2^-m y w_m, with u at coordinate 0 and w_m
// at coordinate m, plus the limit point u. Copies are enumerated
// round-robin; welded endpoints appear once.
Presentation run_pi4_chain(const UTable& u, int m_max, int stages,
                           const Sigma3Config& config = {});

// Z = three unit sides {(t,0)}, {(1,t)}, {(t,1)} sampled on dyadics of
// depth side_depth, plus {(0, y) : y in Y} with Y's coordinates shifted up
// by one. Sources are enumerated round-robin.
Presentation circle_wrap(const Presentation& y, int side_depth);
Presentation circle_wrap(const UTable& u, int m_max, int stages, int side_depth,
                         const Sigma3Config& config = {});

// The dyadic segment [0,1] along coordinate 0 (the chain of a trivial U).
Presentation straight_chain(int depth);

}  // namespace polishtop
