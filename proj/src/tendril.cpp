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

#include "polishtop/tendril.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polishtop/errors.hpp"

namespace polishtop {
namespace {

Rational ceil_q(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(out);
}

std::string fmt(const Rational& q) { return format_rational_short(q); }

// Sorted union of abscissae restricted to [lo, hi], endpoints included.
std::vector<Rational> merged(const Rational& lo, const Rational& hi,
                             std::initializer_list<const std::vector<Rational>*> parts) {
  std::vector<Rational> xs{lo, hi};
  for (const auto* part : parts) {
    for (const auto& x : *part) {
      if (lo < x && x < hi) xs.push_back(x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<Rational> abscissae_of(const PLFunction& f) {
  std::vector<Rational> xs;
  xs.reserve(f.breakpoints().size());
  for (const auto& bp : f.breakpoints()) xs.push_back(bp.first);
  return xs;
}

// h > 0 on the open interval (xs.front(), xs.back()) for h piecewise linear
// with breakpoints among xs. Returns the first offending abscissa.
template <typename H>
std::optional<Rational> first_nonpositive_open(const H& h, const std::vector<Rational>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Rational v = h(xs[i]);
    const bool interior = i > 0 && i + 1 < xs.size();
    if (v < 0 || (interior && v == 0)) return xs[i];
    if (i + 1 < xs.size()) {
      const Rational mid = (xs[i] + xs[i + 1]) / 2;
      if (h(mid) <= 0) return mid;
    }
  }
  return std::nullopt;
}

Rational upper_bound_at(const StageState& state, int n, const Rational& x) {
  if (n == 1) return Rational(1);
  return state.tendril(n - 1).bottom(x);
}

Tendril make_tendril(int n, const Rational& left, const Rational& right,
                     const std::shared_ptr<const PLFunction>& base, const Rational& height,
                     int c, int born) {
  Tendril t;
  t.n = n;
  t.left = left;
  t.right = right;
  t.top = Arc{base, height / (1 - left), left, left};
  t.bottom = Arc{base, height / (1 - right), right, right};
  t.collapse_count = c;
  t.top_prime = prime_for(n, c, Provenance::Top);
  t.bottom_prime = prime_for(n, c, Provenance::Bottom);
  t.born_stage = born;
  return t;
}

void log_point(StageState& state, const Rational& x, const Rational& y, int stage,
               Provenance prov, int tendril) {
  state.log.push_back(LoggedPoint{x, y, stage, prov, tendril});
  state.logged_x.insert(x);
}

void insert_arc(StageState& state, const Arc& arc, std::uint64_t p, int e, int stage,
                Provenance prov, int n) {
  const Rational offset(1, static_cast<unsigned long>(p));
  const Rational step = pow2(-e);
  const Rational first = ceil_q((arc.start - offset) / step);
  for (Rational j = first;; j += 1) {
    const Rational x = offset + j * step;
    if (x >= 1) break;
    if (state.logged_x.count(x) != 0) continue;
    log_point(state, x, arc(x), stage, prov, n);
  }
}

bool in_gap(const StageState& state, const Rational& x) {
  for (const auto& t : state.tendrils) {
    if (t.left < x && x < t.right) return true;
  }
  return false;
}

// Subdivides the main line between consecutive main-line samples until
// neighbouring samples are less than 2^-e apart in the sup metric. Pieces
// crossing a gap (l_k, r_k) are left alone.
void refine_main(StageState& state, int e, int stage) {
  const auto& m = state.main;
  std::vector<Rational> xs;
  for (const auto& p : state.log) {
    if (p.y == m(p.x)) xs.push_back(p.x);
  }
  std::sort(xs.begin(), xs.end());
  const Rational unit = pow2(-e);
  const auto& bps = m.breakpoints();
  std::vector<Rational> fresh;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rational& x0 = xs[i];
    const Rational& x1 = xs[i + 1];
    bool crosses = false;
    for (const auto& t : state.tendrils) {
      if (x0 < t.right && t.left < x1) crosses = true;
    }
    if (crosses) continue;
    std::vector<Rational> knots{x0};
    auto it = std::upper_bound(bps.begin(), bps.end(), x0,
                               [](const Rational& v, const PLFunction::Breakpoint& bp) {
                                 return v < bp.first;
                               });
    for (; it != bps.end() && it->first < x1; ++it) knots.push_back(it->first);
    knots.push_back(x1);
    // Greedy walk: keep the last sample, add a knot only when the next one
    // would be too far, and subdivide single pieces that are too long.
    Rational last = x0;
    Rational last_y = m(x0);
    for (std::size_t j = 1; j < knots.size(); ++j) {
      const Rational& b = knots[j];
      const Rational yb = m(b);
      if (max(b - last, abs(yb - last_y)) < unit) continue;
      const Rational& a = knots[j - 1];
      if (a != last) {
        fresh.push_back(a);
        last = a;
        last_y = m(a);
      }
      const Rational step = max(b - a, abs(yb - last_y));
      if (step < unit) continue;
      const Rational ratio = step / unit;
      const Integer pieces = ratio.get_num() / ratio.get_den() + 1;
      for (Integer k = 1; k < pieces; ++k) {
        last = a + (b - a) * Rational(k) / Rational(pieces);
        fresh.push_back(last);
      }
      last_y = m(last);
    }
  }
  for (const auto& x : fresh) {
    if (x == 0 || state.logged_x.count(x) != 0 || in_gap(state, x)) continue;
    log_point(state, x, m(x), stage, Provenance::Main, 0);
  }
}

}  // namespace

Rational Arc::operator()(const Rational& x) const {
  if (x < start || x > 1) throw ParameterError("arc evaluated outside [start, 1]");
  return (*base)(x) + coef * (x - anchor);
}

std::vector<Rational> Arc::abscissae() const {
  std::vector<Rational> xs{start};
  for (const auto& bp : base->breakpoints()) {
    if (start < bp.first && bp.first < 1) xs.push_back(bp.first);
  }
  xs.emplace_back(1);
  return xs;
}

const Tendril& StageState::tendril(int n) const {
  if (n < 1 || n > static_cast<int>(tendrils.size())) {
    throw LookupError("no live tendril " + std::to_string(n));
  }
  return tendrils[static_cast<std::size_t>(n - 1)];
}

std::uint64_t nth_prime(std::size_t k) {
  if (k == 0) throw ParameterError("primes are counted from 1");
  const double kd = static_cast<double>(k);
  std::size_t limit = 16;
  if (k >= 6) limit = static_cast<std::size_t>(kd * (std::log(kd) + std::log(std::log(kd)))) + 16;
  std::vector<bool> composite(limit + 1, false);
  std::size_t count = 0;
  for (std::size_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    if (++count == k) return i;
    for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  throw StateError("prime sieve bound too small");
}

std::uint64_t prime_for(int n, int c, Provenance side) {
  if (n < 1 || c < 0 || side == Provenance::Main) {
    throw ParameterError("prime_for needs n >= 1, c >= 0 and an arc side");
  }
  const std::size_t a = static_cast<std::size_t>(n - 1);
  const std::size_t b = static_cast<std::size_t>(c);
  const std::size_t pair = (a + b) * (a + b + 1) / 2 + b;
  const std::size_t rank = 2 * pair + (side == Provenance::Top ? 1 : 2);
  return nth_prime(rank + 1);
}

StageState init_stage0(const Sigma3Config& config) {
  if (config.tendril_count < 1 || config.main_cap < 0 || config.arc_cap < 0) {
    throw ParameterError("sigma3 config needs tendril_count >= 1 and caps >= 0");
  }
  StageState state;
  state.config = config;
  state.main = PLFunction::constant(Rational(-1), Rational(1), Rational(0));
  state.collapse_counts.assign(static_cast<std::size_t>(config.tendril_count) + 1, 0);
  auto base = std::make_shared<const PLFunction>(state.main);
  for (int n = 1; n <= config.tendril_count; ++n) {
    const Rational left = Rational(-1, 2) - Rational(1, static_cast<unsigned long>(2 * n));
    const Rational right = Rational(-1, 2) - Rational(1, static_cast<unsigned long>(2 * n + 1));
    state.tendrils.push_back(make_tendril(n, left, right, base, pow2(-n), 0, 0));
  }
  log_point(state, Rational(-1), Rational(0), 0, Provenance::Main, 0);
  log_point(state, Rational(1), Rational(0), 0, Provenance::Main, 0);
  return state;
}

StageState collapse_from(const StageState& state, int n) {
  const Tendril& victim = state.tendril(n);
  const Rational& left = victim.left;

  std::vector<PLFunction::Breakpoint> below;
  for (const auto& p : state.log) {
    if (left < p.x && p.x < 1 && p.y < upper_bound_at(state, n, p.x)) below.emplace_back(p.x, p.y);
  }
  std::sort(below.begin(), below.end());

  std::vector<PLFunction::Breakpoint> lpts;
  lpts.emplace_back(left, state.main(left));
  lpts.insert(lpts.end(), below.begin(), below.end());
  lpts.emplace_back(Rational(1), Rational(0));
  PLFunction interp(lpts);

  std::vector<PLFunction::Breakpoint> ext;
  for (const auto& bp : state.main.breakpoints()) {
    if (bp.first < left) ext.push_back(bp);
  }
  ext.insert(ext.end(), lpts.begin(), lpts.end());

  StageState next = state;
  next.main = PLFunction::max(state.main, PLFunction(std::move(ext)));
  if (!next.last) next.last.emplace();
  next.last->interpolant = std::move(interp);
  next.last->collapsed_top = victim.top;
  next.tendrils.resize(static_cast<std::size_t>(n - 1));
  for (std::size_t k = static_cast<std::size_t>(n); k < next.collapse_counts.size(); ++k) {
    ++next.collapse_counts[k];
  }
  return next;
}

Rational gap(const StageState& state, int n, const Rational& from) {
  const auto main_xs = abscissae_of(state.main);
  if (n == 1) {
    return sup_difference([](const Rational&) { return Rational(1); }, state.main, from,
                          Rational(1), main_xs);
  }
  const Arc& bound = state.tendril(n - 1).bottom;
  const auto bound_xs = bound.abscissae();
  const auto xs = merged(from, Rational(1), {&main_xs, &bound_xs});
  return sup_difference(bound, state.main, from, Rational(1), xs);
}

StageState spawn_tendrils(const StageState& state, int n, int s) {
  if (n < 1 || static_cast<int>(state.tendrils.size()) != n - 1) {
    throw StateError("spawn_tendrils needs exactly tendrils 1..n-1 alive");
  }
  if (s < 0) throw ParameterError("stage must be >= 0");
  const int count = state.config.tendril_count - n + 1;
  if (count <= 0) return state;

  const Rational lo(-1, static_cast<unsigned long>(2 * s + 2));
  const Rational hi(-1, static_cast<unsigned long>(2 * s + 4));
  // Largest gap between logged abscissae inside the window; every
  // attachment point lands in it, so no (l_k, r_k) contains a logged x.
  Rational gap_lo = lo;
  Rational gap_hi = hi;
  Rational prev = lo;
  Rational best = -1;
  auto consider = [&](const Rational& x) {
    if (x - prev > best) {
      best = x - prev;
      gap_lo = prev;
      gap_hi = x;
    }
    prev = x;
  };
  for (auto it = state.logged_x.upper_bound(lo); it != state.logged_x.end() && *it < hi; ++it) {
    consider(*it);
  }
  consider(hi);

  std::vector<Rational> attach;
  const Rational step = (gap_hi - gap_lo) / (2 * count + 1);
  for (int j = 1; j <= 2 * count; ++j) attach.push_back(gap_lo + step * j);
  if (n > 1 && !(state.tendril(n - 1).right < attach.front())) {
    throw StateError("respawn window overlaps tendril " + std::to_string(n - 1));
  }

  const Rational g = gap(state, n, attach.front());
  StageState next = state;
  auto base = std::make_shared<const PLFunction>(state.main);
  for (int k = n; k <= state.config.tendril_count; ++k) {
    const auto i = static_cast<std::size_t>(2 * (k - n));
    next.tendrils.push_back(make_tendril(k, attach[i], attach[i + 1], base,
                                         g * pow2(-(k + s)),
                                         next.collapse_counts[static_cast<std::size_t>(k)],
                                         s + 1));
  }
  return next;
}

StageState insert_points(const StageState& state, int s) {
  StageState next = state;
  const int em = std::min(s, state.config.main_cap);
  const long den = 1L << em;
  for (long t = -den + 1; t < den; ++t) {
    if (t == 0) continue;
    const Rational x = make_rational(t, den);
    if (next.logged_x.count(x) != 0) continue;
    bool inside = false;
    for (const auto& td : next.tendrils) {
      if (td.left < x && x < td.right) inside = true;
    }
    if (inside) continue;
    log_point(next, x, next.main(x), s, Provenance::Main, 0);
  }
  refine_main(next, em, s);
  const int ea = std::min(s, state.config.arc_cap);
  for (const auto& td : state.tendrils) {
    insert_arc(next, td.top, td.top_prime, ea, s, Provenance::Top, td.n);
    insert_arc(next, td.bottom, td.bottom_prime, ea, s, Provenance::Bottom, td.n);
  }
  return next;
}

StageState advance_stage(const StageState& state, const WTable& w) {
  const int sigma = state.stage + 1;
  StageTransition tr;
  tr.stage = sigma;
  tr.previous_main = state.main;
  tr.previous_tendrils = state.tendrils;
  tr.first_new_point = state.log.size();
  for (const auto& [col, stages] : w.columns()) {
    if (col >= 1 && stages.count(sigma - 1) != 0) {
      tr.trigger = col;
      tr.entry_count = static_cast<int>(w.count_below(col, sigma));
      break;
    }
  }

  StageState next = state;
  next.last = tr;
  if (tr.trigger && *tr.trigger <= state.config.tendril_count) {
    next = collapse_from(next, *tr.trigger);
    next = spawn_tendrils(next, *tr.trigger, sigma - 1);
  }
  next.last->first_new_point = next.log.size();
  next = insert_points(next, sigma);
  next.stage = sigma;
  return next;
}

StageState run_sigma3_state(const WTable& w, int stages, const Sigma3Config& config) {
  if (stages < 0) throw ParameterError("stage count must be >= 0");
  StageState state = init_stage0(config);
  for (int s = 0; s < stages; ++s) state = advance_stage(state, w);
  return state;
}

Presentation run_sigma3(const WTable& w, int stages, const Sigma3Config& config) {
  const StageState state = run_sigma3_state(w, stages, config);
  Presentation pres("sigma3");
  for (const auto& p : state.log) pres.add(SparsePoint::planar(p.x, p.y));
  return pres;
}

bool InvariantReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const InvariantItem& i) { return i.ok; });
}

InvariantReport check_stage_invariants(const StageState& state) {
  InvariantReport report;
  report.stage = state.stage;
  auto fail = [&](int item, const std::string& detail) {
    auto& it = report.items[static_cast<std::size_t>(item - 1)];
    if (it.ok) {
      it.ok = false;
      it.detail = detail;
    }
  };
  for (auto& it : report.items) it.applicable = false;
  const auto& m = state.main;
  const auto main_xs = abscissae_of(m);
  const StageTransition* tr = state.last ? &*state.last : nullptr;

  // (1) the collapse interpolant stays below the old top arc.
  if (tr && tr->interpolant && tr->collapsed_top) {
    report.items[0].applicable = true;
    const auto& l = *tr->interpolant;
    const auto& top = *tr->collapsed_top;
    const auto lx = abscissae_of(l);
    const auto tx = top.abscissae();
    for (const auto& x : merged(l.lo(), Rational(1), {&lx, &tx})) {
      if (top(x) < l(x)) {
        fail(1, "l exceeds t_" + std::to_string(*tr->trigger) + " at x=" + fmt(x));
        break;
      }
    }
  }

  // (2) attachment order, arc endpoints, strict stacking above the main line.
  report.items[1].applicable = !state.tendrils.empty();
  for (std::size_t i = 0; i < state.tendrils.size(); ++i) {
    const Tendril& t = state.tendrils[i];
    const std::string name = std::to_string(t.n);
    if (!(t.left < t.right)) fail(2, "l_" + name + " >= r_" + name);
    if (i + 1 < state.tendrils.size() && !(t.right < state.tendrils[i + 1].left)) {
      fail(2, "r_" + name + " >= l_" + std::to_string(t.n + 1));
    }
    if (t.top(t.left) != m(t.left)) fail(2, "t_" + name + "(l) off the main line");
    if (t.bottom(t.right) != m(t.right)) fail(2, "b_" + name + "(r) off the main line");
    if (t.top(Rational(1)) != t.bottom(Rational(1))) fail(2, "t_" + name + "(1) != b_" + name + "(1)");
    const auto tx = t.top.abscissae();
    const auto bx = t.bottom.abscissae();
    const auto xs_top = merged(t.left, Rational(1), {&main_xs, &tx});
    if (auto x = first_nonpositive_open([&](const Rational& v) -> Rational { return t.top(v) - m(v); }, xs_top)) {
      fail(2, "t_" + name + " not above main at x=" + fmt(*x));
    }
    const auto xs_bot = merged(t.right, Rational(1), {&main_xs, &tx, &bx});
    if (auto x = first_nonpositive_open([&](const Rational& v) -> Rational { return t.bottom(v) - m(v); },
                                        xs_bot)) {
      fail(2, "b_" + name + " not above main at x=" + fmt(*x));
    }
    if (auto x = first_nonpositive_open(
            [&](const Rational& v) -> Rational { return t.top(v) - t.bottom(v); }, xs_bot)) {
      fail(2, "b_" + name + " not below t_" + name + " at x=" + fmt(*x));
    }
    if (i > 0) {
      const Tendril& prev = state.tendrils[i - 1];
      const auto px = prev.bottom.abscissae();
      const auto xs = merged(t.left, Rational(1), {&main_xs, &tx, &px});
      if (auto x = first_nonpositive_open(
              [&](const Rational& v) -> Rational { return prev.bottom(v) - t.top(v); }, xs)) {
        fail(2, "t_" + name + " not below b_" + std::to_string(prev.n) + " at x=" + fmt(*x));
      }
    }
  }

  // (3) points of this stage lie on or above the main line.
  if (tr) {
    report.items[2].applicable = true;
    for (std::size_t i = tr->first_new_point; i < state.log.size(); ++i) {
      const auto& p = state.log[i];
      if (p.y < m(p.x)) {
        fail(3, "point x=" + fmt(p.x) + " below main");
        break;
      }
    }
  }

  // (4) the main line only moves up.
  if (tr) {
    report.items[3].applicable = true;
    const auto px = abscissae_of(tr->previous_main);
    for (const auto& x : merged(Rational(-1), Rational(1), {&main_xs, &px})) {
      if (m(x) < tr->previous_main(x)) {
        fail(4, "main line dropped at x=" + fmt(x));
        break;
      }
    }
  }

  // (5) main-line points stay on the main line, outside every (l_i, r_i).
  if (tr) {
    report.items[4].applicable = true;
    for (std::size_t i = 0; i < tr->first_new_point; ++i) {
      const auto& p = state.log[i];
      if (p.y == tr->previous_main(p.x) && p.y != m(p.x)) {
        fail(5, "point x=" + fmt(p.x) + " left the main line");
        break;
      }
    }
  }
  for (const auto& p : state.log) {
    if (p.y != m(p.x)) continue;
    for (const auto& t : state.tendrils) {
      if (t.left < p.x && p.x < t.right) {
        report.items[4].applicable = true;
        fail(5, "main point x=" + fmt(p.x) + " inside (l_" + std::to_string(t.n) + ", r_" +
                    std::to_string(t.n) + ")");
      }
    }
  }

  // (6) a live tendril born at stage t rises at most 2^-t above the main line.
  report.items[5].applicable = !state.tendrils.empty();
  for (const auto& t : state.tendrils) {
    const auto tx = t.top.abscissae();
    const auto xs = merged(t.left, Rational(1), {&main_xs, &tx});
    const Rational h = sup_difference(t.top, m, t.left, Rational(1), xs);
    if (h > pow2(-t.born_stage)) {
      fail(6, "t_" + std::to_string(t.n) + " rises " + fmt(h) + " > 2^-" +
                  std::to_string(t.born_stage));
    }
  }

  // (7) the k-th entry into W_n moves the main line by at most 2^{-n-k}.
  if (tr && tr->trigger && *tr->trigger <= state.config.tendril_count) {
    report.items[6].applicable = true;
    const auto px = abscissae_of(tr->previous_main);
    const auto xs = merged(Rational(-1), Rational(1), {&main_xs, &px});
    const Rational moved = sup_difference(m, tr->previous_main, Rational(-1), Rational(1), xs);
    const int e = *tr->trigger + tr->entry_count;
    std::ostringstream os;
    os << "entry " << tr->entry_count << " of W_" << *tr->trigger << " moved main by "
       << fmt(moved) << " (~" << to_double(moved) << ") " << (moved > pow2(-e) ? ">" : "<=")
       << " 2^-" << e;
    if (moved > pow2(-e)) {
      fail(7, os.str());
    } else {
      report.items[6].detail = os.str();
    }
  }

  // (8) attachments of tendrils born at stage t lie left of -1/(2t+2).
  report.items[7].applicable = !state.tendrils.empty();
  for (const auto& t : state.tendrils) {
    const Rational bound(-1, static_cast<unsigned long>(2 * t.born_stage + 2));
    if (!(t.left < t.right && t.right < bound)) {
      fail(8, "attachments of tendril " + std::to_string(t.n) + " not left of " + fmt(bound));
    }
  }
  return report;
}

std::vector<InvariantReport> audit_stages(const WTable& w, int stages, const Sigma3Config& config) {
  if (stages < 0) throw ParameterError("stage count must be >= 0");
  std::vector<InvariantReport> out;
  StageState state = init_stage0(config);
  out.push_back(check_stage_invariants(state));
  for (int s = 0; s < stages; ++s) {
    state = advance_stage(state, w);
    out.push_back(check_stage_invariants(state));
  }
  return out;
}

namespace {

// Round-robin merge of several enumerations, skipping repeats.
void interleave(Presentation& out, const std::vector<std::vector<SparsePoint>>& sources) {
  std::size_t longest = 0;
  for (const auto& s : sources) longest = std::max(longest, s.size());
  for (std::size_t i = 0; i < longest; ++i) {
    for (const auto& s : sources) {
      if (i < s.size()) out.add_if_new(s[i]);
    }
  }
}

std::vector<Rational> dyadic_levels(int depth) {
  if (depth < 0 || depth > 24) throw ParameterError("dyadic depth must lie in [0, 24]");
  std::vector<Rational> ts{Rational(0), Rational(1)};
  for (int level = 1; level <= depth; ++level) {
    const long den = 1L << level;
    for (long j = 1; j < den; j += 2) ts.push_back(make_rational(j, den));
  }
  return ts;
}

}  // namespace

Presentation run_pi4_chain(const UTable& u, int m_max, int stages, const Sigma3Config& config) {
  if (m_max < 1) throw ParameterError("chain needs at least one copy");
  std::vector<std::vector<SparsePoint>> copies;
  Rational offset = 0;
  for (int m = 1; m <= m_max; ++m) {
    const auto it = u.find(m);
    const WTable w = it == u.end() ? WTable{} : it->second;
    const Rational scale = pow2(-m);
    std::vector<SparsePoint> copy;
    for (const auto& p : run_sigma3_state(w, stages, config).log) {
      const Rational x = (p.x + 1) / 2;
      SparsePoint q;
      q.set(0, offset + scale * x);
      q.set(static_cast<CoordIndex>(m), scale * p.y);
      copy.push_back(std::move(q));
    }
    copies.push_back(std::move(copy));
    offset += scale;
  }
  Presentation pres("pi4-chain");
  std::vector<std::vector<SparsePoint>> heads;
  for (const auto& c : copies) heads.push_back({c.front()});
  interleave(pres, heads);
  pres.add_if_new(SparsePoint{{0, Rational(1)}});
  std::vector<std::vector<SparsePoint>> tails;
  for (const auto& c : copies) tails.emplace_back(c.begin() + 1, c.end());
  interleave(pres, tails);
  return pres;
}

Presentation circle_wrap(const Presentation& y, int side_depth) {
  const auto ts = dyadic_levels(side_depth);
  std::vector<std::vector<SparsePoint>> sources(4);
  for (const auto& t : ts) {
    SparsePoint a;
    a.set(0, t);
    sources[0].push_back(a);
    SparsePoint b;
    b.set(0, Rational(1));
    b.set(1, t);
    sources[1].push_back(b);
    SparsePoint c;
    c.set(0, t);
    c.set(1, Rational(1));
    sources[2].push_back(c);
  }
  for (const auto& p : y.points()) sources[3].push_back(p.shifted(1));
  Presentation pres("circle-wrap");
  interleave(pres, sources);
  return pres;
}

Presentation circle_wrap(const UTable& u, int m_max, int stages, int side_depth,
                         const Sigma3Config& config) {
  return circle_wrap(run_pi4_chain(u, m_max, stages, config), side_depth);
}

Presentation straight_chain(int depth) {
  Presentation pres("straight-chain");
  for (const auto& t : dyadic_levels(depth)) {
    SparsePoint p;
    p.set(0, t);
    pres.add(std::move(p));
  }
  return pres;
}

}  // namespace polishtop
