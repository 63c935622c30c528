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

// Independent reference computations used by the tests. Nothing here calls
// into the library beyond its value types, so a bug in the library cannot
// hide behind the same bug in the oracle.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Matrix = std::vector<std::vector<Q>>;
using BoolMatrix = std::vector<std::vector<bool>>;

inline Q qabs(const Q& v) { return v < 0 ? Q(-v) : v; }

// Sup distance between two coordinate maps; absent coordinates are 0.
inline Q sup_dist(const std::map<long, Q>& a, const std::map<long, Q>& b) {
  Q best = 0;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    const Q other = it == b.end() ? Q(0) : it->second;
    if (qabs(v - other) > best) best = qabs(v - other);
  }
  for (const auto& [k, v] : b) {
    if (a.count(k) == 0 && qabs(v) > best) best = qabs(v);
  }
  return best;
}

// Random rational in [lo, hi] with denominator den.
inline Q random_q(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> pick(lo * den, hi * den);
  Q q(pick(rng), den);
  q.canonicalize();
  return q;
}

// Shortest-path metric of a random connected weighted graph (Floyd-Warshall).
inline Matrix random_graph_metric(std::mt19937_64& rng, std::size_t n) {
  const Q inf = 1000000;
  Matrix d(n, std::vector<Q>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  std::bernoulli_distribution edge(0.3);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || edge(rng)) {
        const Q w = random_q(rng, 0, 2, 16) + Q(1, 32);
        if (w < d[i][j]) d[i][j] = d[j][i] = w;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Q via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
    }
  }
  return d;
}

// Boolean matrix product over (or, and).
inline BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
  const std::size_t n = a.size();
  BoolMatrix c(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[k][j]) c[i][j] = true;
      }
    }
  }
  return c;
}

// Reflexive-transitive closure by repeated squaring of (I + A).
inline BoolMatrix closure(BoolMatrix a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i][i] = true;
  for (std::size_t len = 1; len < n; len *= 2) a = bool_product(a, a);
  return a;
}

// Is there an eps-chain x = p_0, ..., p_m = y (consecutive distances < eps)
// whose interior points all have allowed[p] set?
inline bool reachable(const Matrix& d, const Q& eps, std::size_t x, std::size_t y,
                      const std::vector<bool>& allowed) {
  if (x == y) return true;
  const std::size_t n = d.size();
  if (d[x][y] < eps) return true;
  BoolMatrix inner(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      inner[i][j] = allowed[i] && allowed[j] && d[i][j] < eps;
    }
  }
  const BoolMatrix star = closure(inner);
  for (std::size_t a = 0; a < n; ++a) {
    if (!allowed[a] || !(d[x][a] < eps)) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (allowed[b] && star[a][b] && d[b][y] < eps) return true;
    }
  }
  return false;
}

// Plain sieve of Eratosthenes; primes below limit.
inline std::vector<std::uint64_t> primes_below(std::uint64_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
  }
  return out;
}

// Greedy cover of a point set by closed eps-balls around chosen points; any
// valid cover size is an upper bound for the minimum.
inline std::size_t greedy_cover_size(const Matrix& d, const Q& eps) {
  const std::size_t n = d.size();
  std::vector<bool> covered(n, false);
  std::size_t centers = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (covered[c]) continue;
    ++centers;
    for (std::size_t p = 0; p < n; ++p) {
      if (d[c][p] <= eps) covered[p] = true;
    }
  }
  return centers;
}

}  // namespace oracle
