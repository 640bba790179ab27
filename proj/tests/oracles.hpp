// Copyright 2026 The weylkit Authors
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

// Independent reference computations. Nothing here calls the library's own
// algorithms; only the groupoid tables and element coefficients are read.

#ifndef WEYLKIT_TESTS_ORACLES_HPP_
#define WEYLKIT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/weylkit.hpp"

namespace weylkit::oracle {

using Dense = std::vector<std::vector<GaussianRational>>;

// A principal groupoid algebra is the algebra of unit-indexed matrices
// supported on the arrows: M[t][s] = f(t <- s).
inline Dense to_matrix(const AlgebraElement& f) {
  const FiniteGroupoid& g = f.g();
  const std::size_t n = g.unit_count();
  Dense m(n, std::vector<GaussianRational>(n));
  for (std::size_t a = 0; a < g.arrow_count(); ++a)
    m[g.target(a)][g.source(a)] += f[a];
  return m;
}

inline Dense multiply(const Dense& x, const Dense& y) {
  const std::size_t n = x.size();
  Dense z(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    }
  return z;
}

inline Dense conjugate_transpose(const Dense& x) {
  const std::size_t n = x.size();
  Dense z(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z[j][i] = x[i][j].conj();
  return z;
}

inline Dense diagonal_part(const Dense& x) {
  Dense z(x.size(), std::vector<GaussianRational>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) z[i][i] = x[i][i];
  return z;
}

inline bool is_diagonal(const Dense& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (i != j && !x[i][j].is_zero()) return false;
  return true;
}

// Matrix Kronecker product with row index i1 * n2 + i2.
inline Dense kronecker(const Dense& x, const Dense& y) {
  const std::size_t n1 = x.size(), n2 = y.size();
  Dense z(n1 * n2, std::vector<GaussianRational>(n1 * n2));
  for (std::size_t i1 = 0; i1 < n1; ++i1)
    for (std::size_t j1 = 0; j1 < n1; ++j1)
      for (std::size_t i2 = 0; i2 < n2; ++i2)
        for (std::size_t j2 = 0; j2 < n2; ++j2)
          z[i1 * n2 + i2][j1 * n2 + j2] = x[i1][j1] * y[i2][j2];
  return z;
}

// Reachability closure over units, by repeated relaxation.
inline std::vector<std::vector<bool>> reachable(const FiniteGroupoid& g) {
  const std::size_t n = g.unit_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) r[u][u] = true;
  for (const Arrow& a : g.arrows()) r[a.source][a.target] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

inline std::size_t orbit_count(const FiniteGroupoid& g) {
  auto r = reachable(g);
  std::set<std::vector<bool>> rows(r.begin(), r.end());
  return rows.size();
}

// Every subset of units closed under arrows, by exhaustive enumeration.
inline std::vector<IndexSet> invariant_sets(const FiniteGroupoid& g) {
  const std::size_t n = g.unit_count();
  std::vector<IndexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (const Arrow& a : g.arrows())
      if (((mask >> a.source) & 1) != ((mask >> a.target) & 1)) closed = false;
    if (!closed) continue;
    IndexSet s;
    for (std::size_t u = 0; u < n; ++u)
      if ((mask >> u) & 1) s.push_back(u);
    out.push_back(s);
  }
  return out;
}

inline bool injective_ends(const FiniteGroupoid& g, const IndexSet& s) {
  std::vector<std::size_t> src, dst;
  for (std::size_t a : s) {
    src.push_back(g.source(a));
    dst.push_back(g.target(a));
  }
  std::sort(src.begin(), src.end());
  std::sort(dst.begin(), dst.end());
  return std::adjacent_find(src.begin(), src.end()) == src.end() &&
         std::adjacent_find(dst.begin(), dst.end()) == dst.end();
}

// Principal groupoids are isomorphic iff some unit permutation carries the
// arrow relation onto the arrow relation. Brute force over all permutations.
inline std::optional<std::vector<std::size_t>> principal_isomorphism(
    const FiniteGroupoid& g1, const FiniteGroupoid& g2) {
  if (g1.unit_count() != g2.unit_count() || g1.arrow_count() != g2.arrow_count())
    return std::nullopt;
  const std::size_t n = g1.unit_count();
  std::set<std::pair<std::size_t, std::size_t>> rel2;
  for (const Arrow& a : g2.arrows()) rel2.insert({a.source, a.target});
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Arrow& a : g1.arrows())
      if (!rel2.count({perm[a.source], perm[a.target]})) {
        ok = false;
        break;
      }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// Paths from any vertex to a sink, by explicit stack-based enumeration.
inline std::map<std::string, std::size_t> paths_per_sink(const Graph& e) {
  std::map<std::string, std::size_t> count;
  for (const std::string& v : e.vertices) {
    std::vector<std::string> stack{v};
    while (!stack.empty()) {
      std::string x = stack.back();
      stack.pop_back();
      bool sink = true;
      for (const Edge& ed : e.edges)
        if (ed.source == x) {
          sink = false;
          stack.push_back(ed.target);
        }
      if (sink) ++count[x];
    }
  }
  return count;
}

// Normalized trace on an orbit block of a principal groupoid algebra.
inline Rational block_trace(const AlgebraElement& f, const IndexSet& block) {
  Rational s = 0;
  for (std::size_t u : block) s += f.at_unit(u).re();
  return s / static_cast<long>(block.size());
}

inline AlgebraElement random_element(const GroupoidPtr& g, std::mt19937_64& rng,
                                     int range = 3) {
  AlgebraElement f(g);
  for (std::size_t a = 0; a < g->arrow_count(); ++a) {
    long re = static_cast<long>(rng() % (2 * range + 1)) - range;
    long im = static_cast<long>(rng() % (2 * range + 1)) - range;
    f[a] = GaussianRational(re, im);
  }
  return f;
}

inline GaussianRational random_nonzero(std::mt19937_64& rng) {
  for (;;) {
    GaussianRational z(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3);
    if (!z.is_zero()) return z;
  }
}

inline GaussianRational random_phase(std::mt19937_64& rng) {
  static const GaussianRational kPhases[] = {GaussianRational(1), GaussianRational(-1),
                                             GaussianRational(0, 1), GaussianRational(0, -1),
                                             GaussianRational(make_rational(3, 5), make_rational(4, 5))};
  return kPhases[rng() % 5];
}

inline GroupoidPtr r(std::size_t n) { return share(full_relation(n)); }
inline GroupoidPtr t(std::size_t n) { return share(trivial(n)); }
inline GroupoidPtr g3() { return share(disjoint_union(full_relation(2), trivial(1))); }

inline Graph two_sink_graph() {
  return Graph{{"v", "w1", "w2"}, {{"e1", "v", "w1"}, {"e2", "v", "w2"}}};
}

}  // namespace weylkit::oracle

#endif  // WEYLKIT_TESTS_ORACLES_HPP_
