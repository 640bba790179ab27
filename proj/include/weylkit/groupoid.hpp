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

// Finite discrete groupoids. Units and arrows are addressed by dense indices;
// string ids are labels used for serialization and for matching arrows
// across related groupoids (reductions and subgroupoids keep ids).

#ifndef WEYLKIT_GROUPOID_HPP_
#define WEYLKIT_GROUPOID_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weylkit/scalar.hpp"

namespace weylkit {

struct Arrow {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Sorted, duplicate-free list of unit (or arrow) indices.
using IndexSet = std::vector<std::size_t>;

class FiniteGroupoid {
 public:
  static constexpr std::size_t kUndefined = static_cast<std::size_t>(-1);

  FiniteGroupoid() = default;

  // Takes raw tables without checking the groupoid axioms (see
  // validate_groupoid). Only shape errors are rejected here.
  FiniteGroupoid(std::vector<std::string> unit_ids, std::vector<Arrow> arrows,
                 std::vector<std::size_t> unit_arrows,
                 std::vector<std::size_t> compose_table,
                 std::vector<std::size_t> inverse)
      : unit_ids_(std::move(unit_ids)),
        arrows_(std::move(arrows)),
        unit_arrows_(std::move(unit_arrows)),
        compose_(std::move(compose_table)),
        inverse_(std::move(inverse)) {
    const std::size_t n = arrows_.size();
    if (unit_arrows_.size() != unit_ids_.size())
      throw InputError("unit arrow table has wrong size");
    if (compose_.size() != n * n)
      throw InputError("composition table has wrong size");
    if (inverse_.size() != n) throw InputError("inverse table has wrong size");
    for (std::size_t u = 0; u < unit_ids_.size(); ++u) {
      if (!unit_index_.emplace(unit_ids_[u], u).second)
        throw InputError("duplicate unit id '" + unit_ids_[u] + "'");
      if (unit_arrows_[u] >= n) throw InputError("unit arrow out of range");
    }
    for (std::size_t a = 0; a < n; ++a) {
      const Arrow& x = arrows_[a];
      if (x.source >= unit_ids_.size() || x.target >= unit_ids_.size())
        throw InputError("arrow '" + x.id + "' has endpoint out of range");
      if (!arrow_index_.emplace(x.id, a).second)
        throw InputError("duplicate arrow id '" + x.id + "'");
      if (inverse_[a] >= n) throw InputError("inverse out of range");
    }
    for (std::size_t c : compose_)
      if (c != kUndefined && c >= n)
        throw InputError("composite out of range");
  }

  std::size_t unit_count() const { return unit_ids_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  bool empty() const { return unit_ids_.empty(); }

  const std::string& unit_id(std::size_t u) const { return unit_ids_.at(u); }
  const std::vector<std::string>& unit_ids() const { return unit_ids_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  std::span<const Arrow> arrows() const { return arrows_; }

  std::size_t source(std::size_t a) const { return arrows_[a].source; }
  std::size_t target(std::size_t a) const { return arrows_[a].target; }
  std::size_t unit_arrow(std::size_t u) const { return unit_arrows_[u]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  bool is_unit_arrow(std::size_t a) const {
    return source(a) == target(a) && unit_arrows_[source(a)] == a;
  }

  // The composite "second after first", defined when
  // source(second) == target(first).
  std::optional<std::size_t> compose(std::size_t second,
                                     std::size_t first) const {
    std::size_t c = compose_[second * arrows_.size() + first];
    if (c == kUndefined) return std::nullopt;
    return c;
  }
  std::size_t compose_raw(std::size_t second, std::size_t first) const {
    return compose_[second * arrows_.size() + first];
  }

  std::optional<std::size_t> find_unit(const std::string& id) const {
    auto it = unit_index_.find(id);
    if (it == unit_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find_arrow(const std::string& id) const {
    auto it = arrow_index_.find(id);
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t unit_index(const std::string& id) const {
    if (auto u = find_unit(id)) return *u;
    throw InputError("unknown unit '" + id + "'");
  }
  std::size_t arrow_index(const std::string& id) const {
    if (auto a = find_arrow(id)) return *a;
    throw InputError("unknown arrow '" + id + "'");
  }

  friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    return a.unit_ids_ == b.unit_ids_ && a.arrows_ == b.arrows_ &&
           a.unit_arrows_ == b.unit_arrows_ && a.compose_ == b.compose_ &&
           a.inverse_ == b.inverse_;
  }

 private:
  std::vector<std::string> unit_ids_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> unit_arrows_;
  std::vector<std::size_t> compose_;
  std::vector<std::size_t> inverse_;
  std::unordered_map<std::string, std::size_t> unit_index_;
  std::unordered_map<std::string, std::size_t> arrow_index_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

inline GroupoidPtr share(FiniteGroupoid g) {
  return std::make_shared<const FiniteGroupoid>(std::move(g));
}

inline bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) {
  return a == b || (a && b && *a == *b);
}

// Canonical id of the arrow t <- s in the pair-groupoid convention.
inline std::string pair_arrow_id(const std::string& target,
                                 const std::string& source) {
  return "(" + target + "," + source + ")";
}

// Builds a principal groupoid from unit ids and arrows; composition and
// inverses are determined by endpoints. Rejects arrow sets that are not an
// equivalence relation.
inline FiniteGroupoid principal_groupoid(std::vector<std::string> unit_ids,
                                         std::vector<Arrow> arrows) {
  const std::size_t n_units = unit_ids.size();
  const std::size_t n = arrows.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_ends;
  for (std::size_t a = 0; a < n; ++a) {
    if (arrows[a].source >= n_units || arrows[a].target >= n_units)
      throw InputError("arrow '" + arrows[a].id + "' endpoint out of range");
    if (!by_ends.emplace(std::pair{arrows[a].target, arrows[a].source}, a)
             .second)
      throw InputError("two arrows share endpoints; composition table needed");
  }
  auto lookup = [&](std::size_t t, std::size_t s) -> std::size_t {
    auto it = by_ends.find({t, s});
    if (it == by_ends.end())
      throw InputError("arrows do not form an equivalence relation (missing " +
                       pair_arrow_id(unit_ids[t], unit_ids[s]) + ")");
    return it->second;
  };
  std::vector<std::size_t> unit_arrows(n_units);
  for (std::size_t u = 0; u < n_units; ++u) unit_arrows[u] = lookup(u, u);
  std::vector<std::size_t> inverse(n);
  for (std::size_t a = 0; a < n; ++a)
    inverse[a] = lookup(arrows[a].source, arrows[a].target);
  std::vector<std::size_t> compose(n * n, FiniteGroupoid::kUndefined);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      if (arrows[b].source == arrows[a].target)
        compose[b * n + a] = lookup(arrows[b].target, arrows[a].source);
  return FiniteGroupoid(std::move(unit_ids), std::move(arrows),
                        std::move(unit_arrows), std::move(compose),
                        std::move(inverse));
}

// Principal groupoid of the equivalence relation with the given blocks,
// arrows ordered by (target, source) and named in the pair convention.
inline FiniteGroupoid equivalence_groupoid(
    std::vector<std::string> unit_ids,
    const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<std::size_t> block_of(unit_ids.size(), FiniteGroupoid::kUndefined);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t u : blocks[b]) {
      if (u >= unit_ids.size() || block_of[u] != FiniteGroupoid::kUndefined)
        throw InputError("blocks do not partition the units");
      block_of[u] = b;
    }
  for (std::size_t b : block_of)
    if (b == FiniteGroupoid::kUndefined)
      throw InputError("blocks do not cover the units");
  std::vector<Arrow> arrows;
  for (std::size_t t = 0; t < unit_ids.size(); ++t)
    for (std::size_t s = 0; s < unit_ids.size(); ++s)
      if (block_of[t] == block_of[s])
        arrows.push_back({pair_arrow_id(unit_ids[t], unit_ids[s]), s, t});
  return principal_groupoid(std::move(unit_ids), std::move(arrows));
}

inline std::vector<std::string> numbered_ids(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return ids;
}

// ---------------------------------------------------------------------------
// Validation and structure.

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  bool ok() const { return violations.empty(); }
};

inline ValidationReport validate_groupoid(const FiniteGroupoid& g) {
  ValidationReport report;
  auto fail = [&](std::string msg) {
    report.violations.push_back(std::move(msg));
  };
  const std::size_t n = g.arrow_count();
  for (std::size_t u = 0; u < g.unit_count(); ++u) {
    std::size_t e = g.unit_arrow(u);
    if (g.source(e) != u || g.target(e) != u)
      fail("unit arrow of " + g.unit_id(u) + " is not a loop at it");
  }
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      const bool composable = g.source(b) == g.target(a);
      auto c = g.compose(b, a);
      if (composable != c.has_value()) {
        fail("composition of " + g.arrow(b).id + " after " + g.arrow(a).id +
             (composable ? " undefined but endpoints match"
                         : " defined but endpoints differ"));
        continue;
      }
      if (c && (g.source(*c) != g.source(a) || g.target(*c) != g.target(b)))
        fail("composite of " + g.arrow(b).id + " after " + g.arrow(a).id +
             " has wrong endpoints");
    }
  }
  if (!report.ok()) return report;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t b = 0; b < n; ++b) {
      if (g.source(c) != g.target(b)) continue;
      std::size_t cb = g.compose_raw(c, b);
      for (std::size_t a = 0; a < n; ++a) {
        if (g.source(b) != g.target(a)) continue;
        if (g.compose_raw(cb, a) != g.compose_raw(c, g.compose_raw(b, a)))
          fail("associativity fails on (" + g.arrow(c).id + ", " +
               g.arrow(b).id + ", " + g.arrow(a).id + ")");
      }
    }
  for (std::size_t a = 0; a < n; ++a) {
    if (g.compose_raw(g.unit_arrow(g.target(a)), a) != a ||
        g.compose_raw(a, g.unit_arrow(g.source(a))) != a)
      fail("identity law fails at " + g.arrow(a).id);
    std::size_t inv = g.inverse(a);
    if (g.inverse(inv) != a) fail("inverse of " + g.arrow(a).id + " not involutive");
    auto right = g.compose(a, inv);
    auto left = g.compose(inv, a);
    if (!right || *right != g.unit_arrow(g.target(a)) || !left ||
        *left != g.unit_arrow(g.source(a)))
      fail("inverse law fails at " + g.arrow(a).id);
  }
  report.notes.push_back(
      "etale, ample, Hausdorff and second countable hold trivially for finite "
      "discrete groupoids");
  return report;
}

struct IsotropyReport {
  std::vector<IndexSet> isotropy;  // per unit
  bool is_principal = true;
  bool is_effective = true;
};

inline IsotropyReport isotropy_report(const FiniteGroupoid& g) {
  IsotropyReport r;
  r.isotropy.resize(g.unit_count());
  for (std::size_t a = 0; a < g.arrow_count(); ++a)
    if (g.source(a) == g.target(a)) r.isotropy[g.source(a)].push_back(a);
  for (const auto& iso : r.isotropy)
    if (iso.size() != 1) r.is_principal = false;
  // Isotropy of a discrete groupoid is open, so its interior is itself.
  r.is_effective = r.is_principal;
  return r;
}

inline bool is_principal(const FiniteGroupoid& g) {
  return isotropy_report(g).is_principal;
}

// Orbit blocks, each sorted, ordered by least element.
inline std::vector<IndexSet> orbits(const FiniteGroupoid& g) {
  std::vector<std::size_t> parent(g.unit_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arrow& a : g.arrows()) {
    std::size_t x = find(a.source), y = find(a.target);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::map<std::size_t, IndexSet> blocks;
  for (std::size_t u = 0; u < g.unit_count(); ++u) blocks[find(u)].push_back(u);
  std::vector<IndexSet> out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  return out;
}

inline std::vector<std::size_t> orbit_index(const FiniteGroupoid& g) {
  std::vector<std::size_t> idx(g.unit_count());
  auto blocks = orbits(g);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t u : blocks[b]) idx[u] = b;
  return idx;
}

inline IndexSet normalize_set(IndexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const IndexSet& s, std::size_t x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline void require_units(const FiniteGroupoid& g, const IndexSet& s) {
  for (std::size_t u : s)
    if (u >= g.unit_count())
      throw InputError("unit index " + std::to_string(u) + " out of range");
}

inline bool is_invariant(const FiniteGroupoid& g, const IndexSet& s) {
  for (const Arrow& a : g.arrows())
    if (contains(s, a.source) != contains(s, a.target)) return false;
  return true;
}

inline IndexSet complement(const FiniteGroupoid& g, const IndexSet& s) {
  IndexSet out;
  for (std::size_t u = 0; u < g.unit_count(); ++u)
    if (!contains(s, u)) out.push_back(u);
  return out;
}

inline IndexSet all_units(const FiniteGroupoid& g) {
  IndexSet s(g.unit_count());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

// All unions of orbits, ordered by size and then lexicographically, so that
// every set appears after all of its subsets.
inline std::vector<IndexSet> invariant_subsets(const FiniteGroupoid& g) {
  auto blocks = orbits(g);
  if (blocks.size() > 20) throw CapExceeded("too many orbits to enumerate");
  std::vector<IndexSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << blocks.size()); ++mask) {
    IndexSet s;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (mask & (std::size_t{1} << b))
        s.insert(s.end(), blocks[b].begin(), blocks[b].end());
    out.push_back(normalize_set(std::move(s)));
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// Restriction to the arrows with both endpoints in `keep`. Ids are kept.
inline FiniteGroupoid reduction(const FiniteGroupoid& g, IndexSet keep) {
  keep = normalize_set(std::move(keep));
  require_units(g, keep);
  std::vector<std::size_t> new_unit(g.unit_count(), FiniteGroupoid::kUndefined);
  std::vector<std::string> unit_ids;
  for (std::size_t u : keep) {
    new_unit[u] = unit_ids.size();
    unit_ids.push_back(g.unit_id(u));
  }
  std::vector<std::size_t> new_arrow(g.arrow_count(), FiniteGroupoid::kUndefined);
  std::vector<std::size_t> old_arrow;
  std::vector<Arrow> arrows;
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    const Arrow& x = g.arrow(a);
    if (new_unit[x.source] == FiniteGroupoid::kUndefined ||
        new_unit[x.target] == FiniteGroupoid::kUndefined)
      continue;
    new_arrow[a] = arrows.size();
    old_arrow.push_back(a);
    arrows.push_back({x.id, new_unit[x.source], new_unit[x.target]});
  }
  const std::size_t n = arrows.size();
  std::vector<std::size_t> unit_arrows;
  for (std::size_t u : keep) unit_arrows.push_back(new_arrow[g.unit_arrow(u)]);
  std::vector<std::size_t> inverse(n);
  std::vector<std::size_t> compose(n * n, FiniteGroupoid::kUndefined);
  for (std::size_t i = 0; i < n; ++i) {
    inverse[i] = new_arrow[g.inverse(old_arrow[i])];
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t c = g.compose_raw(old_arrow[i], old_arrow[j]);
      if (c != FiniteGroupoid::kUndefined) compose[i * n + j] = new_arrow[c];
    }
  }
  return FiniteGroupoid(std::move(unit_ids), std::move(arrows),
                        std::move(unit_arrows), std::move(compose),
                        std::move(inverse));
}

// The wide subgroupoid of unit arrows, ids preserved.
inline FiniteGroupoid unit_space_groupoid(const FiniteGroupoid& g) {
  std::vector<Arrow> arrows;
  for (std::size_t u = 0; u < g.unit_count(); ++u)
    arrows.push_back({g.arrow(g.unit_arrow(u)).id, u, u});
  return principal_groupoid(g.unit_ids(), std::move(arrows));
}

// True when units are "0".."n-1" and arrows are named (t,s) by endpoints.
inline bool has_numbered_pair_labels(const FiniteGroupoid& g) {
  for (std::size_t u = 0; u < g.unit_count(); ++u)
    if (g.unit_id(u) != std::to_string(u)) return false;
  for (const Arrow& a : g.arrows())
    if (a.id != pair_arrow_id(g.unit_id(a.target), g.unit_id(a.source)))
      return false;
  return true;
}

// Disjoint union; units of `second` follow those of `first`. Numbered pair
// groupoids are renumbered consecutively, anything else gets "a:"/"b:" tags.
inline FiniteGroupoid disjoint_union(const FiniteGroupoid& first,
                                     const FiniteGroupoid& second) {
  const std::size_t nu1 = first.unit_count();
  const std::size_t na1 = first.arrow_count();
  const std::size_t n = na1 + second.arrow_count();
  const bool numbered =
      has_numbered_pair_labels(first) && has_numbered_pair_labels(second);
  std::vector<std::string> unit_ids;
  for (std::size_t u = 0; u < first.unit_count(); ++u)
    unit_ids.push_back(numbered ? std::to_string(u) : "a:" + first.unit_id(u));
  for (std::size_t u = 0; u < second.unit_count(); ++u)
    unit_ids.push_back(numbered ? std::to_string(nu1 + u)
                                : "b:" + second.unit_id(u));
  std::vector<Arrow> arrows;
  for (const Arrow& a : first.arrows())
    arrows.push_back({numbered ? pair_arrow_id(unit_ids[a.target],
                                               unit_ids[a.source])
                               : "a:" + a.id,
                      a.source, a.target});
  for (const Arrow& a : second.arrows())
    arrows.push_back({numbered ? pair_arrow_id(unit_ids[nu1 + a.target],
                                               unit_ids[nu1 + a.source])
                               : "b:" + a.id,
                      nu1 + a.source, nu1 + a.target});
  std::vector<std::size_t> unit_arrows, inverse;
  for (std::size_t u = 0; u < first.unit_count(); ++u)
    unit_arrows.push_back(first.unit_arrow(u));
  for (std::size_t u = 0; u < second.unit_count(); ++u)
    unit_arrows.push_back(na1 + second.unit_arrow(u));
  for (std::size_t a = 0; a < na1; ++a) inverse.push_back(first.inverse(a));
  for (std::size_t a = 0; a < second.arrow_count(); ++a)
    inverse.push_back(na1 + second.inverse(a));
  std::vector<std::size_t> compose(n * n, FiniteGroupoid::kUndefined);
  for (std::size_t b = 0; b < na1; ++b)
    for (std::size_t a = 0; a < na1; ++a)
      compose[b * n + a] = first.compose_raw(b, a);
  for (std::size_t b = 0; b < second.arrow_count(); ++b)
    for (std::size_t a = 0; a < second.arrow_count(); ++a) {
      std::size_t c = second.compose_raw(b, a);
      compose[(na1 + b) * n + na1 + a] =
          c == FiniteGroupoid::kUndefined ? c : na1 + c;
    }
  return FiniteGroupoid(std::move(unit_ids), std::move(arrows),
                        std::move(unit_arrows), std::move(compose),
                        std::move(inverse));
}

// Product groupoid. Unit (u1,u2) has index u1*|units2|+u2 and arrow (a1,a2)
// has index a1*|arrows2|+a2. Principal products use pair-convention ids.
inline FiniteGroupoid product(const FiniteGroupoid& g1,
                              const FiniteGroupoid& g2) {
  const std::size_t nu2 = g2.unit_count();
  const std::size_t na2 = g2.arrow_count();
  const std::size_t n = g1.arrow_count() * na2;
  const bool principal = is_principal(g1) && is_principal(g2);
  std::vector<std::string> unit_ids;
  for (std::size_t u1 = 0; u1 < g1.unit_count(); ++u1)
    for (std::size_t u2 = 0; u2 < nu2; ++u2)
      unit_ids.push_back("(" + g1.unit_id(u1) + "," + g2.unit_id(u2) + ")");
  std::vector<Arrow> arrows;
  for (std::size_t a1 = 0; a1 < g1.arrow_count(); ++a1)
    for (std::size_t a2 = 0; a2 < na2; ++a2) {
      std::size_t s = g1.source(a1) * nu2 + g2.source(a2);
      std::size_t t = g1.target(a1) * nu2 + g2.target(a2);
      std::string id = principal
                           ? pair_arrow_id(unit_ids[t], unit_ids[s])
                           : "<" + g1.arrow(a1).id + "," + g2.arrow(a2).id + ">";
      arrows.push_back({std::move(id), s, t});
    }
  std::vector<std::size_t> unit_arrows;
  for (std::size_t u1 = 0; u1 < g1.unit_count(); ++u1)
    for (std::size_t u2 = 0; u2 < nu2; ++u2)
      unit_arrows.push_back(g1.unit_arrow(u1) * na2 + g2.unit_arrow(u2));
  std::vector<std::size_t> inverse(n);
  std::vector<std::size_t> compose(n * n, FiniteGroupoid::kUndefined);
  for (std::size_t b = 0; b < n; ++b) {
    std::size_t b1 = b / na2, b2 = b % na2;
    inverse[b] = g1.inverse(b1) * na2 + g2.inverse(b2);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t c1 = g1.compose_raw(b1, a / na2);
      std::size_t c2 = g2.compose_raw(b2, a % na2);
      if (c1 != FiniteGroupoid::kUndefined && c2 != FiniteGroupoid::kUndefined)
        compose[b * n + a] = c1 * na2 + c2;
    }
  }
  return FiniteGroupoid(std::move(unit_ids), std::move(arrows),
                        std::move(unit_arrows), std::move(compose),
                        std::move(inverse));
}

// ---------------------------------------------------------------------------
// Bisections.

inline bool is_bisection(const FiniteGroupoid& g, const IndexSet& arrows) {
  std::set<std::size_t> sources, targets;
  for (std::size_t a : arrows) {
    if (a >= g.arrow_count()) throw InputError("arrow index out of range");
    if (!sources.insert(g.source(a)).second) return false;
    if (!targets.insert(g.target(a)).second) return false;
  }
  return true;
}

// All maximal bisections, each sorted; enumeration order is deterministic.
inline std::vector<IndexSet> maximal_bisections(const FiniteGroupoid& g,
                                                std::size_t cap = 4096) {
  const std::size_t nu = g.unit_count();
  std::vector<IndexSet> out_arrows(nu);
  for (std::size_t a = 0; a < g.arrow_count(); ++a)
    out_arrows[g.source(a)].push_back(a);
  std::vector<bool> used_target(nu, false);
  std::vector<bool> used_source(nu, false);
  IndexSet current;
  std::vector<IndexSet> result;
  std::size_t visits = 0;
  auto is_maximal = [&] {
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
      if (!used_source[g.source(a)] && !used_target[g.target(a)]) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t u) -> void {
    if (++visits > cap * 64) throw CapExceeded("bisection search too large");
    if (u == nu) {
      if (is_maximal()) {
        if (result.size() >= cap)
          throw CapExceeded("more than " + std::to_string(cap) +
                            " maximal bisections");
        result.push_back(normalize_set(current));
      }
      return;
    }
    for (std::size_t a : out_arrows[u]) {
      if (used_target[g.target(a)]) continue;
      used_target[g.target(a)] = true;
      used_source[u] = true;
      current.push_back(a);
      self(self, u + 1);
      current.pop_back();
      used_source[u] = false;
      used_target[g.target(a)] = false;
    }
    self(self, u + 1);
  };
  rec(rec, 0);
  return result;
}

// ---------------------------------------------------------------------------
// Maps and isomorphism search.

struct GroupoidMap {
  std::vector<std::size_t> unit_map;
  std::vector<std::size_t> arrow_map;

  friend bool operator==(const GroupoidMap&, const GroupoidMap&) = default;
};

// Violations of functoriality for `m` as a map g1 -> g2.
inline std::vector<std::string> check_groupoid_map(const FiniteGroupoid& g1,
                                                   const FiniteGroupoid& g2,
                                                   const GroupoidMap& m) {
  std::vector<std::string> out;
  if (m.unit_map.size() != g1.unit_count() ||
      m.arrow_map.size() != g1.arrow_count()) {
    out.push_back("map tables have wrong size");
    return out;
  }
  for (std::size_t u : m.unit_map)
    if (u >= g2.unit_count()) out.push_back("unit image out of range");
  for (std::size_t a : m.arrow_map)
    if (a >= g2.arrow_count()) out.push_back("arrow image out of range");
  if (!out.empty()) return out;
  for (std::size_t a = 0; a < g1.arrow_count(); ++a) {
    std::size_t fa = m.arrow_map[a];
    if (g2.source(fa) != m.unit_map[g1.source(a)] ||
        g2.target(fa) != m.unit_map[g1.target(a)])
      out.push_back("endpoints not preserved at " + g1.arrow(a).id);
    if (m.arrow_map[g1.inverse(a)] != g2.inverse(fa))
      out.push_back("inverse not preserved at " + g1.arrow(a).id);
  }
  for (std::size_t u = 0; u < g1.unit_count(); ++u)
    if (m.arrow_map[g1.unit_arrow(u)] != g2.unit_arrow(m.unit_map[u]))
      out.push_back("identity not preserved at " + g1.unit_id(u));
  for (std::size_t b = 0; b < g1.arrow_count(); ++b)
    for (std::size_t a = 0; a < g1.arrow_count(); ++a) {
      auto c = g1.compose(b, a);
      if (!c) continue;
      auto fc = g2.compose(m.arrow_map[b], m.arrow_map[a]);
      if (!fc || *fc != m.arrow_map[*c])
        out.push_back("composition not preserved at (" + g1.arrow(b).id +
                      ", " + g1.arrow(a).id + ")");
    }
  return out;
}

inline bool is_groupoid_isomorphism(const FiniteGroupoid& g1,
                                    const FiniteGroupoid& g2,
                                    const GroupoidMap& m) {
  if (g1.unit_count() != g2.unit_count() ||
      g1.arrow_count() != g2.arrow_count())
    return false;
  if (!check_groupoid_map(g1, g2, m).empty()) return false;
  auto bijective = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  return bijective(m.unit_map) && bijective(m.arrow_map);
}

inline GroupoidMap invert_map(const GroupoidMap& m) {
  GroupoidMap inv;
  inv.unit_map.resize(m.unit_map.size());
  inv.arrow_map.resize(m.arrow_map.size());
  for (std::size_t u = 0; u < m.unit_map.size(); ++u) inv.unit_map[m.unit_map[u]] = u;
  for (std::size_t a = 0; a < m.arrow_map.size(); ++a)
    inv.arrow_map[m.arrow_map[a]] = a;
  return inv;
}

inline GroupoidMap compose_maps(const GroupoidMap& second,
                                const GroupoidMap& first) {
  GroupoidMap out;
  for (std::size_t u : first.unit_map) out.unit_map.push_back(second.unit_map[u]);
  for (std::size_t a : first.arrow_map)
    out.arrow_map.push_back(second.arrow_map[a]);
  return out;
}

inline GroupoidMap identity_map(const FiniteGroupoid& g) {
  GroupoidMap m;
  m.unit_map = all_units(g);
  m.arrow_map.resize(g.arrow_count());
  std::iota(m.arrow_map.begin(), m.arrow_map.end(), 0);
  return m;
}

namespace detail {

struct IsoProfile {
  std::vector<std::vector<std::size_t>> hom;  // hom[t][s] arrow lists
  std::vector<std::size_t> orbit_size;
  std::vector<std::size_t> isotropy_size;
};

inline IsoProfile profile(const FiniteGroupoid& g) {
  IsoProfile p;
  const std::size_t n = g.unit_count();
  p.hom.assign(n * n, {});
  for (std::size_t a = 0; a < g.arrow_count(); ++a)
    p.hom[g.target(a) * n + g.source(a)].push_back(a);
  auto blocks = orbits(g);
  p.orbit_size.resize(n);
  for (const auto& b : blocks)
    for (std::size_t u : b) p.orbit_size[u] = b.size();
  p.isotropy_size.resize(n);
  for (std::size_t u = 0; u < n; ++u) p.isotropy_size[u] = p.hom[u * n + u].size();
  return p;
}

}  // namespace detail

// Lexicographic backtracking over unit bijections, pruned on orbit sizes,
// isotropy sizes and hom-set sizes; arrows are then matched hom-set by
// hom-set. Deterministic for fixed unit orderings.
inline std::optional<GroupoidMap> find_isomorphism(const FiniteGroupoid& g1,
                                                   const FiniteGroupoid& g2,
                                                   std::size_t cap = 64) {
  if (g1.arrow_count() + g2.arrow_count() > cap)
    throw CapExceeded("isomorphism search over " +
                      std::to_string(g1.arrow_count() + g2.arrow_count()) +
                      " arrows exceeds cap " + std::to_string(cap));
  const std::size_t nu = g1.unit_count();
  if (nu != g2.unit_count() || g1.arrow_count() != g2.arrow_count())
    return std::nullopt;
  auto p1 = detail::profile(g1);
  auto p2 = detail::profile(g2);
  auto multiset = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (multiset(p1.orbit_size) != multiset(p2.orbit_size) ||
      multiset(p1.isotropy_size) != multiset(p2.isotropy_size))
    return std::nullopt;

  GroupoidMap m;
  m.unit_map.assign(nu, FiniteGroupoid::kUndefined);
  m.arrow_map.assign(g1.arrow_count(), FiniteGroupoid::kUndefined);
  std::vector<bool> unit_used(nu, false);
  std::vector<bool> arrow_used(g2.arrow_count(), false);

  auto arrow_consistent = [&](std::size_t a) {
    std::size_t fa = m.arrow_map[a];
    for (std::size_t b = 0; b < g1.arrow_count(); ++b) {
      std::size_t fb = m.arrow_map[b];
      if (fb == FiniteGroupoid::kUndefined) continue;
      for (auto [x, y, fx, fy] : {std::tuple{a, b, fa, fb},
                                  std::tuple{b, a, fb, fa}}) {
        auto c = g1.compose(x, y);
        if (!c) continue;
        std::size_t fc = m.arrow_map[*c];
        if (fc != FiniteGroupoid::kUndefined && g2.compose_raw(fx, fy) != fc)
          return false;
      }
    }
    std::size_t inv = m.arrow_map[g1.inverse(a)];
    if (inv != FiniteGroupoid::kUndefined && inv != g2.inverse(fa)) return false;
    return true;
  };

  auto match_arrows = [&](auto&& self, std::size_t a) -> bool {
    if (a == g1.arrow_count()) return true;
    std::size_t s = m.unit_map[g1.source(a)], t = m.unit_map[g1.target(a)];
    bool unit = g1.is_unit_arrow(a);
    for (std::size_t fa : p2.hom[t * nu + s]) {
      if (arrow_used[fa]) continue;
      if (unit != g2.is_unit_arrow(fa)) continue;
      m.arrow_map[a] = fa;
      arrow_used[fa] = true;
      if (arrow_consistent(a) && self(self, a + 1)) return true;
      arrow_used[fa] = false;
      m.arrow_map[a] = FiniteGroupoid::kUndefined;
    }
    return false;
  };

  auto match_units = [&](auto&& self, std::size_t u) -> bool {
    if (u == nu) return match_arrows(match_arrows, 0);
    for (std::size_t v = 0; v < nu; ++v) {
      if (unit_used[v]) continue;
      if (p1.orbit_size[u] != p2.orbit_size[v] ||
          p1.isotropy_size[u] != p2.isotropy_size[v])
        continue;
      bool ok = true;
      for (std::size_t w = 0; w < u && ok; ++w) {
        std::size_t fw = m.unit_map[w];
        ok = p1.hom[u * nu + w].size() == p2.hom[v * nu + fw].size() &&
             p1.hom[w * nu + u].size() == p2.hom[fw * nu + v].size();
      }
      if (!ok) continue;
      m.unit_map[u] = v;
      unit_used[v] = true;
      if (self(self, u + 1)) return true;
      unit_used[v] = false;
    }
    m.unit_map[u] = FiniteGroupoid::kUndefined;
    return false;
  };

  if (!match_units(match_units, 0)) return std::nullopt;
  return m;
}

}  // namespace weylkit

#endif  // WEYLKIT_GROUPOID_HPP_
