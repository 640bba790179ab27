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

#ifndef WEYLKIT_GENERATORS_HPP_
#define WEYLKIT_GENERATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "weylkit/groupoid.hpp"

namespace weylkit {

// R_n: every pair of units connected by exactly one arrow.
inline FiniteGroupoid full_relation(std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks;
  if (n > 0) blocks.emplace_back(n);
  for (std::size_t i = 0; i < n; ++i) blocks[0][i] = i;
  return equivalence_groupoid(numbered_ids(n), blocks);
}

// T_n: units only.
inline FiniteGroupoid trivial(std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back({i});
  return equivalence_groupoid(numbered_ids(n), blocks);
}

// Z/m acting on itself by translation. Arrow "k@x" goes from x to x+k.
inline FiniteGroupoid cyclic_transformation(std::size_t m) {
  if (m == 0) throw InputError("cyclic_transformation needs m >= 1");
  const std::size_t n = m * m;
  std::vector<Arrow> arrows;
  auto index = [m](std::size_t k, std::size_t x) { return k * m + x; };
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t x = 0; x < m; ++x)
      arrows.push_back(
          {std::to_string(k) + "@" + std::to_string(x), x, (x + k) % m});
  std::vector<std::size_t> unit_arrows(m), inverse(n);
  std::vector<std::size_t> compose(n * n, FiniteGroupoid::kUndefined);
  for (std::size_t x = 0; x < m; ++x) unit_arrows[x] = index(0, x);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t x = 0; x < m; ++x) {
      inverse[index(k, x)] = index((m - k) % m, (x + k) % m);
      std::size_t y = (x + k) % m;
      for (std::size_t l = 0; l < m; ++l)
        compose[index(l, y) * n + index(k, x)] = index((k + l) % m, x);
    }
  return FiniteGroupoid(numbered_ids(m), std::move(arrows),
                        std::move(unit_arrows), std::move(compose),
                        std::move(inverse));
}

// Z/m as a one-unit groupoid; not principal for m > 1.
inline FiniteGroupoid cyclic_group(std::size_t m) {
  if (m == 0) throw InputError("cyclic_group needs m >= 1");
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < m; ++k) arrows.push_back({"g" + std::to_string(k), 0, 0});
  std::vector<std::size_t> inverse(m), compose(m * m);
  for (std::size_t k = 0; k < m; ++k) {
    inverse[k] = (m - k) % m;
    for (std::size_t l = 0; l < m; ++l) compose[l * m + k] = (k + l) % m;
  }
  return FiniteGroupoid({"0"}, std::move(arrows), {0}, std::move(compose),
                        std::move(inverse));
}

// Equivalence relation on n units drawn from the seed. The draw only uses
// raw engine output, so it is reproducible across standard libraries.
inline FiniteGroupoid random_equivalence(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t u = 0; u < n; ++u) {
    std::size_t choice = rng() % (blocks.size() + 1);
    if (choice == blocks.size())
      blocks.push_back({u});
    else
      blocks[choice].push_back(u);
  }
  return equivalence_groupoid(numbered_ids(n), blocks);
}

// ---------------------------------------------------------------------------
// Directed graphs and their path groupoids.

struct Edge {
  std::string id;
  std::string source;
  std::string target;
};

struct Graph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  std::size_t vertex_index(const std::string& v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end()) throw InputError("unknown vertex '" + v + "'");
    return static_cast<std::size_t>(it - vertices.begin());
  }
  bool is_sink(const std::string& v) const {
    return std::none_of(edges.begin(), edges.end(),
                        [&](const Edge& e) { return e.source == v; });
  }
};

inline void check_graph(const Graph& e) {
  std::set<std::string> seen(e.vertices.begin(), e.vertices.end());
  if (seen.size() != e.vertices.size()) throw InputError("duplicate vertex");
  std::set<std::string> edge_ids;
  for (const Edge& x : e.edges) {
    if (!seen.count(x.source) || !seen.count(x.target))
      throw InputError("edge '" + x.id + "' has unknown endpoint");
    if (!edge_ids.insert(x.id).second)
      throw InputError("duplicate edge id '" + x.id + "'");
  }
}

inline bool is_acyclic(const Graph& e) {
  check_graph(e);
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  auto visit = [&](auto&& self, const std::string& v) -> bool {
    state[v] = 1;
    for (const Edge& x : e.edges) {
      if (x.source != v) continue;
      if (state[x.target] == 1) return false;
      if (state[x.target] == 0 && !self(self, x.target)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (const auto& v : e.vertices)
    if (state[v] == 0 && !visit(visit, v)) return false;
  return true;
}

struct BoundaryPath {
  std::string label;  // vertex name for length 0, else edge ids joined by '.'
  std::string start;
  std::string sink;
  std::vector<std::string> vertices;  // visited in order
};

// Every finite path ending at a sink, grouped by sink in vertex order; within
// a sink, by length then label.
inline std::vector<BoundaryPath> boundary_paths(const Graph& e) {
  if (!is_acyclic(e)) throw InputError("graph has a cycle");
  std::vector<BoundaryPath> out;
  for (const auto& w : e.vertices) {
    if (!e.is_sink(w)) continue;
    std::vector<BoundaryPath> into{{w, w, w, {w}}};
    for (std::size_t i = 0; i < into.size(); ++i) {
      for (const Edge& x : e.edges) {
        if (x.target != into[i].start) continue;
        BoundaryPath p = into[i];
        p.label = p.vertices.size() == 1 ? x.id : x.id + "." + p.label;
        p.start = x.source;
        p.vertices.insert(p.vertices.begin(), x.source);
        into.push_back(std::move(p));
      }
    }
    std::stable_sort(into.begin(), into.end(),
                     [](const BoundaryPath& a, const BoundaryPath& b) {
                       if (a.vertices.size() != b.vertices.size())
                         return a.vertices.size() < b.vertices.size();
                       return a.label < b.label;
                     });
    out.insert(out.end(), into.begin(), into.end());
  }
  return out;
}

// Tail-equivalence groupoid on boundary paths: paths are equivalent exactly
// when they end at the same sink.
inline FiniteGroupoid acyclic_graph_groupoid(const Graph& e) {
  auto paths = boundary_paths(e);
  std::vector<std::string> ids;
  std::map<std::string, std::vector<std::size_t>> by_sink;
  std::vector<std::string> sink_order;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    ids.push_back(paths[i].label);
    if (!by_sink.count(paths[i].sink)) sink_order.push_back(paths[i].sink);
    by_sink[paths[i].sink].push_back(i);
  }
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& w : sink_order) blocks.push_back(by_sink[w]);
  return equivalence_groupoid(std::move(ids), blocks);
}

inline bool is_hereditary(const Graph& e, const std::set<std::string>& h) {
  for (const Edge& x : e.edges)
    if (h.count(x.source) && !h.count(x.target)) return false;
  return true;
}

inline bool is_saturated(const Graph& e, const std::set<std::string>& h) {
  for (const auto& v : e.vertices) {
    if (h.count(v) || e.is_sink(v)) continue;
    bool all_in = std::all_of(e.edges.begin(), e.edges.end(), [&](const Edge& x) {
      return x.source != v || h.count(x.target);
    });
    if (all_in) return false;
  }
  return true;
}

// E \ H: drop the vertices of H and every edge touching them.
inline Graph remove_vertices(const Graph& e, const std::set<std::string>& h) {
  Graph out;
  for (const auto& v : e.vertices)
    if (!h.count(v)) out.vertices.push_back(v);
  for (const Edge& x : e.edges)
    if (!h.count(x.source) && !h.count(x.target)) out.edges.push_back(x);
  return out;
}

// Indices (into boundary_paths order) of paths visiting a vertex of H.
inline IndexSet paths_through(const Graph& e, const std::set<std::string>& h) {
  auto paths = boundary_paths(e);
  IndexSet out;
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (std::any_of(paths[i].vertices.begin(), paths[i].vertices.end(),
                    [&](const std::string& v) { return h.count(v) > 0; }))
      out.push_back(i);
  return out;
}

// Seeded random acyclic graph: edges only go from lower to higher vertex
// index. Kept small so each sink has few incoming paths.
inline Graph random_acyclic_graph(std::size_t vertices, std::size_t max_edges,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph e;
  for (std::size_t v = 0; v < vertices; ++v) e.vertices.push_back("v" + std::to_string(v));
  std::set<std::pair<std::size_t, std::size_t>> used;
  for (std::size_t k = 0; k < max_edges && vertices > 1; ++k) {
    std::size_t a = rng() % vertices, b = rng() % vertices;
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (!used.insert({a, b}).second) continue;
    e.edges.push_back({"e" + std::to_string(e.edges.size()), e.vertices[a],
                       e.vertices[b]});
  }
  return e;
}

}  // namespace weylkit

#endif  // WEYLKIT_GENERATORS_HPP_
