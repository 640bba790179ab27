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

// JSON documents for groupoids, elements, morphisms and graphs, and DOT
// rendering. Serialization is canonical: sorted keys, reduced fractions.

#ifndef WEYLKIT_IO_HPP_
#define WEYLKIT_IO_HPP_

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "weylkit/algebra.hpp"
#include "weylkit/category.hpp"
#include "weylkit/generators.hpp"
#include "weylkit/morphism.hpp"
#include "weylkit/pair.hpp"
#include "weylkit/report.hpp"

namespace weylkit {

using Json = nlohmann::json;

inline constexpr const char* kGroupoidSchema = "weylkit/groupoid@1";
inline constexpr const char* kMorphismSchema = "weylkit/morphism@1";
inline constexpr const char* kGraphSchema = "weylkit/graph@1";

inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw InputError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline void expect_schema(const Json& j, const char* schema) {
  if (string_field(j, "schema") != schema)
    throw InputError(std::string("expected schema ") + schema);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Scalars and elements.

// Components are JSON integers, or decimal strings beyond 64 bits.
inline Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

inline Json rational_to_json(const Rational& q) {
  return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

inline Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("rational must be [num, den]");
  auto integer = [](const Json& x) {
    if (x.is_number_integer()) return Integer(std::to_string(x.get<long long>()));
    if (x.is_string()) {
      Integer z;
      if (z.set_str(x.get<std::string>(), 10) != 0)
        throw InputError("bad integer '" + x.get<std::string>() + "'");
      return z;
    }
    throw InputError("rational components must be integers");
  };
  Integer num = integer(j[0]), den = integer(j[1]);
  if (den == 0) throw InputError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Json element_to_json(const AlgebraElement& f) {
  Json out = Json::array();
  for (std::size_t a : f.support())
    out.push_back({{"arrow", f.g().arrow(a).id},
                   {"re", rational_to_json(f[a].re())},
                   {"im", rational_to_json(f[a].im())}});
  return out;
}

inline AlgebraElement element_from_json(const Json& j, const GroupoidPtr& g) {
  if (!j.is_array()) throw InputError("element must be a list of terms");
  AlgebraElement f(g);
  for (const Json& term : j) {
    std::size_t a = g->arrow_index(detail::string_field(term, "arrow"));
    Rational re = term.contains("re") ? rational_from_json(term.at("re")) : Rational(0);
    Rational im = term.contains("im") ? rational_from_json(term.at("im")) : Rational(0);
    f[a] += GaussianRational(re, im);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Groupoids.

struct GroupoidDocument {
  GroupoidPtr groupoid;
  std::map<std::string, AlgebraElement> elements;
};

// Composition tables are written only when they cannot be recovered from
// endpoints, i.e. for groupoids with nontrivial isotropy.
inline Json groupoid_to_json(const FiniteGroupoid& g,
                             const std::map<std::string, AlgebraElement>& elements = {}) {
  Json j;
  j["schema"] = kGroupoidSchema;
  j["units"] = g.unit_ids();
  Json arrows = Json::array();
  for (const Arrow& a : g.arrows())
    arrows.push_back({{"id", a.id}, {"src", g.unit_id(a.source)}, {"dst", g.unit_id(a.target)}});
  j["arrows"] = std::move(arrows);
  if (!is_principal(g)) {
    Json table = Json::array();
    for (std::size_t b = 0; b < g.arrow_count(); ++b)
      for (std::size_t a = 0; a < g.arrow_count(); ++a)
        if (auto c = g.compose(b, a))
          table.push_back({{"left", g.arrow(b).id},
                           {"right", g.arrow(a).id},
                           {"result", g.arrow(*c).id}});
    j["composition"] = std::move(table);
  }
  if (!elements.empty()) {
    Json els = Json::object();
    for (const auto& [name, f] : elements) els[name] = element_to_json(f);
    j["elements"] = std::move(els);
  }
  return j;
}

// With `validate`, axiom violations are rejected as input errors.
inline GroupoidDocument groupoid_document_from_json(const Json& j, bool validate = true) {
  detail::expect_schema(j, kGroupoidSchema);
  const Json& units_j = detail::field(j, "units");
  const Json& arrows_j = detail::field(j, "arrows");
  if (!units_j.is_array() || !arrows_j.is_array())
    throw InputError("units and arrows must be lists");
  std::vector<std::string> units;
  std::map<std::string, std::size_t> unit_index;
  for (const Json& u : units_j) {
    if (!u.is_string()) throw InputError("unit ids must be strings");
    if (!unit_index.emplace(u.get<std::string>(), units.size()).second)
      throw InputError("duplicate unit '" + u.get<std::string>() + "'");
    units.push_back(u.get<std::string>());
  }
  auto unit_of = [&](const std::string& id) {
    auto it = unit_index.find(id);
    if (it == unit_index.end()) throw InputError("unknown unit '" + id + "'");
    return it->second;
  };
  std::vector<Arrow> arrows;
  std::map<std::string, std::size_t> arrow_index;
  for (const Json& a : arrows_j) {
    Arrow x{detail::string_field(a, "id"), unit_of(detail::string_field(a, "src")),
            unit_of(detail::string_field(a, "dst"))};
    if (!arrow_index.emplace(x.id, arrows.size()).second)
      throw InputError("duplicate arrow '" + x.id + "'");
    arrows.push_back(std::move(x));
  }
  const std::size_t n = arrows.size();
  std::vector<std::size_t> compose(n * n, FiniteGroupoid::kUndefined);
  std::vector<std::size_t> unit_arrows(units.size(), FiniteGroupoid::kUndefined);
  std::vector<std::size_t> inverse(n, FiniteGroupoid::kUndefined);
  if (j.contains("composition")) {
    auto arrow_of = [&](const std::string& id) {
      auto it = arrow_index.find(id);
      if (it == arrow_index.end()) throw InputError("unknown arrow '" + id + "'");
      return it->second;
    };
    for (const Json& e : j.at("composition")) {
      std::size_t b = arrow_of(detail::string_field(e, "left"));
      std::size_t a = arrow_of(detail::string_field(e, "right"));
      std::size_t c = arrow_of(detail::string_field(e, "result"));
      if (arrows[b].source != arrows[a].target)
        throw InputError("composition entry for non-composable arrows");
      compose[b * n + a] = c;
    }
    // Identities: arrows e at u with e∘a = a for every a into u.
    for (std::size_t e = 0; e < n; ++e) {
      if (arrows[e].source != arrows[e].target) continue;
      bool identity = true;
      for (std::size_t a = 0; a < n && identity; ++a) {
        if (arrows[a].target == arrows[e].source && compose[e * n + a] != a) identity = false;
        if (arrows[a].source == arrows[e].source && compose[a * n + e] != a) identity = false;
      }
      if (identity) unit_arrows[arrows[e].source] = e;
    }
  } else {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_ends;
    for (std::size_t a = 0; a < n; ++a)
      if (!by_ends.emplace(std::pair{arrows[a].target, arrows[a].source}, a).second)
        throw InputError("two arrows share endpoints; a composition table is required");
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a) {
        if (arrows[b].source != arrows[a].target) continue;
        auto it = by_ends.find({arrows[b].target, arrows[a].source});
        if (it == by_ends.end())
          throw InputError("composite of " + arrows[b].id + " and " + arrows[a].id +
                           " is missing");
        compose[b * n + a] = it->second;
      }
    for (std::size_t u = 0; u < units.size(); ++u) {
      auto it = by_ends.find({u, u});
      if (it != by_ends.end()) unit_arrows[u] = it->second;
    }
  }
  for (std::size_t u = 0; u < units.size(); ++u)
    if (unit_arrows[u] == FiniteGroupoid::kUndefined)
      throw InputError("unit '" + units[u] + "' has no identity arrow");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (arrows[b].source == arrows[a].target && arrows[b].target == arrows[a].source &&
          compose[b * n + a] == unit_arrows[arrows[a].source])
        inverse[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (inverse[a] == FiniteGroupoid::kUndefined)
      throw InputError("arrow '" + arrows[a].id + "' has no inverse");
  GroupoidDocument doc;
  doc.groupoid = share(FiniteGroupoid(std::move(units), std::move(arrows),
                                      std::move(unit_arrows), std::move(compose),
                                      std::move(inverse)));
  if (validate) {
    auto report = validate_groupoid(*doc.groupoid);
    if (!report.ok()) throw InputError("invalid groupoid: " + report.violations.front());
  }
  if (j.contains("elements")) {
    for (const auto& [name, e] : j.at("elements").items())
      doc.elements.emplace(name, element_from_json(e, doc.groupoid));
  }
  return doc;
}

inline GroupoidPtr groupoid_from_json(const Json& j) {
  return groupoid_document_from_json(j).groupoid;
}

// ---------------------------------------------------------------------------
// Graphs.

inline Json graph_to_json(const Graph& e) {
  Json j;
  j["schema"] = kGraphSchema;
  j["vertices"] = e.vertices;
  Json edges = Json::array();
  for (const Edge& x : e.edges)
    edges.push_back({{"id", x.id}, {"src", x.source}, {"dst", x.target}});
  j["edges"] = std::move(edges);
  return j;
}

inline Graph graph_from_json(const Json& j) {
  detail::expect_schema(j, kGraphSchema);
  Graph e;
  for (const Json& v : detail::field(j, "vertices")) {
    if (!v.is_string()) throw InputError("vertex ids must be strings");
    e.vertices.push_back(v.get<std::string>());
  }
  for (const Json& x : detail::field(j, "edges"))
    e.edges.push_back({detail::string_field(x, "id"), detail::string_field(x, "src"),
                       detail::string_field(x, "dst")});
  check_graph(e);
  if (!is_acyclic(e)) throw InputError("graph has a cycle");
  return e;
}

// ---------------------------------------------------------------------------
// Morphisms.

inline Json morphism_to_json(const PairMorphism& phi) {
  Json j;
  j["schema"] = kMorphismSchema;
  j["source"] = groupoid_to_json(phi.source.g());
  j["target"] = groupoid_to_json(phi.target.g());
  Json images = Json::array();
  for (std::size_t a = 0; a < phi.basis_images.size(); ++a)
    images.push_back({{"arrow", phi.source.g().arrow(a).id},
                      {"element", element_to_json(phi.basis_images[a])}});
  j["images"] = std::move(images);
  return j;
}

// Either explicit images or a generator shorthand {kind, payload}:
//   embedding {sub, ambient}; iso {source, target, units?} (units maps source
//   unit ids to target unit ids; searched when absent); quotient {source, set};
//   tensor {left, right} with morphism documents.
inline PairMorphism morphism_from_json(const Json& j) {
  detail::expect_schema(j, kMorphismSchema);
  if (j.contains("kind")) {
    std::string kind = detail::string_field(j, "kind");
    const Json& p = detail::field(j, "payload");
    if (kind == "embedding")
      return embedding_morphism(make_pair(groupoid_from_json(detail::field(p, "sub"))),
                                make_pair(groupoid_from_json(detail::field(p, "ambient"))));
    if (kind == "iso") {
      DiagonalPair s = make_pair(groupoid_from_json(detail::field(p, "source")));
      DiagonalPair t = make_pair(groupoid_from_json(detail::field(p, "target")));
      std::optional<GroupoidMap> phi;
      if (p.contains("units")) {
        if (!is_principal(s.g()))
          throw InputError("unit maps determine arrows only for principal groupoids");
        GroupoidMap m;
        m.unit_map.resize(s.g().unit_count());
        for (std::size_t u = 0; u < s.g().unit_count(); ++u)
          m.unit_map[u] = t.g().unit_index(
              detail::string_field(p.at("units"), s.g().unit_id(u).c_str()));
        for (std::size_t a = 0; a < s.g().arrow_count(); ++a) {
          std::optional<std::size_t> b;
          for (std::size_t c = 0; c < t.g().arrow_count() && !b; ++c)
            if (t.g().source(c) == m.unit_map[s.g().source(a)] &&
                t.g().target(c) == m.unit_map[s.g().target(a)])
              b = c;
          if (!b) throw InputError("unit map does not extend to arrows");
          m.arrow_map.push_back(*b);
        }
        phi = std::move(m);
      } else {
        phi = find_isomorphism(s.g(), t.g());
        if (!phi) throw InputError("groupoids are not isomorphic");
      }
      return iso_morphism(s, t, *phi);
    }
    if (kind == "quotient") {
      DiagonalPair s = make_pair(groupoid_from_json(detail::field(p, "source")));
      IndexSet u;
      for (const Json& x : detail::field(p, "set")) {
        if (!x.is_string()) throw InputError("unit ids must be strings");
        u.push_back(s.g().unit_index(x.get<std::string>()));
      }
      return quotient_morphism(s, normalize_set(u));
    }
    if (kind == "tensor")
      return tensor_morphism(morphism_from_json(detail::field(p, "left")),
                             morphism_from_json(detail::field(p, "right")));
    throw InputError("unknown morphism kind '" + kind + "'");
  }
  DiagonalPair s = make_pair(groupoid_from_json(detail::field(j, "source")));
  DiagonalPair t = make_pair(groupoid_from_json(detail::field(j, "target")));
  std::vector<std::optional<AlgebraElement>> images(s.g().arrow_count());
  for (const Json& x : detail::field(j, "images")) {
    std::size_t a = s.g().arrow_index(detail::string_field(x, "arrow"));
    if (images[a]) throw InputError("arrow '" + s.g().arrow(a).id + "' has two images");
    images[a] = element_from_json(detail::field(x, "element"), t.groupoid);
  }
  std::vector<AlgebraElement> out;
  for (std::size_t a = 0; a < images.size(); ++a) {
    if (!images[a]) throw InputError("arrow '" + s.g().arrow(a).id + "' has no image");
    out.push_back(std::move(*images[a]));
  }
  return make_morphism(s, t, std::move(out));
}

// ---------------------------------------------------------------------------
// Reports.

inline Json report_to_json(const Report& r) {
  Json out = Json::array();
  for (const LawCheck& c : r.checks()) {
    Json x = {{"law", c.law}, {"fixture", c.fixture}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed && !c.counterexample.empty()) x["counterexample"] = c.counterexample;
    out.push_back(std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------------------
// DOT.

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string dot_quote(const std::string& s) { return "\"" + dot_escape(s) + "\""; }

// Units as nodes, non-unit arrows as labeled edges. `annotations` (optional,
// one per arrow) are appended to edge labels.
inline std::string to_dot(const FiniteGroupoid& g, const std::string& name,
                          const std::vector<std::string>& annotations = {}) {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n";
  os << "  node [shape=circle];\n";
  for (const auto& u : g.unit_ids()) os << "  " << dot_quote(u) << ";\n";
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    if (g.is_unit_arrow(a)) continue;
    std::string label = dot_escape(g.arrow(a).id);
    if (!annotations.empty()) label += "\\n" + dot_escape(annotations.at(a));
    os << "  " << dot_quote(g.unit_id(g.source(a))) << " -> "
       << dot_quote(g.unit_id(g.target(a))) << " [label=\"" << label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// The Weyl groupoid, each germ annotated with its witness normalizer.
inline std::string weyl_to_dot(const DiagonalPair& p, const std::string& name) {
  const auto& w = weyl_groupoid(p);
  std::vector<std::string> notes;
  for (const auto& n : w.witnesses) notes.push_back("w=" + n.to_string());
  return to_dot(*w.groupoid, name, notes);
}

}  // namespace weylkit

#endif  // WEYLKIT_IO_HPP_
