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

// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic only.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "weylkit/cli.hpp"
#include "weylkit/weylkit.hpp"

namespace weylkit {
namespace {

using oracle::g3;
using oracle::r;
using oracle::t;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

std::vector<GroupoidPtr> SmallPrincipalFixtures() {
  std::vector<GroupoidPtr> out;
  for (std::size_t n = 1; n <= 5; ++n) {
    out.push_back(r(n));
    out.push_back(t(n));
    out.push_back(share(cyclic_transformation(n)));
  }
  out.push_back(g3());
  out.push_back(share(disjoint_union(trivial(1), trivial(1))));
  out.push_back(share(disjoint_union(full_relation(2), full_relation(2))));
  out.push_back(share(disjoint_union(full_relation(3), full_relation(2))));
  out.push_back(share(disjoint_union(*g3(), trivial(2))));
  out.push_back(share(acyclic_graph_groupoid(oracle::two_sink_graph())));
  out.push_back(share(acyclic_graph_groupoid(
      Graph{{"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}, {"z", "a", "c"}}})));
  for (std::uint64_t seed = 1; seed <= 25; ++seed)
    out.push_back(share(random_equivalence(1 + seed % 5, seed)));
  return out;
}

std::vector<GroupoidPtr> IdealFixtures() {
  std::vector<GroupoidPtr> out{r(2), r(3), t(2), t(3), g3(),
                               share(disjoint_union(full_relation(2), full_relation(2))),
                               share(disjoint_union(*g3(), trivial(1))),
                               share(acyclic_graph_groupoid(oracle::two_sink_graph()))};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) out.push_back(share(random_equivalence(5, seed)));
  return out;
}

AlgebraElement RandomMonomialNormalizer(const GroupoidPtr& g, std::mt19937_64& rng) {
  AlgebraElement n(g);
  std::set<std::size_t> src, dst;
  for (std::size_t k = 0; k < 2 * g->arrow_count(); ++k) {
    std::size_t a = rng() % g->arrow_count();
    if (src.count(g->source(a)) || dst.count(g->target(a))) continue;
    src.insert(g->source(a));
    dst.insert(g->target(a));
    n[a] = oracle::random_nonzero(rng);
  }
  return n;
}

PairMorphism RandomInner(const DiagonalPair& p, std::mt19937_64& rng) {
  Vector phases;
  for (std::size_t u = 0; u < p.g().unit_count(); ++u) phases.push_back(oracle::random_phase(rng));
  return inner_diagonal_automorphism(p, phases);
}

Outcome Reconstruction() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& g : SmallPrincipalFixtures()) {
    DiagonalPair p = make_pair(g);
    const auto& w = weyl_groupoid(p);
    std::string name = std::to_string(g->unit_count()) + " units, " +
                       std::to_string(g->arrow_count()) + " arrows";
    o.require(w.canonical_is_isomorphism, "canonical map flag on " + name);
    o.require(is_groupoid_isomorphism(*w.groupoid, *g, w.canonical_map()),
              "canonical map is not an isomorphism on " + name);
    o.require(oracle::principal_isomorphism(*w.groupoid, *g).has_value(),
              "permutation oracle disagrees on " + name);
    ++count;
  }
  o.detail = o.passed ? std::to_string(count) + " fixtures" : o.detail;
  return o;
}

Outcome GermCriterion() {
  Outcome o;
  std::mt19937_64 rng(2);
  std::vector<GroupoidPtr> gs{r(2), r(3), g3(), share(random_equivalence(5, 3)),
                              share(random_equivalence(4, 9))};
  std::size_t instances = 0, equal = 0;
  while (instances < 220) {
    const auto& g = gs[instances % gs.size()];
    DiagonalPair p = make_pair(g);
    auto n = RandomMonomialNormalizer(g, rng);
    auto dom = alpha(p, n).domain;
    if (dom.empty()) continue;
    std::size_t x = dom[rng() % dom.size()];
    auto m = n;
    if (rng() % 2) {
      for (std::size_t a = 0; a < g->arrow_count(); ++a)
        if (g->source(a) != x && !m[a].is_zero()) m[a] = oracle::random_nonzero(rng);
    } else {
      m = RandomMonomialNormalizer(g, rng);
      if (!contains(alpha(p, m).domain, x)) continue;
    }
    auto v = germ_equal_strict(p, n, m, x, rng(), 20);
    auto mn = oracle::to_matrix(n), mm = oracle::to_matrix(m);
    bool columns = true;
    for (std::size_t y = 0; y < g->unit_count(); ++y)
      if (mn[y][x] != mm[y][x]) columns = false;
    o.require(v.agree(), "column, delta and random witnesses disagree");
    o.require(v.equal() == columns, "germ relation differs from matrix column oracle");
    equal += columns;
    ++instances;
  }
  if (o.passed)
    o.detail = std::to_string(instances) + " instances, " + std::to_string(equal) + " equal";
  return o;
}

Outcome NormalizerCharacterization() {
  Outcome o;
  std::mt19937_64 rng(3);
  std::size_t supports = 0;
  for (const auto& g : {r(2), r(3), g3()}) {
    DiagonalPair p = make_pair(g);
    const std::size_t n = g->arrow_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      AlgebraElement f(g);
      IndexSet s;
      for (std::size_t a = 0; a < n; ++a)
        if ((mask >> a) & 1) {
          f[a] = oracle::random_nonzero(rng);
          s.push_back(a);
        }
      o.require(is_normalizer(p, f) == oracle::injective_ends(*g, s),
                "normalizer test disagrees with bisection test");
      ++supports;
    }
  }
  if (o.passed) o.detail = std::to_string(supports) + " supports";
  return o;
}

Outcome IdealGeometry() {
  Outcome o;
  std::size_t sets = 0;
  for (const auto& g : IdealFixtures()) {
    DiagonalPair p = make_pair(g);
    auto inv = invariant_subsets(*g);
    o.require(inv.size() == (std::size_t{1} << oracle::orbit_count(*g)),
              "ideal count differs from 2^#orbits");
    o.require(inv.size() == oracle::invariant_sets(*g).size(), "invariant set enumeration");
    for (const IndexSet& u : inv) {
      Report rep = check_geom_ideals(p, u);
      if (!rep.ok()) o.require(false, rep.failures().front().law + " [" + set_string(*g, u) + "]");
      ++sets;
    }
  }
  if (o.passed) o.detail = std::to_string(sets) + " invariant sets";
  return o;
}

Outcome QuotientTransfer() {
  Outcome o;
  std::size_t quotients = 0;
  for (const auto& g : IdealFixtures()) {
    DiagonalPair p = make_pair(g);
    for (const IndexSet& u : invariant_subsets(*g)) {
      if (u.size() == g->unit_count()) continue;
      QuotientPair qp = quotient_pair(p, u);
      o.require(qp.pair.valid(), "quotient pair is not a diagonal pair");
      Report rep = check_transfer_properties(p, u);
      if (!rep.ok()) o.require(false, rep.failures().front().law);
      if (u.empty())
        o.require(qp.q.source.g().arrow_count() == qp.pair.g().arrow_count() &&
                      check_injective(qp.q).injective,
                  "quotient by the empty set is not an isomorphism");
      ++quotients;
    }
  }
  if (o.passed) o.detail = std::to_string(quotients) + " quotients";
  return o;
}

PairMorphism UnitPermutation(const DiagonalPair& p, const std::vector<std::size_t>& perm) {
  const FiniteGroupoid& g = p.g();
  GroupoidMap m;
  m.unit_map = perm;
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    std::size_t s = perm[g.source(a)], tt = perm[g.target(a)];
    for (std::size_t b = 0; b < g.arrow_count(); ++b)
      if (g.source(b) == s && g.target(b) == tt) m.arrow_map.push_back(b);
  }
  return iso_morphism(p, p, m);
}

std::vector<PairMorphism> MorphismFamily() {
  std::vector<PairMorphism> out;
  std::mt19937_64 rng(6);
  std::vector<GroupoidPtr> objects{r(1), r(2), r(3), t(2), t(3), g3(),
                                   share(random_equivalence(4, 2))};
  for (const auto& g : objects) {
    DiagonalPair p = make_pair(g);
    out.push_back(identity_morphism(p));
    out.push_back(embedding_morphism(make_pair(unit_space_groupoid(*g)), p));
    out.push_back(RandomInner(p, rng));
  }
  out.push_back(embedding_morphism(make_pair(g3()), make_pair(r(3))));
  out.push_back(embedding_morphism(make_pair(t(3)), make_pair(g3())));
  out.push_back(UnitPermutation(make_pair(r(2)), {1, 0}));
  out.push_back(UnitPermutation(make_pair(r(3)), {2, 0, 1}));
  out.push_back(UnitPermutation(make_pair(t(3)), {1, 2, 0}));
  for (std::size_t m = 2; m <= 4; ++m) {
    DiagonalPair c = make_pair(cyclic_transformation(m)), f = make_pair(r(m));
    out.push_back(iso_morphism(c, f, *find_isomorphism(c.g(), f.g(), 2 * m * m)));
  }
  PairMorphism e = embedding_morphism(make_pair(t(2)), make_pair(r(2)));
  out.push_back(tensor_morphism(e, identity_morphism(make_pair(r(2)))));
  out.push_back(tensor_morphism(e, e));
  out.push_back(tensor_morphism(UnitPermutation(make_pair(r(2)), {1, 0}), e));
  out.push_back(tensor_morphism(identity_morphism(make_pair(g3())), e));
  return out;
}

Outcome PartialMorphismTheorem() {
  Outcome o;
  auto family = MorphismFamily();
  for (const PairMorphism& phi : family) {
    Report rep = check_partial_morphism_theorem(phi);
    if (!rep.ok()) o.require(false, rep.failures().front().law);
  }
  o.require(family.size() >= 30, "fewer than 30 morphisms");
  MorphismReport c = validate_morphism(compression_morphism());
  o.require(c.d_flag && c.e_flag && !c.n_flag() && !c.ok(),
            "compression fixture is not rejected at condition (N)");
  if (o.passed) o.detail = std::to_string(family.size()) + " morphisms; compression fails (N)";
  return o;
}

Outcome CategoryLaws() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::vector<GroupoidPtr> objects{r(3), t(3), g3(), share(random_equivalence(3, 5)),
                                   share(random_equivalence(3, 6))};
  std::size_t triples = 0;
  for (int c = 0; c < 60; ++c) {
    auto pick = [&] { return objects[rng() % objects.size()]; };
    GroupoidPtr a = pick(), b = pick(), cc = pick(), d = pick();
    auto t1 = random_triple(a, b, rng), t2 = random_triple(b, cc, rng),
         t3 = random_triple(cc, d, rng);
    Report rep = check_category_axioms(t1, t2, t3);
    if (!rep.ok()) o.require(false, rep.failures().front().law);
    auto inv = partial_inverse(t1);
    bool full = t1.k.size() == t1.domain->arrow_count() &&
                t1.rho.size() == t1.codomain->arrow_count();
    o.require(inv.has_value() == full, "isomorphism characterization");
    if (inv) o.require(is_partial_isomorphism(t1, *inv), "inverse does not invert");
    ++triples;
  }
  o.require(!partial_inverse(weyl_morphism(embedding_morphism(make_pair(t(2)), make_pair(r(2))))),
            "proper embedding triple is invertible");

  std::size_t functor_chains = 0;
  for (const auto& g : {r(2), r(3), g3(), t(3), share(random_equivalence(4, 8))}) {
    DiagonalPair p = make_pair(g);
    DiagonalPair units = make_pair(unit_space_groupoid(*g));
    PairMorphism embed = embedding_morphism(units, p);
    for (int k = 0; k < 2; ++k) {
      PairMorphism inner = RandomInner(p, rng), inner2 = RandomInner(p, rng);
      for (const auto& [phi, psi] : {std::pair{embed, inner}, std::pair{inner, inner2},
                                     std::pair{identity_morphism(units), embed}}) {
        Report rep = check_functoriality(phi, psi);
        rep.merge(check_composition_closure(phi, psi));
        if (!rep.ok()) o.require(false, rep.failures().front().law);
        ++functor_chains;
      }
    }
  }
  Report nested = check_functoriality(embedding_morphism(make_pair(t(3)), make_pair(g3())),
                                      embedding_morphism(make_pair(g3()), make_pair(r(3))));
  o.require(nested.ok(), "nested embeddings");
  ++functor_chains;

  std::size_t posets = 0;
  for (const auto& g : IdealFixtures()) {
    if (orbits(*g).size() > 3) continue;
    Report rep = check_poset_functor(make_pair(g));
    if (!rep.ok()) o.require(false, rep.failures().front().law);
    ++posets;
  }
  o.require(triples >= 50 && functor_chains >= 20, "too few chains");
  if (o.passed)
    o.detail = std::to_string(triples) + " triple chains, " + std::to_string(functor_chains) +
               " functor chains, " + std::to_string(posets) + " posets";
  return o;
}

Outcome TensorProducts() {
  Outcome o;
  std::vector<GroupoidPtr> gs{r(1), r(2), t(2), g3(), r(3), t(3)};
  std::size_t pairs = 0;
  for (const auto& a : gs)
    for (const auto& b : gs) {
      if (a->arrow_count() * b->arrow_count() > 64) continue;
      Report rep = check_product_weyl(make_pair(a), make_pair(b));
      if (!rep.ok()) o.require(false, rep.failures().front().law);
      ++pairs;
    }
  DiagonalPair r2 = make_pair(r(2)), t2 = make_pair(t(2)), p3 = make_pair(g3());
  Report mono = check_monoidal(r2, t2, p3, r2);
  if (!mono.ok()) o.require(false, mono.failures().front().law);
  if (o.passed) o.detail = std::to_string(pairs) + " tensor pairs; coherence on (R2, T2, G3)";
  return o;
}

Outcome DynamicalComparison() {
  Outcome o;
  std::size_t fixtures = 0;
  std::vector<GroupoidPtr> gs = SmallPrincipalFixtures();
  gs.push_back(r(6));
  gs.push_back(share(disjoint_union(full_relation(3), full_relation(3))));
  gs.push_back(share(random_equivalence(6, 11)));
  for (const auto& g : gs) {
    if (g->unit_count() > 6) continue;
    Report rep = check_dynamical_comparison(make_pair(g));
    if (!rep.ok()) o.require(false, rep.failures().front().law);
    ++fixtures;
  }
  if (o.passed) o.detail = std::to_string(fixtures) + " fixtures with their quotients";
  return o;
}

Outcome Faithfulness() {
  Outcome o;
  for (std::size_t m = 1; m <= 4; ++m) {
    Report rep = check_faithful_iso(make_pair(cyclic_transformation(m)), make_pair(r(m)));
    if (!rep.ok()) o.require(false, rep.failures().front().law);
  }
  Report g3iso = check_faithful_iso(make_pair(g3()),
                                    make_pair(disjoint_union(trivial(1), full_relation(2))));
  o.require(g3iso.ok(), "G3 relabelling");
  Report d1 = check_weyl_distinguishes(make_pair(r(2)), make_pair(t(4)));
  Report d2 = check_weyl_distinguishes(make_pair(r(3)), make_pair(g3()));
  o.require(d1.ok(), "R2 vs T4");
  o.require(d2.ok(), "R3 vs R2 + T1");
  o.require(!oracle::principal_isomorphism(full_relation(3), *g3()), "oracle R3 vs G3");
  if (o.passed) o.detail = "iso transfer on 5 pairs; 2 distinguished pairs";
  return o;
}

Outcome GraphExamples() {
  Outcome o;
  Report two = graph_quotient_check(oracle::two_sink_graph(), {"w1"});
  o.require(two.ok(), "two-sink graph");
  std::size_t graphs = 0, checks = 0;
  for (std::uint64_t seed = 1; graphs < 5 && seed < 100; ++seed) {
    Graph e = random_acyclic_graph(5, 6, seed);
    const std::size_t nv = e.vertices.size();
    std::size_t here = 0;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << nv); ++mask) {
      std::set<std::string> h;
      for (std::size_t i = 0; i < nv; ++i)
        if ((mask >> i) & 1) h.insert(e.vertices[i]);
      if (!is_hereditary(e, h) || !is_saturated(e, h)) continue;
      if (paths_through(e, h).size() == acyclic_graph_groupoid(e).unit_count()) continue;
      Report rep = graph_quotient_check(e, h);
      if (!rep.ok()) o.require(false, rep.failures().front().law + " seed " + std::to_string(seed));
      ++here;
    }
    if (here > 0) {
      ++graphs;
      checks += here;
    }
  }
  o.require(graphs == 5, "fewer than 5 graphs with proper hereditary saturated sets");
  for (std::size_t m = 1; m <= 6; ++m) {
    FiniteGroupoid c = cyclic_transformation(m);
    o.require(find_isomorphism(c, full_relation(m), 2 * m * m).has_value() &&
                  oracle::principal_isomorphism(c, full_relation(m)).has_value(),
              "cyclic transformation " + std::to_string(m));
  }
  if (o.passed) o.detail = std::to_string(graphs) + " random graphs, " + std::to_string(checks) +
                           " quotients; Z/m for m <= 6";
  return o;
}

Outcome CliContract() {
  Outcome o;
  namespace fs = std::filesystem;
  std::size_t docs = 0;
  for (const auto& entry : fs::directory_iterator(WEYLKIT_FIXTURES)) {
    std::string text = cli::read_file(entry.path().string());
    Json j = parse_json(text);
    std::string schema = j.value("schema", "");
    std::string again;
    if (schema == kGroupoidSchema) {
      again = canonical_dump(groupoid_to_json(*groupoid_from_json(j)));
    } else if (schema == kGraphSchema) {
      again = canonical_dump(graph_to_json(graph_from_json(j)));
    } else if (schema == kMorphismSchema && !j.contains("kind")) {
      again = canonical_dump(morphism_to_json(morphism_from_json(j)));
    } else {
      continue;
    }
    o.require(again == text, "round trip of " + entry.path().filename().string());
    ++docs;
  }
  auto run = [](std::vector<std::string> args, std::string* out = nullptr) {
    std::ostringstream os, es;
    int code = run_cli(args, os, es);
    if (out) *out = os.str();
    return code;
  };
  const std::string fx = WEYLKIT_FIXTURES;
  o.require(run({"validate", "--input", fx + "/r2.json"}) == kExitPass, "exit 0");
  o.require(run({"morphism-check", "--input", fx + "/compression.json"}) == kExitFail, "exit 1");
  o.require(run({"weyl", "--input", fx + "/missing.json"}) == kExitInput, "exit 2");
  std::string d1, d2;
  run({"dot", "--input", fx + "/g3.json", "--weyl", "--seed", "9"}, &d1);
  run({"dot", "--input", fx + "/g3.json", "--weyl", "--seed", "9"}, &d2);
  o.require(!d1.empty() && d1 == d2, "DOT output differs between runs");
  if (o.passed) o.detail = std::to_string(docs) + " documents round-trip; exit codes 0/1/2";
  return o;
}

}  // namespace
}  // namespace weylkit

int main() {
  using namespace weylkit;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"reconstruction roundtrip", Reconstruction},
      {"germ criterion", GermCriterion},
      {"normalizer characterization", NormalizerCharacterization},
      {"ideal geometry", IdealGeometry},
      {"quotient pairs and expectation transfer", QuotientTransfer},
      {"partial morphism theorem", PartialMorphismTheorem},
      {"category laws", CategoryLaws},
      {"tensor products", TensorProducts},
      {"dynamical comparison", DynamicalComparison},
      {"faithfulness", Faithfulness},
      {"graph and crossed-product examples", GraphExamples},
      {"cli", CliContract},
  };
  int failures = 0;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s (%.2fs): %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].name,
                secs, o.detail.c_str());
    failures += !o.passed;
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.2fs\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria), total);
  return failures == 0 ? 0 : 1;
}
