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

// The category of groupoids with partial morphisms, the Weyl functor into
// it, the poset functor of quotients, and the symmetric monoidal structure
// given by tensor products of pairs.

#ifndef WEYLKIT_CATEGORY_HPP_
#define WEYLKIT_CATEGORY_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/algebra.hpp"
#include "weylkit/morphism.hpp"
#include "weylkit/pair.hpp"
#include "weylkit/quotient.hpp"
#include "weylkit/report.hpp"
#include "weylkit/triple.hpp"

namespace weylkit {

// ---------------------------------------------------------------------------
// Partial morphisms.

inline PartialMorphismTriple identity_partial(const GroupoidPtr& g) {
  PartialMorphismTriple t;
  t.domain = g;
  t.codomain = g;
  for (std::size_t a = 0; a < g->arrow_count(); ++a) {
    t.k.push_back(a);
    t.rho[a] = a;
  }
  t.h = all_units(*g);
  return t;
}

// second ∘ first: K = {k in K1 : rho1(k) in K2}, rho = rho2 rho1, h = h2 h1.
inline PartialMorphismTriple compose_partial(const PartialMorphismTriple& second,
                                             const PartialMorphismTriple& first) {
  if (!same_groupoid(first.codomain, second.domain))
    throw InputError("partial morphisms are not composable");
  std::set<std::size_t> k2(second.k.begin(), second.k.end());
  PartialMorphismTriple t;
  t.domain = first.domain;
  t.codomain = second.codomain;
  for (std::size_t a : first.k) {
    std::size_t b = first.rho.at(a);
    if (!k2.count(b)) continue;
    t.k.push_back(a);
    t.rho[a] = second.rho.at(b);
  }
  for (std::size_t u : first.h) t.h.push_back(second.h.at(u));
  return t;
}

inline bool is_partial_isomorphism(const PartialMorphismTriple& t,
                                   const PartialMorphismTriple& inverse) {
  if (!same_groupoid(t.domain, inverse.codomain) ||
      !same_groupoid(t.codomain, inverse.domain))
    return false;
  return compose_partial(inverse, t) == identity_partial(t.domain) &&
         compose_partial(t, inverse) == identity_partial(t.codomain);
}

// The inverse triple when K is everything and rho is bijective.
inline std::optional<PartialMorphismTriple> partial_inverse(
    const PartialMorphismTriple& t) {
  if (t.k.size() != t.domain->arrow_count() ||
      t.codomain->arrow_count() != t.domain->arrow_count())
    return std::nullopt;
  PartialMorphismTriple inv;
  inv.domain = t.codomain;
  inv.codomain = t.domain;
  for (auto [a, b] : t.rho) inv.rho[b] = a;
  if (inv.rho.size() != t.rho.size()) return std::nullopt;
  for (auto [b, a] : inv.rho) inv.k.push_back(b);
  inv.h.assign(t.h.size(), 0);
  for (std::size_t u = 0; u < t.h.size(); ++u) inv.h[t.h[u]] = u;
  return inv;
}

// Random triple H -> G between principal groupoids on the same number of
// units: h is a random bijection, K a random wide subrelation of the arrows
// whose image under h exists in G.
inline PartialMorphismTriple random_triple(const GroupoidPtr& h_grp,
                                           const GroupoidPtr& g_grp,
                                           std::mt19937_64& rng) {
  const FiniteGroupoid& hg = *h_grp;
  const FiniteGroupoid& gg = *g_grp;
  if (hg.unit_count() != gg.unit_count() || !is_principal(hg) || !is_principal(gg))
    throw InputError("random triples need principal groupoids of equal size");
  const std::size_t n = hg.unit_count();
  PartialMorphismTriple t;
  t.domain = h_grp;
  t.codomain = g_grp;
  t.h = all_units(hg);
  std::shuffle(t.h.begin(), t.h.end(), rng);
  std::vector<std::size_t> color(n);
  const std::size_t colors = 1 + rng() % n;
  for (auto& c : color) c = rng() % colors;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> g_arrow;
  for (std::size_t b = 0; b < gg.arrow_count(); ++b)
    g_arrow[{gg.target(b), gg.source(b)}] = b;
  for (std::size_t a = 0; a < hg.arrow_count(); ++a) {
    std::size_t s = hg.source(a), r = hg.target(a);
    auto it = g_arrow.find({t.h[r], t.h[s]});
    if (it == g_arrow.end() || color[s] != color[r]) continue;
    t.k.push_back(a);
    t.rho[a] = it->second;
  }
  return t;
}

// Associativity and unit laws on one composable chain t3 ∘ t2 ∘ t1.
inline Report check_category_axioms(const PartialMorphismTriple& t1,
                                    const PartialMorphismTriple& t2,
                                    const PartialMorphismTriple& t3) {
  Report rep("partial chain");
  auto left = compose_partial(compose_partial(t3, t2), t1);
  auto right = compose_partial(t3, compose_partial(t2, t1));
  rep.check("associativity", left == right);
  bool units = true, valid = true;
  for (const auto* t : {&t1, &t2, &t3}) {
    units = units && compose_partial(identity_partial(t->codomain), *t) == *t &&
            compose_partial(*t, identity_partial(t->domain)) == *t;
    valid = valid && validate_triple(*t).empty();
  }
  rep.check("identity laws", units);
  rep.check("composites are partial morphisms",
            valid && validate_triple(compose_partial(t2, t1)).empty() &&
                validate_triple(left).empty());
  return rep;
}

// ---------------------------------------------------------------------------
// The Weyl functor.

inline GroupoidPtr weyl_object(const DiagonalPair& p) {
  return weyl_groupoid(p).groupoid;
}

// W(Phi): weyl(target) -> weyl(source).
inline PartialMorphismTriple weyl_morphism(const PairMorphism& phi,
                                           PartialMorphismOptions opts = {}) {
  return partial_morphism(phi, opts).triple;
}

// W(psi ∘ phi) = W(phi) ∘ W(psi).
inline Report check_functoriality(const PairMorphism& phi, const PairMorphism& psi) {
  Report rep("functor chain");
  PairMorphism composite = compose_morphisms(psi, phi);
  auto lhs = weyl_morphism(composite);
  auto rhs = compose_partial(weyl_morphism(phi), weyl_morphism(psi));
  rep.check("W(psi phi) = W(phi) W(psi)", lhs == rhs);
  rep.check("W(id) = id",
            weyl_morphism(identity_morphism(phi.source)) ==
                identity_partial(weyl_object(phi.source)));
  return rep;
}

// C_amp closure: (D)(E)(N) survive composition.
inline Report check_composition_closure(const PairMorphism& phi, const PairMorphism& psi) {
  Report rep("composition closure");
  auto a = validate_morphism(phi), b = validate_morphism(psi);
  auto c = validate_morphism(compose_morphisms(psi, phi));
  rep.check("unital *-homomorphism preserved",
            !(a.star_hom && a.unital && b.star_hom && b.unital) ||
                (c.star_hom && c.unital));
  rep.check("(D) preserved", !(a.d_flag && b.d_flag) || c.d_flag);
  rep.check("(E) preserved", !(a.e_flag && b.e_flag) || c.e_flag);
  rep.check("(N) preserved", !(a.n_flag() && b.n_flag()) || c.n_flag());
  rep.check("composite is a morphism", !(a.ok() && b.ok()) || c.ok());
  return rep;
}

// ---------------------------------------------------------------------------
// The poset functor of quotients.

struct PosetObject {
  IndexSet units;                     // the invariant set U
  std::optional<DiagonalPair> pair;   // absent for the zero algebra (U = all)
};

struct PosetArrow {
  std::size_t from;  // U
  std::size_t to;    // V, with U ⊆ V
  std::optional<PairMorphism> map;  // absent when V is all units
};

struct PosetFunctor {
  std::vector<PosetObject> objects;
  std::vector<PosetArrow> arrows;  // all U ⊆ V, identities included

  std::optional<std::size_t> arrow(std::size_t from, std::size_t to) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].from == from && arrows[i].to == to) return i;
    return std::nullopt;
  }
};

inline bool is_subset(const IndexSet& a, const IndexSet& b) {
  for (std::size_t x : a)
    if (!contains(b, x)) return false;
  return true;
}

inline PosetFunctor poset_functor_q(const DiagonalPair& p) {
  const FiniteGroupoid& g = p.g();
  if (!is_principal(g)) throw InputError("poset functor needs a principal groupoid");
  PosetFunctor f;
  for (const IndexSet& u : invariant_subsets(g)) {
    PosetObject o{u, std::nullopt};
    if (u.size() < g.unit_count()) o.pair = quotient_pair(p, u).pair;
    f.objects.push_back(std::move(o));
  }
  for (std::size_t i = 0; i < f.objects.size(); ++i)
    for (std::size_t j = 0; j < f.objects.size(); ++j) {
      const IndexSet& u = f.objects[i].units;
      const IndexSet& v = f.objects[j].units;
      if (!is_subset(u, v)) continue;
      PosetArrow a{i, j, std::nullopt};
      if (f.objects[j].pair) {
        const DiagonalPair& src = *f.objects[i].pair;
        IndexSet rel;
        for (std::size_t x : v)
          if (!contains(u, x)) rel.push_back(src.g().unit_index(g.unit_id(x)));
        a.map = quotient_morphism(src, normalize_set(rel));
      }
      f.arrows.push_back(std::move(a));
    }
  return f;
}

inline Report check_poset_functor(const DiagonalPair& p) {
  Report rep("poset functor");
  PosetFunctor f = poset_functor_q(p);
  bool identities = true, coherent = true, morphisms = true, injectivity = true;
  std::size_t chains = 0, zero_chains = 0;
  for (const PosetArrow& a : f.arrows) {
    if (!a.map) continue;
    if (a.from == a.to) identities = identities && *a.map == identity_morphism(*f.objects[a.from].pair);
    auto v = validate_morphism(*a.map);
    morphisms = morphisms && v.star_hom && v.unital && v.d_flag && v.e_flag &&
                v.n_containment;
    injectivity = injectivity && (v.n_injective == (a.from == a.to));
  }
  for (const PosetArrow& a : f.arrows)
    for (const PosetArrow& b : f.arrows) {
      if (a.to != b.from) continue;
      auto c = f.arrow(a.from, b.to);
      if (!c) {
        coherent = false;
        continue;
      }
      ++chains;
      if (!b.map) {
        ++zero_chains;  // every map into the zero algebra is zero
        continue;
      }
      coherent = coherent && *f.arrows[*c].map == compose_morphisms(*b.map, *a.map);
    }
  rep.check("Q(U ⊆ U) = id", identities);
  rep.check("Q(U ⊆ W) = Q(V ⊆ W) Q(U ⊆ V)", coherent,
            std::to_string(chains) + " chains");
  rep.check("Q arrows satisfy (D), (E) and normalizer containment", morphisms);
  rep.check("Q arrows are injective on normalizers exactly when U = V", injectivity);
  (void)zero_chains;
  return rep;
}

// ---------------------------------------------------------------------------
// Tensor products.

inline DiagonalPair tensor_pair(const DiagonalPair& p1, const DiagonalPair& p2) {
  return make_pair(product(p1.g(), p2.g()));
}

inline PairMorphism tensor_morphism(const PairMorphism& phi1, const PairMorphism& phi2,
                                    const DiagonalPair& source,
                                    const DiagonalPair& target) {
  const std::size_t n1 = phi1.source.g().arrow_count();
  const std::size_t n2 = phi2.source.g().arrow_count();
  if (source.g().arrow_count() != n1 * n2 ||
      target.g().arrow_count() !=
          phi1.target.g().arrow_count() * phi2.target.g().arrow_count())
    throw InputError("tensor pairs do not match the factors");
  std::vector<AlgebraElement> images;
  for (std::size_t a1 = 0; a1 < n1; ++a1)
    for (std::size_t a2 = 0; a2 < n2; ++a2)
      images.push_back(kronecker(phi1.basis_images[a1], phi2.basis_images[a2],
                                 target.groupoid));
  return make_morphism(source, target, std::move(images));
}

inline PairMorphism tensor_morphism(const PairMorphism& phi1, const PairMorphism& phi2) {
  return tensor_morphism(phi1, phi2, tensor_pair(phi1.source, phi2.source),
                         tensor_pair(phi1.target, phi2.target));
}

// weyl(P1 ⊗ P2) -> weyl(P1) × weyl(P2), [d_(a1,a2), (x1,x2)] -> ([d_a1,x1], [d_a2,x2]).
inline GroupoidMap product_weyl_map(const DiagonalPair& p1, const DiagonalPair& p2,
                                    const DiagonalPair& tensor) {
  const auto& w = weyl_groupoid(tensor);
  const auto& w1 = weyl_groupoid(p1);
  const auto& w2 = weyl_groupoid(p2);
  const std::size_t n2 = p2.g().arrow_count();
  const std::size_t m2 = w2.groupoid->arrow_count();
  GroupoidMap m;
  m.unit_map = all_units(*w.groupoid);
  for (std::size_t k = 0; k < w.canonical.size(); ++k) {
    std::size_t a = w.canonical[k];
    m.arrow_map.push_back(w1.germ_of_arrow(a / n2) * m2 + w2.germ_of_arrow(a % n2));
  }
  return m;
}

inline Report check_product_weyl(const DiagonalPair& p1, const DiagonalPair& p2,
                                 std::size_t cap = 128) {
  Report rep("tensor");
  DiagonalPair t = tensor_pair(p1, p2);
  rep.check("tensor pair is a diagonal pair", t.valid());
  if (!t.valid()) return rep;
  FiniteGroupoid prod = product(*weyl_object(p1), *weyl_object(p2));
  rep.check("canonical map weyl(P1 ⊗ P2) -> weyl(P1) × weyl(P2) is an isomorphism",
            is_groupoid_isomorphism(*weyl_object(t), prod, product_weyl_map(p1, p2, t)));
  rep.check("isomorphism search agrees",
            find_isomorphism(*weyl_object(t), prod, cap).has_value());
  bool kron = true;
  for (std::size_t a1 = 0; a1 < p1.g().arrow_count(); ++a1)
    for (std::size_t a2 = 0; a2 < p2.g().arrow_count(); ++a2) {
      auto d1 = AlgebraElement::delta(p1.groupoid, a1);
      auto d2 = AlgebraElement::delta(p2.groupoid, a2);
      kron = kron && expectation(kronecker(d1, d2, t.groupoid)) ==
                         kronecker(expectation(d1), expectation(d2), t.groupoid);
    }
  rep.check("E = E1 ⊗ E2 on monomials", kron);
  rep.check("E1 ⊗ E2 is faithful", detail::gram_faithful(t.groupoid));
  return rep;
}

// Structural isomorphisms of the monoidal structure, as pair morphisms
// induced by re-indexing product groupoids.
namespace detail {

inline PairMorphism reindex_iso(const DiagonalPair& from, const DiagonalPair& to,
                                const std::vector<std::size_t>& unit_map,
                                const std::vector<std::size_t>& arrow_map) {
  return iso_morphism(from, to, GroupoidMap{unit_map, arrow_map});
}

}  // namespace detail

// (P1 ⊗ P2) ⊗ P3 -> P1 ⊗ (P2 ⊗ P3).
inline PairMorphism associator(const DiagonalPair& p1, const DiagonalPair& p2,
                               const DiagonalPair& p3) {
  DiagonalPair left = tensor_pair(tensor_pair(p1, p2), p3);
  DiagonalPair right = tensor_pair(p1, tensor_pair(p2, p3));
  std::vector<std::size_t> units = all_units(left.g()), arrows;
  for (std::size_t a = 0; a < left.g().arrow_count(); ++a) arrows.push_back(a);
  return detail::reindex_iso(left, right, units, arrows);
}

// T1 ⊗ P -> P.
inline PairMorphism left_unitor(const DiagonalPair& p) {
  DiagonalPair one = make_pair(trivial(1));
  DiagonalPair left = tensor_pair(one, p);
  std::vector<std::size_t> arrows;
  for (std::size_t a = 0; a < p.g().arrow_count(); ++a) arrows.push_back(a);
  return detail::reindex_iso(left, p, all_units(p.g()), arrows);
}

// P ⊗ T1 -> P.
inline PairMorphism right_unitor(const DiagonalPair& p) {
  DiagonalPair one = make_pair(trivial(1));
  DiagonalPair right = tensor_pair(p, one);
  std::vector<std::size_t> arrows;
  for (std::size_t a = 0; a < p.g().arrow_count(); ++a) arrows.push_back(a);
  return detail::reindex_iso(right, p, all_units(p.g()), arrows);
}

// P1 ⊗ P2 -> P2 ⊗ P1.
inline PairMorphism symmetry(const DiagonalPair& p1, const DiagonalPair& p2) {
  DiagonalPair left = tensor_pair(p1, p2), right = tensor_pair(p2, p1);
  const std::size_t u1 = p1.g().unit_count(), u2 = p2.g().unit_count();
  const std::size_t n1 = p1.g().arrow_count(), n2 = p2.g().arrow_count();
  std::vector<std::size_t> units(u1 * u2), arrows(n1 * n2);
  for (std::size_t x = 0; x < u1; ++x)
    for (std::size_t y = 0; y < u2; ++y) units[x * u2 + y] = y * u1 + x;
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b) arrows[a * n2 + b] = b * n1 + a;
  return detail::reindex_iso(left, right, units, arrows);
}

inline PairMorphism tensor_with(const PairMorphism& phi1, const PairMorphism& phi2) {
  return tensor_morphism(phi1, phi2);
}

// Coherence of the symmetric monoidal structure on (a, b, c) and the
// pentagon on (a, b, c, d).
inline Report check_monoidal(const DiagonalPair& a, const DiagonalPair& b,
                             const DiagonalPair& c, const DiagonalPair& d) {
  Report rep("monoidal");
  auto id = [](const DiagonalPair& p) { return identity_morphism(p); };
  auto structural_ok = [](const PairMorphism& m) {
    auto v = validate_morphism(m);
    return v.ok() && v.diag_iso;
  };
  DiagonalPair one = make_pair(trivial(1));

  PairMorphism assoc = associator(a, b, c);
  PairMorphism lam = left_unitor(a), rho = right_unitor(a);
  PairMorphism sigma = symmetry(a, b);
  rep.check("associator is a morphism", structural_ok(assoc));
  rep.check("unitors are morphisms", structural_ok(lam) && structural_ok(rho));
  rep.check("symmetry is a morphism", structural_ok(sigma));

  // Pentagon.
  PairMorphism p_lhs = compose_morphisms(associator(a, b, tensor_pair(c, d)),
                                         associator(tensor_pair(a, b), c, d));
  PairMorphism p_rhs = compose_morphisms(
      tensor_with(id(a), associator(b, c, d)),
      compose_morphisms(associator(a, tensor_pair(b, c), d),
                        tensor_with(associator(a, b, c), id(d))));
  rep.check("pentagon", p_lhs == p_rhs);

  // Triangle: (id_a ⊗ λ_b) ∘ α_{a,1,b} = ρ_a ⊗ id_b.
  PairMorphism t_lhs = compose_morphisms(tensor_with(id(a), left_unitor(b)),
                                         associator(a, one, b));
  PairMorphism t_rhs = tensor_with(right_unitor(a), id(b));
  rep.check("triangle", t_lhs == t_rhs);

  // Hexagon: α_{b,c,a} σ_{a,b⊗c} α_{a,b,c} = (id_b ⊗ σ_{a,c}) α_{b,a,c} (σ_{a,b} ⊗ id_c).
  PairMorphism h_lhs = compose_morphisms(
      associator(b, c, a),
      compose_morphisms(symmetry(a, tensor_pair(b, c)), associator(a, b, c)));
  PairMorphism h_rhs = compose_morphisms(
      tensor_with(id(b), symmetry(a, c)),
      compose_morphisms(associator(b, a, c), tensor_with(symmetry(a, b), id(c))));
  rep.check("hexagon", h_lhs == h_rhs);

  rep.check("symmetry squared is the identity",
            compose_morphisms(symmetry(b, a), sigma) == id(tensor_pair(a, b)));
  return rep;
}

// ---------------------------------------------------------------------------
// Faithfulness of W.

// Dimension of the center of the algebra: an isomorphism invariant computed
// without reference to the diagonal.
inline std::size_t center_dimension(const GroupoidPtr& g) {
  const std::size_t n = g->arrow_count();
  std::vector<Vector> rows;
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<Vector> cols;
    for (std::size_t a = 0; a < n; ++a) {
      auto da = AlgebraElement::delta(g, a), db = AlgebraElement::delta(g, b);
      cols.push_back((da * db - db * da).coefficients());
    }
    Matrix m = Matrix::from_columns(n, cols);
    for (std::size_t i = 0; i < n; ++i) {
      Vector row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j);
      rows.push_back(std::move(row));
    }
  }
  return nullspace(Matrix::from_rows(n, rows)).size();
}

// Groupoid iso => pair iso => full, invertible Weyl triple.
inline Report check_faithful_iso(const DiagonalPair& p1, const DiagonalPair& p2,
                                 std::size_t cap = 128) {
  Report rep("faithful");
  auto phi = find_isomorphism(p1.g(), p2.g(), cap);
  rep.check("groupoid isomorphism found", phi.has_value());
  if (!phi) return rep;
  PairMorphism m = iso_morphism(p1, p2, *phi);
  PairMorphism back = iso_morphism(p2, p1, invert_map(*phi));
  auto v = validate_morphism(m);
  rep.check("induced map is a morphism with Phi|_D bijective", v.ok() && v.diag_iso);
  rep.check("induced map is injective", check_injective(m).injective);
  rep.check("induced map has an inverse morphism",
            compose_morphisms(back, m) == identity_morphism(p1) &&
                compose_morphisms(m, back) == identity_morphism(p2));
  auto t = weyl_morphism(m);
  auto inv = partial_inverse(t);
  rep.check("W(Phi) has full domain", t.k.size() == t.domain->arrow_count());
  rep.check("W(Phi) is invertible", inv && is_partial_isomorphism(t, *inv));
  rep.check("W(Phi)^-1 = W(Phi^-1)", inv && *inv == weyl_morphism(back));
  return rep;
}

// Non-isomorphic Weyl groupoids, plus an independent algebra invariant that
// separates the pairs.
inline Report check_weyl_distinguishes(const DiagonalPair& p1, const DiagonalPair& p2,
                                       std::size_t cap = 128) {
  Report rep("distinguish");
  bool weyl_differ = !find_isomorphism(*weyl_object(p1), *weyl_object(p2), cap);
  rep.check("Weyl groupoids are not isomorphic", weyl_differ);
  std::size_t z1 = center_dimension(p1.groupoid), z2 = center_dimension(p2.groupoid);
  bool alg_differ = p1.g().arrow_count() != p2.g().arrow_count() || z1 != z2;
  rep.check("algebras are not isomorphic (dimension or center)", alg_differ,
            "center dims " + std::to_string(z1) + " and " + std::to_string(z2));
  return rep;
}

}  // namespace weylkit

#endif  // WEYLKIT_CATEGORY_HPP_
