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

// Quotient pairs by invariant unit sets, the ideal/geometry correspondence,
// expectation transfer, dynamical comparison, and graph quotients.

#ifndef WEYLKIT_QUOTIENT_HPP_
#define WEYLKIT_QUOTIENT_HPP_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "weylkit/algebra.hpp"
#include "weylkit/generators.hpp"
#include "weylkit/linalg.hpp"
#include "weylkit/morphism.hpp"
#include "weylkit/pair.hpp"
#include "weylkit/report.hpp"

namespace weylkit {

struct QuotientPair {
  DiagonalPair pair;  // over reduction(G, units \ U)
  PairMorphism q;

  // E_B(q(a)) := q(E_A(a)).
  AlgebraElement expectation_of(const AlgebraElement& a) const {
    return q.apply(expectation(a));
  }
};

inline QuotientPair quotient_pair(const DiagonalPair& p, const IndexSet& u) {
  PairMorphism q = quotient_morphism(p, u);
  return {q.target, q};
}

inline std::string set_string(const FiniteGroupoid& g, const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + g.unit_id(s[i]);
  return out + "}";
}

// The extension-by-zero section B -> A of a quotient map.
inline PairMorphism extension_by_zero(const QuotientPair& qp) {
  const FiniteGroupoid& g = qp.q.source.g();
  std::vector<AlgebraElement> images;
  for (const Arrow& x : qp.pair.g().arrows())
    images.push_back(AlgebraElement::delta(qp.q.source.groupoid, g.arrow_index(x.id)));
  return make_morphism(qp.pair, qp.q.source, std::move(images));
}

namespace detail {

inline bool is_star_hom_on_basis(const PairMorphism& phi) {
  const FiniteGroupoid& a = phi.source.g();
  for (std::size_t x = 0; x < a.arrow_count(); ++x) {
    if (!(phi.basis_images[a.inverse(x)] == adjoint(phi.basis_images[x]))) return false;
    for (std::size_t y = 0; y < a.arrow_count(); ++y) {
      std::size_t c = a.compose_raw(x, y);
      AlgebraElement lhs = c == FiniteGroupoid::kUndefined
                               ? AlgebraElement::zero(phi.target.groupoid)
                               : phi.basis_images[c];
      if (!(lhs == phi.basis_images[x] * phi.basis_images[y])) return false;
    }
  }
  return true;
}

// Gram criterion for faithfulness of the canonical expectation:
// E(d_b* d_a) vanishes off the diagonal and is positive on it.
inline bool gram_faithful(const GroupoidPtr& g) {
  for (std::size_t a = 0; a < g->arrow_count(); ++a)
    for (std::size_t b = 0; b < g->arrow_count(); ++b) {
      AlgebraElement e = expectation(adjoint(AlgebraElement::delta(g, b)) *
                                     AlgebraElement::delta(g, a));
      if (a != b && !e.is_zero()) return false;
      if (a == b) {
        for (std::size_t u = 0; u < g->unit_count(); ++u) {
          const auto& z = e.at_unit(u);
          if (!z.is_real() || sgn(z.re()) < 0) return false;
        }
        if (e.is_zero()) return false;
      }
    }
  return true;
}

}  // namespace detail

// The ideal/geometry correspondence for one invariant U.
inline Report check_geom_ideals(const DiagonalPair& p, const IndexSet& u_in,
                                std::uint64_t seed = 3) {
  const FiniteGroupoid& g = p.g();
  IdealData ideal = ideal_from_invariant(g, u_in);
  const IndexSet& u = ideal.units;
  Report rep("ideal " + set_string(g, u));
  IndexSet rest = complement(g, u);
  if (rest.empty()) {
    rep.check("quotient by every unit is the zero algebra (excluded)", true);
    return rep;
  }
  QuotientPair qp = quotient_pair(p, u);
  const FiniteGroupoid& red = qp.pair.g();

  // I is the kernel of q: same dimension, spanned by the support indicators.
  LinearSolver ker(morphism_matrix(qp.q));
  bool kernel_ok = ker.nullity() == ideal.support.size();
  for (std::size_t a : ideal.support)
    kernel_ok = kernel_ok && qp.q.image_of_arrow(a).is_zero();
  rep.check("ideal support spans ker q", kernel_ok);

  // I ∩ D = indicators of U.
  IndexSet diag_kernel;
  for (std::size_t x = 0; x < g.unit_count(); ++x)
    if (qp.q.image_of_arrow(g.unit_arrow(x)).is_zero()) diag_kernel.push_back(x);
  rep.check("I ∩ D is spanned by the indicators of U", diag_kernel == u,
            "kernel units " + set_string(g, diag_kernel));

  // I is generated by I ∩ D: span of d_b d_x d_a over x in U, all arrows a, b.
  std::vector<Vector> generated;
  for (std::size_t x : u)
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
      for (std::size_t b = 0; b < g.arrow_count(); ++b) {
        AlgebraElement f = AlgebraElement::delta(p.groupoid, b) *
                           AlgebraElement::delta(p.groupoid, g.unit_arrow(x)) *
                           AlgebraElement::delta(p.groupoid, a);
        if (!f.is_zero()) generated.push_back(f.coefficients());
      }
  std::vector<Vector> joint = generated;
  for (std::size_t a : ideal.support)
    joint.push_back(AlgebraElement::delta(p.groupoid, a).coefficients());
  bool generated_ok = rank_of(generated, g.arrow_count()) == ideal.support.size() &&
                      rank_of(joint, g.arrow_count()) == ideal.support.size();
  rep.check("I is generated by I ∩ D", generated_ok);

  // The three equivalent conditions.
  bool cond_i = isotropy_report(red).is_principal;
  bool cond_ii = qp.pair.valid();
  bool cond_iii = generated_ok && kernel_ok && cond_i;
  rep.check("(i) reduction to the complement is principal", cond_i);
  rep.check("(ii) quotient pair is a diagonal pair", cond_ii);
  rep.check("(iii) I = C*(G|_U) with principal complement", cond_iii);
  rep.check("conditions (i), (ii), (iii) agree",
            cond_i == cond_ii && cond_ii == cond_iii);
  if (!cond_ii) return rep;

  // Germ correspondence [n, x] -> [q(n), x] for x outside U.
  const auto& wa = weyl_groupoid(p);
  const auto& wq = weyl_groupoid(qp.pair);
  std::vector<std::size_t> germ_map(wq.canonical.size(), FiniteGroupoid::kUndefined);
  bool germ_ok = true;
  for (std::size_t k = 0; k < wa.canonical.size(); ++k) {
    std::size_t x = wa.groupoid->source(k);
    if (contains(u, x)) continue;
    AlgebraElement qn = qp.q.apply(wa.witnesses[k]);
    std::size_t y = red.unit_index(g.unit_id(x));
    auto am = alpha(red, qn);
    if (!contains(am.domain, y)) {
      germ_ok = false;
      continue;
    }
    std::size_t target = am.map.at(y);
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < wq.canonical.size(); ++j)
      if (wq.groupoid->source(j) == y && wq.groupoid->target(j) == target) hit = j;
    if (!hit || germ_map[*hit] != FiniteGroupoid::kUndefined) {
      germ_ok = false;
      continue;
    }
    germ_map[*hit] = k;
    if (red.arrow(wq.canonical[*hit]).id != g.arrow(wa.canonical[k]).id) germ_ok = false;
  }
  for (std::size_t k : germ_map) germ_ok = germ_ok && k != FiniteGroupoid::kUndefined;
  if (germ_ok) {
    for (std::size_t j1 = 0; j1 < germ_map.size(); ++j1)
      for (std::size_t j2 = 0; j2 < germ_map.size(); ++j2) {
        auto c = wq.groupoid->compose(j2, j1);
        auto d = wa.groupoid->compose(germ_map[j2], germ_map[j1]);
        if (c.has_value() != d.has_value() || (c && germ_map[*c] != *d)) germ_ok = false;
      }
  }
  rep.check("germ map [n,x] -> [q(n),x] is a bijective functor", germ_ok);
  rep.check("weyl(quotient) is canonically isomorphic to the reduction",
            wq.canonical_is_isomorphism &&
                is_groupoid_isomorphism(*wq.groupoid, red, wq.canonical_map()));

  // Images of normalizers normalize.
  bool images_ok = true;
  std::mt19937_64 rng(seed);
  for (std::size_t a = 0; a < g.arrow_count(); ++a)
    images_ok = images_ok &&
                is_normalizer(red, qp.q.apply(AlgebraElement::delta(p.groupoid, a)));
  for (int k = 0; k < 12; ++k)
    images_ok = images_ok &&
                is_normalizer(red, qp.q.apply(random_bisection_element(p.groupoid, rng)));
  rep.check("q maps normalizers to normalizers", images_ok);

  // Monomial normalizers of the quotient lift to normalizers.
  bool lifts_ok = true;
  for (const IndexSet& s : maximal_bisections(red)) {
    IndexSet lifted;
    for (std::size_t c : s) lifted.push_back(g.arrow_index(red.arrow(c).id));
    AlgebraElement m = AlgebraElement::indicator(p.groupoid, lifted);
    lifts_ok = lifts_ok && is_normalizer(g, m) &&
               qp.q.apply(m) == AlgebraElement::indicator(qp.pair.groupoid, s);
  }
  rep.check("quotient bisection indicators lift to normalizers", lifts_ok);
  return rep;
}

// The quotient pair and the expectation transfer along q and its section.
inline Report check_transfer_properties(const DiagonalPair& p, const IndexSet& u_in) {
  const FiniteGroupoid& g = p.g();
  IdealData ideal = ideal_from_invariant(g, u_in);
  Report rep("transfer " + set_string(g, ideal.units));
  if (ideal.units.size() == g.unit_count()) {
    rep.check("quotient by every unit is the zero algebra (excluded)", true);
    return rep;
  }
  QuotientPair qp = quotient_pair(p, ideal.units);
  const PairMorphism& phi = qp.q;
  PairMorphism psi = extension_by_zero(qp);
  const FiniteGroupoid& b = qp.pair.g();

  rep.check("quotient pair is a diagonal pair", qp.pair.valid());
  auto v = validate_morphism(phi);
  rep.check("q is a unital *-homomorphism", v.star_hom && v.unital);
  rep.check("q satisfies (D), (E) and normalizer containment",
            v.d_flag && v.e_flag && v.n_containment);

  LinearSolver phi_solver(morphism_matrix(phi));
  rep.check("(i) q is surjective", phi_solver.rank() == b.arrow_count());
  rep.check("(ii) the section is a *-homomorphism", detail::is_star_hom_on_basis(psi));
  bool section = true, intertwines = true;
  for (std::size_t c = 0; c < b.arrow_count(); ++c) {
    AlgebraElement dc = AlgebraElement::delta(qp.pair.groupoid, c);
    section = section && phi.apply(psi.apply(dc)) == dc;
    intertwines = intertwines &&
                  expectation(psi.apply(dc)) == psi.apply(expectation(dc));
  }
  rep.check("(ii) q after the section is the identity", section);
  rep.check("(iii) E_A after the section equals the section after E_B", intertwines);

  // E_B is well defined: ker q lies in ker(q E_A).
  bool well_defined = true;
  for (const Vector& k : phi_solver.kernel())
    well_defined = well_defined &&
                   phi.apply(expectation(AlgebraElement(p.groupoid, k))).is_zero();
  rep.check("ker q ⊆ ker(q ∘ E_A)", well_defined);
  bool formula = true;
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    AlgebraElement da = AlgebraElement::delta(p.groupoid, a);
    formula = formula && qp.expectation_of(da) == expectation(phi.apply(da));
  }
  rep.check("E_B(q(a)) = q(E_A(a))", formula);
  rep.check("E_A faithful", p.validation().faithful && detail::gram_faithful(p.groupoid));
  rep.check("E_B faithful",
            qp.pair.validation().faithful && detail::gram_faithful(qp.pair.groupoid));
  rep.check("quotient diagonal has the UEP (corners one-dimensional)",
            qp.pair.validation().uep);
  if (ideal.units.empty())
    rep.check("U = ∅ gives an isomorphism",
              phi_solver.nullity() == 0 && phi_solver.rank() == g.arrow_count());
  return rep;
}

// Exhaustive comparison over all pairs of diagonal projections.
struct ComparisonStats {
  std::size_t pairs = 0;
  std::size_t strict = 0;  // pairs ordered strictly by every extreme trace
};

inline Report check_dynamical_comparison(const DiagonalPair& p,
                                         ComparisonStats* stats = nullptr,
                                         bool with_quotients = true) {
  const FiniteGroupoid& g = p.g();
  Report rep("comparison");
  if (g.unit_count() > 8) throw CapExceeded("projection enumeration capped at 8 units");
  auto traces = extreme_traces(g);
  const std::size_t n = g.unit_count();
  std::vector<AlgebraElement> projections;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    IndexSet s;
    for (std::size_t x = 0; x < n; ++x)
      if (mask >> x & 1) s.push_back(x);
    projections.push_back(AlgebraElement::unit_indicator(p.groupoid, s));
  }
  ComparisonStats local;
  bool holds = true;
  std::string bad;
  for (const auto& pp : projections)
    for (const auto& qq : projections) {
      ++local.pairs;
      bool strict = true;
      for (const Trace& t : traces)
        strict = strict && evaluate(t, pp).re() < evaluate(t, qq).re();
      if (!strict) continue;
      ++local.strict;
      auto w = subordinate(p, pp, qq);
      bool ok = w && is_normalizer(g, *w) && adjoint(*w) * *w == pp &&
                (*w * adjoint(*w)) * qq == *w * adjoint(*w);
      if (!ok && holds) {
        holds = false;
        bad = "p=" + pp.to_string() + " q=" + qq.to_string();
      }
    }
  rep.check("strict trace order implies subordination", holds, bad);
  if (stats) {
    stats->pairs += local.pairs;
    stats->strict += local.strict;
  }
  if (with_quotients) {
    for (const IndexSet& u : invariant_subsets(g)) {
      if (u.empty() || u.size() == n) continue;
      Report sub = check_dynamical_comparison(quotient_pair(p, u).pair, stats, false);
      for (const auto& c : sub.checks())
        rep.check(c.law + " on quotient by " + set_string(g, u), c.passed,
                  c.counterexample);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Graph quotients.

inline Report graph_quotient_check(const Graph& e, const std::set<std::string>& h) {
  Report rep("graph quotient");
  if (!is_acyclic(e)) throw InputError("graph has a cycle");
  for (const auto& v : h) e.vertex_index(v);
  if (!is_hereditary(e, h)) throw InputError("vertex set is not hereditary");
  if (!is_saturated(e, h)) throw InputError("vertex set is not saturated");
  DiagonalPair p = make_pair(acyclic_graph_groupoid(e));
  IndexSet u = paths_through(e, h);
  rep.check("paths through H form an invariant set", is_invariant(p.g(), u));
  if (u.size() == p.g().unit_count()) {
    rep.check("quotient by every path is the zero algebra (excluded)", true);
    return rep;
  }
  QuotientPair qp = quotient_pair(p, u);
  FiniteGroupoid expected = acyclic_graph_groupoid(remove_vertices(e, h));
  const auto& w = weyl_groupoid(qp.pair);
  auto iso = find_isomorphism(*w.groupoid, expected, 256);
  rep.check("weyl(quotient) is isomorphic to the groupoid of E \\ H", iso.has_value());
  rep.check("quotient reduction equals the groupoid of E \\ H", qp.pair.g() == expected);
  return rep;
}

}  // namespace weylkit

#endif  // WEYLKIT_QUOTIENT_HPP_
