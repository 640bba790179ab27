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

// Morphisms of diagonal pairs: linear maps given on the arrow basis, their
// (D)/(E)/(N) validation, normalizer lifting, and the induced partial
// morphism of Weyl groupoids.

#ifndef WEYLKIT_MORPHISM_HPP_
#define WEYLKIT_MORPHISM_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/algebra.hpp"
#include "weylkit/linalg.hpp"
#include "weylkit/pair.hpp"
#include "weylkit/report.hpp"
#include "weylkit/triple.hpp"

namespace weylkit {

struct PairMorphism {
  DiagonalPair source;
  DiagonalPair target;
  std::vector<AlgebraElement> basis_images;  // image of each source arrow
  bool monomial = false;

  AlgebraElement apply(const AlgebraElement& f) const {
    if (!same_groupoid(f.groupoid(), source.groupoid))
      throw InputError("element is not over the morphism's source");
    AlgebraElement out(target.groupoid);
    for (std::size_t a : f.support()) out += f[a] * basis_images[a];
    return out;
  }
  AlgebraElement image_of_arrow(std::size_t a) const { return basis_images.at(a); }

  // Literal equality of the linear maps between equal pairs.
  friend bool operator==(const PairMorphism& a, const PairMorphism& b) {
    return a.source == b.source && a.target == b.target &&
           a.basis_images == b.basis_images;
  }
};

inline bool is_monomial_image(const AlgebraElement& f) {
  return f.support().size() <= 1;
}

inline PairMorphism make_morphism(DiagonalPair source, DiagonalPair target,
                                  std::vector<AlgebraElement> images) {
  if (images.size() != source.g().arrow_count())
    throw InputError("need one image per source arrow");
  bool monomial = true;
  for (const auto& f : images) {
    if (!same_groupoid(f.groupoid(), target.groupoid))
      throw InputError("basis image is not over the target groupoid");
    monomial = monomial && is_monomial_image(f);
  }
  return {std::move(source), std::move(target), std::move(images), monomial};
}

inline PairMorphism identity_morphism(const DiagonalPair& p) {
  std::vector<AlgebraElement> images;
  for (std::size_t a = 0; a < p.g().arrow_count(); ++a)
    images.push_back(AlgebraElement::delta(p.groupoid, a));
  return make_morphism(p, p, std::move(images));
}

// second ∘ first.
inline PairMorphism compose_morphisms(const PairMorphism& second,
                                      const PairMorphism& first) {
  if (!(first.target == second.source))
    throw InputError("morphisms are not composable");
  std::vector<AlgebraElement> images;
  for (const auto& f : first.basis_images) {
    AlgebraElement g(second.source.groupoid, f.coefficients());
    images.push_back(second.apply(g));
  }
  return make_morphism(first.source, second.target, std::move(images));
}

// Matrix of the map in arrow bases (target arrows x source arrows).
inline Matrix morphism_matrix(const PairMorphism& phi) {
  std::vector<Vector> cols;
  for (const auto& f : phi.basis_images) cols.push_back(f.coefficients());
  return Matrix::from_columns(phi.target.g().arrow_count(), cols);
}

// ---------------------------------------------------------------------------
// Builders.

// Extension by zero along a wide subgroupoid; arrows are matched by id.
inline PairMorphism embedding_morphism(const DiagonalPair& sub,
                                       const DiagonalPair& ambient) {
  const FiniteGroupoid& k = sub.g();
  const FiniteGroupoid& g = ambient.g();
  if (k.unit_ids() != g.unit_ids())
    throw InputError("embedding needs a subgroupoid containing every unit");
  std::vector<std::size_t> image(k.arrow_count());
  for (std::size_t a = 0; a < k.arrow_count(); ++a) {
    auto b = g.find_arrow(k.arrow(a).id);
    if (!b || g.source(*b) != k.source(a) || g.target(*b) != k.target(a))
      throw InputError("arrow " + k.arrow(a).id + " is not in the ambient groupoid");
    image[a] = *b;
  }
  for (std::size_t b = 0; b < k.arrow_count(); ++b)
    for (std::size_t a = 0; a < k.arrow_count(); ++a) {
      auto c = k.compose(b, a);
      if (c && g.compose_raw(image[b], image[a]) != image[*c])
        throw InputError("not a subgroupoid: composition differs");
    }
  std::vector<AlgebraElement> images;
  for (std::size_t a = 0; a < k.arrow_count(); ++a)
    images.push_back(AlgebraElement::delta(ambient.groupoid, image[a]));
  return make_morphism(sub, ambient, std::move(images));
}

// Phi(f)(c) = f(phi^{-1}(c)) for a groupoid isomorphism phi: G1 -> G2.
inline PairMorphism iso_morphism(const DiagonalPair& p1, const DiagonalPair& p2,
                                 const GroupoidMap& phi) {
  if (!is_groupoid_isomorphism(p1.g(), p2.g(), phi))
    throw InputError("map is not a groupoid isomorphism");
  std::vector<AlgebraElement> images;
  for (std::size_t a = 0; a < p1.g().arrow_count(); ++a)
    images.push_back(AlgebraElement::delta(p2.groupoid, phi.arrow_map[a]));
  return make_morphism(p1, p2, std::move(images));
}

// Conjugation by the diagonal unitary sum_u c_u d_u (each |c_u| = 1).
inline PairMorphism inner_diagonal_automorphism(const DiagonalPair& p,
                                                const Vector& phases) {
  const FiniteGroupoid& g = p.g();
  if (phases.size() != g.unit_count())
    throw InputError("need one phase per unit");
  for (const auto& c : phases)
    if (c.norm2() != 1) throw InputError("phase of modulus other than 1");
  std::vector<AlgebraElement> images;
  for (std::size_t a = 0; a < g.arrow_count(); ++a)
    images.push_back(AlgebraElement::delta(
        p.groupoid, a, phases[g.target(a)] * phases[g.source(a)].conj()));
  return make_morphism(p, p, std::move(images));
}

// Restriction C*(G) -> C*(G|_{X\U}) for invariant U (kernel is the ideal of U).
inline PairMorphism quotient_morphism(const DiagonalPair& p, const IndexSet& u) {
  QuotientAlgebra q = quotient_algebra(p.groupoid, u);
  if (q.reduced->empty())
    throw InputError("quotient by every unit is the zero algebra");
  DiagonalPair target = make_pair(q.reduced);
  std::vector<AlgebraElement> images;
  for (std::size_t a = 0; a < p.g().arrow_count(); ++a)
    images.push_back(q.apply(AlgebraElement::delta(p.groupoid, a)));
  return make_morphism(p, std::move(target), std::move(images));
}

// The compression M_2 -> C^2, (a b; c d) -> (a, d). Satisfies (D) and (E)
// but kills the normalizer (0 1; 1 0).
inline PairMorphism compression_morphism() {
  DiagonalPair m2 = make_pair(equivalence_groupoid(numbered_ids(2), {{0, 1}}));
  DiagonalPair c2 = make_pair(equivalence_groupoid(numbered_ids(2), {{0}, {1}}));
  std::vector<AlgebraElement> images;
  for (std::size_t a = 0; a < m2.g().arrow_count(); ++a) {
    const Arrow& x = m2.g().arrow(a);
    images.push_back(x.source == x.target
                         ? AlgebraElement::delta(c2.groupoid,
                                                 c2.g().unit_arrow(x.source))
                         : AlgebraElement::zero(c2.groupoid));
  }
  return make_morphism(m2, c2, std::move(images));
}

// ---------------------------------------------------------------------------
// Validation.

struct MorphismReport {
  bool star_hom = false;
  bool unital = false;
  bool d_flag = false;
  bool e_flag = false;
  bool n_containment = false;
  bool n_injective = false;
  bool diag_iso = false;
  Report details;

  bool n_flag() const { return n_containment && n_injective; }
  bool ok() const { return star_hom && unital && d_flag && e_flag && n_flag(); }
};

// A bisection-supported element with random nonzero Gaussian-integer
// coefficients: arrows are visited in random order and kept greedily.
inline AlgebraElement random_bisection_element(const GroupoidPtr& g,
                                               std::mt19937_64& rng) {
  std::vector<std::size_t> order(g->arrow_count());
  for (std::size_t a = 0; a < order.size(); ++a) order[a] = a;
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng() % i]);
  std::set<std::size_t> sources, targets;
  AlgebraElement f(g);
  for (std::size_t a : order) {
    if (sources.count(g->source(a)) || targets.count(g->target(a))) continue;
    if (rng() % 4 == 0) continue;
    sources.insert(g->source(a));
    targets.insert(g->target(a));
    long re = static_cast<long>(rng() % 9) - 4, im = static_cast<long>(rng() % 5) - 2;
    f[a] = (re == 0 && im == 0) ? GaussianRational(1) : GaussianRational(re, im);
  }
  return f;
}

inline MorphismReport validate_morphism(const PairMorphism& phi,
                                        std::uint64_t seed = 7) {
  const FiniteGroupoid& a = phi.source.g();
  const FiniteGroupoid& b = phi.target.g();
  const GroupoidPtr& ap = phi.source.groupoid;
  MorphismReport r;
  r.details = Report("morphism");
  auto delta = [&](std::size_t x) { return AlgebraElement::delta(ap, x); };
  const auto& img = phi.basis_images;

  r.star_hom = true;
  std::string bad;
  for (std::size_t x = 0; x < a.arrow_count() && r.star_hom; ++x) {
    if (!(phi.apply(adjoint(delta(x))) == adjoint(img[x]))) {
      r.star_hom = false;
      bad = "adjoint at " + a.arrow(x).id;
    }
    for (std::size_t y = 0; y < a.arrow_count() && r.star_hom; ++y) {
      std::size_t c = a.compose_raw(x, y);
      AlgebraElement lhs = c == FiniteGroupoid::kUndefined
                               ? AlgebraElement::zero(phi.target.groupoid)
                               : img[c];
      if (!(lhs == img[x] * img[y])) {
        r.star_hom = false;
        bad = "product of " + a.arrow(x).id + " and " + a.arrow(y).id;
      }
    }
  }
  r.details.check("star-homomorphism", r.star_hom, bad);

  r.unital = phi.apply(AlgebraElement::one(ap)) ==
             AlgebraElement::one(phi.target.groupoid);
  r.details.check("unital", r.unital, "Phi(1) != 1");

  r.d_flag = true;
  bad.clear();
  for (std::size_t u = 0; u < a.unit_count(); ++u)
    if (!img[a.unit_arrow(u)].is_diagonal()) {
      r.d_flag = false;
      bad = "Phi(d_" + a.unit_id(u) + ") leaves the diagonal";
    }
  r.details.check("(D) diagonal preserved", r.d_flag, bad);

  r.e_flag = true;
  bad.clear();
  for (std::size_t x = 0; x < a.arrow_count(); ++x)
    if (!(phi.apply(expectation(delta(x))) == expectation(img[x]))) {
      r.e_flag = false;
      bad = "E_B Phi != Phi E_A at " + a.arrow(x).id;
    }
  r.details.check("(E) expectations intertwined", r.e_flag, bad);

  r.n_containment = true;
  bad.clear();
  for (std::size_t x = 0; x < a.arrow_count() && r.n_containment; ++x)
    if (!is_normalizer(b, img[x])) {
      r.n_containment = false;
      bad = "Phi(d_" + a.arrow(x).id + ") is not a normalizer";
    }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 16 && r.n_containment; ++k) {
    AlgebraElement n = random_bisection_element(ap, rng);
    if (!is_normalizer(b, phi.apply(n))) {
      r.n_containment = false;
      bad = "image of normalizer " + n.to_string() + " is not a normalizer";
    }
  }
  r.details.check("(N) normalizers map to normalizers", r.n_containment, bad);

  // Injectivity on bisection-supported elements: the Gram form
  // E_B(Phi(d_y)* Phi(d_x)) must vanish for distinct arrows that can share a
  // bisection and be nonzero on the diagonal.
  r.n_injective = true;
  bad.clear();
  for (std::size_t x = 0; x < a.arrow_count() && r.n_injective; ++x) {
    if (expectation(adjoint(img[x]) * img[x]).is_zero()) {
      r.n_injective = false;
      bad = "normalizer d_" + a.arrow(x).id + " is sent to 0";
      break;
    }
    for (std::size_t y = 0; y < a.arrow_count() && r.n_injective; ++y) {
      if (x == y || a.source(x) == a.source(y) || a.target(x) == a.target(y))
        continue;
      if (!expectation(adjoint(img[y]) * img[x]).is_zero()) {
        r.n_injective = false;
        bad = "images of d_" + a.arrow(x).id + " and d_" + a.arrow(y).id +
              " are not orthogonal";
      }
    }
  }
  r.details.check("(N) injective on normalizers", r.n_injective, bad);

  r.diag_iso = r.d_flag && a.unit_count() == b.unit_count();
  if (r.diag_iso) {
    std::vector<Vector> cols;
    for (std::size_t u = 0; u < a.unit_count(); ++u) {
      Vector col(b.unit_count());
      for (std::size_t v = 0; v < b.unit_count(); ++v)
        col[v] = img[a.unit_arrow(u)].at_unit(v);
      cols.push_back(std::move(col));
    }
    r.diag_iso = rank(Matrix::from_columns(b.unit_count(), cols)) == a.unit_count();
  }
  return r;
}

// h: target units -> source units, dual to Phi|_D. Requires Phi|_D to be a
// *-isomorphism, i.e. each d_u goes to a single d_v.
inline std::vector<std::size_t> induced_unit_map(const PairMorphism& phi) {
  const FiniteGroupoid& a = phi.source.g();
  const FiniteGroupoid& b = phi.target.g();
  if (a.unit_count() != b.unit_count())
    throw InputError("Phi|_D is not bijective (unit counts differ)");
  std::vector<std::size_t> h(b.unit_count(), FiniteGroupoid::kUndefined);
  for (std::size_t u = 0; u < a.unit_count(); ++u) {
    const AlgebraElement& img = phi.basis_images[a.unit_arrow(u)];
    IndexSet supp = img.support();
    if (!img.is_diagonal() || supp.size() != 1 ||
        img[supp[0]] != GaussianRational(1))
      throw InputError("Phi|_D is not bijective at unit " + a.unit_id(u));
    std::size_t v = b.source(supp[0]);
    if (h[v] != FiniteGroupoid::kUndefined)
      throw InputError("Phi|_D is not bijective (two units hit " + b.unit_id(v) + ")");
    h[v] = u;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Injectivity and lifting.

struct InjectivityReport {
  std::size_t kernel_dim = 0;
  std::size_t diagonal_kernel_dim = 0;
  bool hypotheses_hold = false;  // diag iso, (D)(E)(N), principal source
  bool injective = false;
  // Hypotheses imply trivial kernel: ker is an ideal meeting D trivially,
  // and ideals are generated by their diagonal part.
  bool consistent = false;
};

inline InjectivityReport check_injective(const PairMorphism& phi) {
  InjectivityReport r;
  LinearSolver solver(morphism_matrix(phi));
  r.kernel_dim = solver.nullity();
  const FiniteGroupoid& a = phi.source.g();
  std::vector<Vector> diag_cols;
  for (std::size_t u = 0; u < a.unit_count(); ++u)
    diag_cols.push_back(phi.basis_images[a.unit_arrow(u)].coefficients());
  r.diagonal_kernel_dim =
      a.unit_count() -
      rank(Matrix::from_columns(phi.target.g().arrow_count(), diag_cols));
  auto v = validate_morphism(phi);
  r.hypotheses_hold = v.ok() && v.diag_iso && is_principal(a);
  r.injective = r.kernel_dim == 0;
  r.consistent = !r.hypotheses_hold || (r.diagonal_kernel_dim == 0 && r.injective);
  return r;
}

// Exact preimage solver for one morphism.
class NormalizerLifter {
 public:
  explicit NormalizerLifter(const PairMorphism& phi, std::size_t cap = 256)
      : phi_(&phi) {
    if (phi.source.g().arrow_count() > cap || phi.target.g().arrow_count() > cap)
      throw CapExceeded("lifting solve exceeds size cap");
    solver_ = std::make_unique<LinearSolver>(morphism_matrix(phi));
  }

  bool injective() const { return solver_->nullity() == 0; }

  // The preimage m of n when it exists and is a normalizer.
  std::optional<AlgebraElement> lift(const AlgebraElement& n) const {
    if (!same_groupoid(n.groupoid(), phi_->target.groupoid))
      throw InputError("element is not over the morphism's target");
    auto x = solver_->solve(n.coefficients());
    if (!x) return std::nullopt;
    AlgebraElement m(phi_->source.groupoid, std::move(*x));
    if (!is_normalizer(phi_->source.g(), m)) return std::nullopt;
    return m;
  }

 private:
  const PairMorphism* phi_;
  std::unique_ptr<LinearSolver> solver_;
};

inline std::optional<AlgebraElement> lift_normalizer(const PairMorphism& phi,
                                                     const AlgebraElement& n,
                                                     std::size_t cap = 256) {
  if (!validate_morphism(phi).diag_iso)
    throw InputError("lifting needs Phi|_D to be an isomorphism");
  return NormalizerLifter(phi, cap).lift(n);
}

// ---------------------------------------------------------------------------
// The induced partial morphism of Weyl groupoids.

// Lifts of the canonical monomial normalizers d_c of the target, keyed by
// target arrow c.
struct LiftTable {
  std::map<std::size_t, AlgebraElement> lifts;
};

struct PartialMorphismResult {
  PartialMorphismTriple triple;  // weyl(target) -> weyl(source)
  LiftTable lifts;
  bool used_general_search = false;
};

struct PartialMorphismOptions {
  std::size_t cap = 4096;  // bisection pairs per probe arrow
  bool force_general = false;
};

namespace detail {

// Bisection-pair search: does some f supported in a source bisection T have
// Phi(f) supported in a target bisection S and nonzero at `probe`? Returns
// such an f.
inline std::optional<AlgebraElement> search_bisection_pairs(
    const PairMorphism& phi, std::size_t probe,
    const std::vector<IndexSet>& source_bisections,
    const std::vector<IndexSet>& target_bisections, std::size_t cap) {
  const FiniteGroupoid& b = phi.target.g();
  std::vector<const IndexSet*> through;
  for (const auto& s : target_bisections)
    if (contains(s, probe)) through.push_back(&s);
  if (through.size() * source_bisections.size() > cap)
    throw CapExceeded("bisection-pair search exceeds cap of " + std::to_string(cap));
  for (const IndexSet* s : through) {
    for (const IndexSet& t : source_bisections) {
      std::vector<Vector> rows;
      for (std::size_t c = 0; c < b.arrow_count(); ++c) {
        if (contains(*s, c)) continue;
        Vector row(t.size());
        for (std::size_t j = 0; j < t.size(); ++j)
          row[j] = phi.basis_images[t[j]][c];
        rows.push_back(std::move(row));
      }
      std::vector<Vector> basis;
      if (rows.empty()) {
        for (std::size_t j = 0; j < t.size(); ++j) {
          Vector e(t.size());
          e[j] = 1;
          basis.push_back(std::move(e));
        }
      } else {
        basis = nullspace(Matrix::from_rows(t.size(), rows));
      }
      for (const Vector& v : basis) {
        AlgebraElement f(phi.source.groupoid);
        for (std::size_t j = 0; j < t.size(); ++j) f[t[j]] = v[j];
        if (!phi.apply(f)[probe].is_zero()) return f;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline PartialMorphismResult partial_morphism(const PairMorphism& phi,
                                              PartialMorphismOptions opts = {}) {
  if (!phi.source.valid() || !phi.target.valid())
    throw InputError("partial morphism needs valid diagonal pairs");
  auto report = validate_morphism(phi);
  if (!report.ok() || !report.diag_iso)
    throw InputError("partial morphism needs a (D)(E)(N) morphism with Phi|_D bijective");
  const auto& wa = weyl_groupoid(phi.source);
  const auto& wb = weyl_groupoid(phi.target);
  const FiniteGroupoid& a = phi.source.g();
  const FiniteGroupoid& b = phi.target.g();
  std::vector<std::size_t> h = induced_unit_map(phi);
  NormalizerLifter lifter(phi);

  PartialMorphismResult r;
  r.triple.domain = wb.groupoid;
  r.triple.codomain = wa.groupoid;
  r.triple.h = h;
  r.used_general_search = opts.force_general || !phi.monomial;

  std::vector<IndexSet> source_bis, target_bis;
  if (r.used_general_search) {
    source_bis = maximal_bisections(a, opts.cap);
    target_bis = maximal_bisections(b, opts.cap);
  }
  for (std::size_t germ = 0; germ < wb.canonical.size(); ++germ) {
    std::size_t c = wb.canonical[germ];
    std::size_t y = b.source(c);
    AlgebraElement n = AlgebraElement::delta(phi.target.groupoid, c);
    std::optional<AlgebraElement> m;
    if (r.used_general_search) {
      m = detail::search_bisection_pairs(phi, c, source_bis, target_bis, opts.cap);
      if (m && (!is_normalizer(a, *m) || !is_normalizer(b, phi.apply(*m))))
        throw Error("bisection search produced a non-normalizer");
    } else {
      m = lifter.lift(n);
    }
    if (!m) continue;
    // Germ of m at h(y).
    std::optional<std::size_t> arrow;
    for (std::size_t x : m->support())
      if (a.source(x) == h[y]) arrow = x;
    if (!arrow) throw Error("lifted normalizer vanishes at h(y)");
    r.triple.k.push_back(germ);
    r.triple.rho[germ] = wa.germ_of_arrow(*arrow);
    if (auto l = lifter.lift(n)) r.lifts.lifts.emplace(c, std::move(*l));
  }
  return r;
}

// Checks the conclusions about (H, rho, h) and the lift table L on a computed
// result. Kept separate from partial_morphism so that mutated results can be
// fed in as negative controls.
inline Report check_partial_morphism_result(const PairMorphism& phi,
                                            const PartialMorphismResult& res,
                                            std::uint64_t seed = 11) {
  Report rep("partial morphism");
  const FiniteGroupoid& a = phi.source.g();
  const FiniteGroupoid& b = phi.target.g();
  const auto& wb = weyl_groupoid(phi.target);
  const FiniteGroupoid& hg = *res.triple.domain;
  const auto& t = res.triple;
  std::set<std::size_t> in_k(t.k.begin(), t.k.end());

  // H_Phi is a wide subgroupoid (open is automatic).
  bool units = true, closed = true;
  for (std::size_t u = 0; u < hg.unit_count(); ++u)
    units = units && in_k.count(hg.unit_arrow(u));
  for (std::size_t x : t.k) {
    closed = closed && in_k.count(hg.inverse(x));
    for (std::size_t y : t.k)
      if (auto c = hg.compose(x, y)) closed = closed && in_k.count(*c);
  }
  rep.check("H_Phi contains the unit space", units);
  rep.check("H_Phi closed under composition and inverse", closed);

  auto violations = validate_triple(t);
  rep.check("rho injective, functorial, equal to h on units",
            violations.empty(), violations.empty() ? "" : violations.front());

  // Image of rho is a subgroupoid of G_A.
  std::set<std::size_t> image;
  for (auto [x, y] : t.rho) image.insert(y);
  const FiniteGroupoid& ga = *t.codomain;
  bool image_closed = true;
  for (std::size_t x : image) {
    image_closed = image_closed && image.count(ga.inverse(x));
    for (std::size_t y : image)
      if (auto c = ga.compose(x, y)) image_closed = image_closed && image.count(*c);
  }
  rep.check("rho(H_Phi) is a subgroupoid of G_A", image_closed);

  // Lift table laws.
  bool lifts_ok = true, star_ok = true, mult_ok = true, nn_ok = true,
       rho_ok = true;
  std::string bad;
  for (const auto& [c, m] : res.lifts.lifts) {
    AlgebraElement n = AlgebraElement::delta(phi.target.groupoid, c);
    if (!(phi.apply(m) == n)) lifts_ok = false;
    if (!(phi.apply(adjoint(m) * m) == adjoint(n) * n)) nn_ok = false;
    auto inv = res.lifts.lifts.find(b.inverse(c));
    if (inv == res.lifts.lifts.end() || !(inv->second == adjoint(m))) {
      star_ok = false;
      bad = "L(n*) != L(n)* at " + b.arrow(c).id;
    }
    for (const auto& [c2, m2] : res.lifts.lifts) {
      auto comp = b.compose(c2, c);
      if (!comp) continue;
      auto it = res.lifts.lifts.find(*comp);
      if (it == res.lifts.lifts.end() || !(it->second == m2 * m)) mult_ok = false;
    }
    // rho([n, y]) = [L(n), h(y)].
    std::size_t germ = wb.germ_of_arrow(c);
    auto r = t.rho.find(germ);
    std::size_t y = b.source(c);
    bool found = false;
    if (r != t.rho.end()) {
      std::size_t target_arrow = weyl_groupoid(phi.source).canonical[r->second];
      found = a.source(target_arrow) == t.h[y] && !m[target_arrow].is_zero();
    }
    rho_ok = rho_ok && found;
  }
  rep.check("Phi(L(n)) = n", lifts_ok);
  rep.check("L(n*) = L(n)*", star_ok, bad);
  rep.check("L(n2 n1) = L(n2) L(n1)", mult_ok);
  rep.check("Phi(L(n)* L(n)) = n* n", nn_ok);
  rep.check("rho([n,y]) = [L(n), h(y)]", rho_ok);
  bool table_covers_k = true;
  for (std::size_t germ : t.k)
    if (!res.lifts.lifts.count(wb.canonical[germ]) && !res.used_general_search)
      table_covers_k = false;
  rep.check("lift table covers H_Phi", table_covers_k);

  // Normalizer preservation and domain compatibility on lifted pairs and on
  // random bisection-supported source normalizers.
  std::vector<AlgebraElement> sources;
  for (const auto& [c, m] : res.lifts.lifts) sources.push_back(m);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 12; ++k)
    sources.push_back(random_bisection_element(phi.source.groupoid, rng));
  bool preserved = true, compatible = true;
  for (const auto& m : sources) {
    AlgebraElement n = phi.apply(m);
    if (!is_normalizer(b, n)) {
      preserved = false;
      continue;
    }
    IndexSet dom_n = alpha(b, n).domain;
    IndexSet dom_m = alpha(a, m).domain;
    IndexSet pulled;
    for (std::size_t y = 0; y < b.unit_count(); ++y)
      if (contains(dom_m, t.h[y])) pulled.push_back(y);
    compatible = compatible && pulled == dom_n;
  }
  rep.check("Phi(n) normalizes C", preserved);
  rep.check("dom(alpha_Phi(n)) = h^-1(dom(alpha_n))", compatible);
  return rep;
}

inline Report check_partial_morphism_theorem(const PairMorphism& phi) {
  return check_partial_morphism_result(phi, partial_morphism(phi));
}

}  // namespace weylkit

#endif  // WEYLKIT_MORPHISM_HPP_
