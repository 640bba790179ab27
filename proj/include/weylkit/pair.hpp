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

// Diagonal pairs (C*(G), C(G^0)) of finite groupoids: the structural
// validators, normalizers and their partial unit maps, both germ relations,
// and reconstruction of the Weyl groupoid from germs of normalizers.

#ifndef WEYLKIT_PAIR_HPP_
#define WEYLKIT_PAIR_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/algebra.hpp"
#include "weylkit/groupoid.hpp"
#include "weylkit/linalg.hpp"

namespace weylkit {

struct PairValidation {
  bool abelian = false;
  bool masa = false;
  bool regular = false;
  bool uep = false;
  bool faithful = false;
  std::size_t commutant_dim = 0;

  bool ok() const { return abelian && masa && regular && uep && faithful; }
};

struct WeylGroupoidResult {
  GroupoidPtr groupoid;                   // germs of normalizers
  std::vector<std::size_t> canonical;     // germ arrow -> arrow of the pair
  std::vector<AlgebraElement> witnesses;  // a normalizer for each germ arrow
  bool canonical_is_isomorphism = false;

  GroupoidMap canonical_map() const {
    GroupoidMap m;
    m.unit_map = all_units(*groupoid);
    m.arrow_map = canonical;
    return m;
  }
  // Germ arrow whose canonical image is `arrow`.
  std::size_t germ_of_arrow(std::size_t arrow) const {
    for (std::size_t i = 0; i < canonical.size(); ++i)
      if (canonical[i] == arrow) return i;
    throw InputError("arrow has no germ");
  }
};

namespace detail {

struct PairCache {
  std::once_flag validation_once;
  std::once_flag weyl_once;
  PairValidation validation;
  std::shared_ptr<const WeylGroupoidResult> weyl;
};

}  // namespace detail

// The validation flags and the Weyl groupoid are computed once, on first use.
struct DiagonalPair {
  GroupoidPtr groupoid;
  std::shared_ptr<detail::PairCache> cache = std::make_shared<detail::PairCache>();

  const FiniteGroupoid& g() const { return *groupoid; }
  const PairValidation& validation() const;
  bool valid() const { return validation().ok(); }
  // Null exactly when validation fails.
  const WeylGroupoidResult* weyl() const;

  friend bool operator==(const DiagonalPair& a, const DiagonalPair& b) {
    return same_groupoid(a.groupoid, b.groupoid);
  }
};

// ---------------------------------------------------------------------------
// Normalizers.

// n D n* and n* D n inside D, tested on the indicator basis of D.
inline bool is_normalizer(const FiniteGroupoid& g, const AlgebraElement& f) {
  AlgebraElement fs = adjoint(f);
  for (std::size_t u = 0; u < g.unit_count(); ++u) {
    AlgebraElement du = AlgebraElement::delta(f.groupoid(), g.unit_arrow(u));
    if (!(f * du * fs).is_diagonal()) return false;
    if (!(fs * du * f).is_diagonal()) return false;
  }
  return true;
}

inline bool is_normalizer(const DiagonalPair& p, const AlgebraElement& f) {
  if (!same_groupoid(p.groupoid, f.groupoid()))
    throw InputError("element is not over the pair's groupoid");
  return is_normalizer(p.g(), f);
}

struct PartialUnitMap {
  IndexSet domain;
  std::map<std::size_t, std::size_t> map;

  friend bool operator==(const PartialUnitMap&, const PartialUnitMap&) = default;
};

// The partial homeomorphism of the unit space induced by a normalizer.
inline PartialUnitMap alpha(const FiniteGroupoid& g, const AlgebraElement& n) {
  if (!is_normalizer(g, n)) throw InputError("alpha needs a normalizer");
  AlgebraElement nn = adjoint(n) * n;
  PartialUnitMap out;
  for (std::size_t u = 0; u < g.unit_count(); ++u) {
    if (nn.at_unit(u).is_zero()) continue;
    out.domain.push_back(u);
    std::optional<std::size_t> image;
    for (std::size_t a : n.support()) {
      if (g.source(a) != u) continue;
      if (image && *image != g.target(a))
        throw Error("normalizer support splits at unit " + g.unit_id(u));
      image = g.target(a);
    }
    out.map[u] = *image;
  }
  return out;
}

inline PartialUnitMap alpha(const DiagonalPair& p, const AlgebraElement& n) {
  return alpha(p.g(), n);
}

// ---------------------------------------------------------------------------
// Pair validation.

inline PairValidation validate_pair(const GroupoidPtr& gp) {
  const FiniteGroupoid& g = *gp;
  const std::size_t na = g.arrow_count();
  const std::size_t nu = g.unit_count();
  PairValidation v;
  auto delta = [&](std::size_t a) { return AlgebraElement::delta(gp, a); };

  v.abelian = true;
  for (std::size_t x = 0; x < nu; ++x)
    for (std::size_t y = x + 1; y < nu; ++y) {
      auto dx = delta(g.unit_arrow(x)), dy = delta(g.unit_arrow(y));
      if (!(dx * dy == dy * dx)) v.abelian = false;
    }

  // Commutant of D: kernel of f -> ([d_u, f])_u. Only nonzero rows are kept.
  std::vector<Vector> rows;
  for (std::size_t u = 0; u < nu; ++u) {
    auto du = delta(g.unit_arrow(u));
    std::vector<AlgebraElement> cols;
    for (std::size_t a = 0; a < na; ++a) cols.push_back(du * delta(a) - delta(a) * du);
    for (std::size_t c = 0; c < na; ++c) {
      Vector row(na);
      bool nonzero = false;
      for (std::size_t a = 0; a < na; ++a) {
        row[a] = cols[a][c];
        nonzero = nonzero || !row[a].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  v.commutant_dim = na - rank_of(rows, na);
  v.masa = v.abelian && v.commutant_dim == nu;

  std::vector<Vector> normalizers;
  for (std::size_t a = 0; a < na; ++a) {
    auto d = delta(a);
    if (is_normalizer(g, d)) normalizers.push_back(d.coefficients());
  }
  v.regular = rank_of(normalizers, na) == na;

  v.uep = true;
  for (std::size_t u = 0; u < nu; ++u) {
    auto du = delta(g.unit_arrow(u));
    std::vector<Vector> corner;
    for (std::size_t a = 0; a < na; ++a) corner.push_back((du * delta(a) * du).coefficients());
    if (rank_of(corner, na) != 1) v.uep = false;
  }

  // Expectation laws on the basis, then the Gram form E(d_b* d_a), which is
  // diagonal with positive entries exactly when E is faithful.
  v.faithful = true;
  for (std::size_t a = 0; a < na && v.faithful; ++a) {
    auto da = delta(a);
    AlgebraElement e = expectation(da);
    if (!(expectation(e) == e) || !e.is_diagonal()) v.faithful = false;
    for (std::size_t x = 0; x < nu && v.faithful; ++x)
      for (std::size_t y = 0; y < nu && v.faithful; ++y) {
        auto dx = delta(g.unit_arrow(x)), dy = delta(g.unit_arrow(y));
        if (!(expectation(dx * da * dy) == dx * e * dy)) v.faithful = false;
      }
    AlgebraElement das = adjoint(da);
    for (std::size_t b = 0; b < na && v.faithful; ++b) {
      AlgebraElement gram = expectation(adjoint(delta(b)) * da);
      if (b != a) {
        if (!gram.is_zero()) v.faithful = false;
        continue;
      }
      bool positive = !gram.is_zero();
      for (const auto& z : gram.coefficients())
        if (!z.is_real() || sgn(z.re()) < 0) positive = false;
      if (!positive) v.faithful = false;
    }
  }
  return v;
}

inline PairValidation validate_pair(const DiagonalPair& p) {
  return validate_pair(p.groupoid);
}

// ---------------------------------------------------------------------------
// Germs.

struct GermVerdict {
  bool column_oracle = false;   // coefficients over source x coincide
  bool delta_witness = false;   // n d_x == m d_x by convolution
  bool random_witness = false;  // some sampled diagonal d, d(x) != 0, nd == md

  bool agree() const {
    return column_oracle == delta_witness && delta_witness == random_witness;
  }
  bool equal() const { return column_oracle; }
};

// The scalar-sensitive germ relation: is there a diagonal d with d(x) != 0
// and n d = m d? Decided three ways; callers assert agreement.
//
// Half of the random samples are unconstrained random diagonals through x;
// the other half are random combinations of an exact basis of
// {d diagonal : (n - m) d = 0}, so that a witness is found whenever one
// exists.
inline GermVerdict germ_equal_strict(const DiagonalPair& p,
                                     const AlgebraElement& n,
                                     const AlgebraElement& m, std::size_t x,
                                     std::uint64_t seed = 1,
                                     std::size_t samples = 20) {
  const FiniteGroupoid& g = p.g();
  const GroupoidPtr& gp = p.groupoid;
  if (!is_normalizer(p, n) || !is_normalizer(p, m))
    throw InputError("germ comparison needs normalizers");
  if (x >= g.unit_count() || !contains(alpha(p, n).domain, x) ||
      !contains(alpha(p, m).domain, x))
    throw InputError("unit outside a normalizer's domain");

  GermVerdict v;
  v.column_oracle = true;
  for (std::size_t a = 0; a < g.arrow_count(); ++a)
    if (g.source(a) == x && n[a] != m[a]) v.column_oracle = false;

  auto dx = AlgebraElement::delta(gp, g.unit_arrow(x));
  v.delta_witness = n * dx == m * dx;

  auto witnesses = [&](const AlgebraElement& d) {
    return !d.at_unit(x).is_zero() && n * d == m * d;
  };
  std::mt19937_64 rng(seed);
  auto small = [&] { return static_cast<long>(rng() % 7) - 3; };
  AlgebraElement diff = n - m;
  std::vector<Vector> columns;
  for (std::size_t u = 0; u < g.unit_count(); ++u)
    columns.push_back(
        (diff * AlgebraElement::delta(gp, g.unit_arrow(u))).coefficients());
  auto basis = nullspace(Matrix::from_columns(g.arrow_count(), columns));

  for (std::size_t k = 0; k < samples && !v.random_witness; ++k) {
    Vector values(g.unit_count());
    if (k % 2 == 0) {
      for (std::size_t u = 0; u < g.unit_count(); ++u)
        if (u == x || rng() % 2) values[u] = GaussianRational(small(), small());
      if (values[x].is_zero()) values[x] = 1;
    } else {
      if (basis.empty()) continue;
      for (const Vector& b : basis) {
        GaussianRational c(static_cast<long>(rng() % 97) + 1,
                           static_cast<long>(rng() % 97));
        for (std::size_t u = 0; u < values.size(); ++u) values[u] += c * b[u];
      }
    }
    v.random_witness = witnesses(AlgebraElement::diagonal(gp, values));
  }
  return v;
}

// Germ of a normalizer at x in the scalar-sensitive sense: the support arrow
// leaving x together with its coefficient.
struct StrictGerm {
  std::size_t arrow = 0;
  GaussianRational scalar;

  friend bool operator==(const StrictGerm&, const StrictGerm&) = default;
};

inline StrictGerm strict_germ(const DiagonalPair& p, const AlgebraElement& n,
                              std::size_t x) {
  if (!contains(alpha(p, n).domain, x))
    throw InputError("unit outside the normalizer's domain");
  for (std::size_t a : n.support())
    if (p.g().source(a) == x) return {a, n[a]};
  throw Error("normalizer has no support arrow at the unit");
}

inline StrictGerm strict_multiply(const FiniteGroupoid& g, const StrictGerm& second,
                                  const StrictGerm& first) {
  auto c = g.compose(second.arrow, first.arrow);
  if (!c) throw InputError("strict germs are not composable");
  return {*c, second.scalar * first.scalar};
}

inline StrictGerm strict_inverse(const FiniteGroupoid& g, const StrictGerm& s) {
  return {g.inverse(s.arrow), GaussianRational(1) / s.scalar};
}

// Forgetting the scalar lands in the Weyl (alpha-level) germ groupoid.
inline std::size_t forget_scalar(const StrictGerm& s) { return s.arrow; }

// The alpha-level germ relation: [n,x] = [m,x] iff alpha_n(x) = alpha_m(x).
inline bool germ_equal_weyl(const DiagonalPair& p, const AlgebraElement& n,
                            const AlgebraElement& m, std::size_t x) {
  auto an = alpha(p, n), am = alpha(p, m);
  if (!contains(an.domain, x) || !contains(am.domain, x))
    throw InputError("unit outside a normalizer's domain");
  return an.map.at(x) == am.map.at(x);
}

// Rebuilds the groupoid from germs of normalizers. Germ composition and
// inversion are computed from convolution and adjoints of the witnesses, not
// from the groupoid's tables; the canonical map to the groupoid is then
// checked to be an isomorphism.
inline WeylGroupoidResult weyl_groupoid_unchecked(const GroupoidPtr& gp) {
  const FiniteGroupoid& g = *gp;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> germ_index;
  std::vector<std::pair<std::size_t, std::size_t>> keys;  // (target, source)
  std::vector<AlgebraElement> witnesses;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, AlgebraElement>>
      found;
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    // Least bisection through a in (size, indices) order: the singleton.
    AlgebraElement n = AlgebraElement::delta(gp, a);
    auto am = alpha(g, n);
    for (std::size_t x : am.domain) found.push_back({{am.map[x], x}, n});
  }
  std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) {
    return l.first < r.first;
  });
  for (auto& [key, n] : found) {
    if (germ_index.count(key)) continue;
    germ_index[key] = keys.size();
    keys.push_back(key);
    witnesses.push_back(std::move(n));
  }

  const std::size_t n_germs = keys.size();
  std::vector<Arrow> arrows;
  std::vector<std::size_t> canonical;
  for (std::size_t i = 0; i < n_germs; ++i) {
    auto [t, s] = keys[i];
    std::optional<std::size_t> arrow;
    for (std::size_t a : witnesses[i].support())
      if (g.source(a) == s) arrow = a;
    canonical.push_back(*arrow);
    arrows.push_back({"[" + g.arrow(*arrow).id + "," + g.unit_id(s) + "]", s, t});
  }
  auto lookup = [&](const AlgebraElement& n, std::size_t x) {
    auto am = alpha(g, n);
    return germ_index.at({am.map.at(x), x});
  };
  std::vector<std::size_t> unit_arrows(g.unit_count());
  for (std::size_t u = 0; u < g.unit_count(); ++u)
    unit_arrows[u] = germ_index.at({u, u});
  std::vector<std::size_t> inverse(n_germs);
  std::vector<std::size_t> compose(n_germs * n_germs, FiniteGroupoid::kUndefined);
  for (std::size_t i = 0; i < n_germs; ++i) {
    inverse[i] = lookup(adjoint(witnesses[i]), keys[i].first);
    for (std::size_t j = 0; j < n_germs; ++j) {
      if (keys[i].second != keys[j].first) continue;
      compose[i * n_germs + j] = lookup(witnesses[i] * witnesses[j], keys[j].second);
    }
  }
  WeylGroupoidResult r;
  r.groupoid = share(FiniteGroupoid(g.unit_ids(), std::move(arrows),
                                    std::move(unit_arrows), std::move(compose),
                                    std::move(inverse)));
  r.canonical = std::move(canonical);
  r.witnesses = std::move(witnesses);
  r.canonical_is_isomorphism =
      validate_groupoid(*r.groupoid).ok() &&
      is_groupoid_isomorphism(*r.groupoid, g, r.canonical_map());
  return r;
}

inline const PairValidation& DiagonalPair::validation() const {
  std::call_once(cache->validation_once,
                 [this] { cache->validation = validate_pair(groupoid); });
  return cache->validation;
}

inline const WeylGroupoidResult* DiagonalPair::weyl() const {
  if (!valid()) return nullptr;
  std::call_once(cache->weyl_once, [this] {
    cache->weyl = std::make_shared<const WeylGroupoidResult>(
        weyl_groupoid_unchecked(groupoid));
  });
  return cache->weyl.get();
}

inline DiagonalPair make_pair(GroupoidPtr g) {
  if (!g) throw InputError("null groupoid");
  if (g->empty()) throw InputError("the empty groupoid has the zero algebra");
  auto report = validate_groupoid(*g);
  if (!report.ok())
    throw InputError("invalid groupoid: " + report.violations.front());
  DiagonalPair p;
  p.groupoid = std::move(g);
  return p;
}

inline DiagonalPair make_pair(FiniteGroupoid g) { return make_pair(share(std::move(g))); }

inline const WeylGroupoidResult& weyl_groupoid(const DiagonalPair& p) {
  const WeylGroupoidResult* w = p.weyl();
  if (!w) throw InputError("not a diagonal pair; Weyl groupoid undefined");
  return *w;
}

// ---------------------------------------------------------------------------
// Subequivalence of diagonal projections.

inline bool is_diagonal_projection(const AlgebraElement& p) {
  if (!p.is_diagonal()) return false;
  for (std::size_t u = 0; u < p.g().unit_count(); ++u) {
    const auto& z = p.at_unit(u);
    if (!(z.is_zero() || z == GaussianRational(1))) return false;
  }
  return true;
}

inline IndexSet projection_support(const AlgebraElement& p) {
  IndexSet s;
  for (std::size_t u = 0; u < p.g().unit_count(); ++u)
    if (!p.at_unit(u).is_zero()) s.push_back(u);
  return s;
}

// A bisection indicator n with n*n = p and n n* <= q, matched orbit by orbit
// (units common to p and q are fixed first). Absent when some orbit has more
// of p than of q.
inline std::optional<AlgebraElement> subordinate(const DiagonalPair& pr,
                                                 const AlgebraElement& p,
                                                 const AlgebraElement& q) {
  if (!is_diagonal_projection(p) || !is_diagonal_projection(q))
    throw InputError("subordinate needs diagonal projections");
  const FiniteGroupoid& g = pr.g();
  IndexSet sp = projection_support(p), sq = projection_support(q);
  auto blocks = orbits(g);
  IndexSet bisection;
  for (const auto& block : blocks) {
    IndexSet from, to;
    for (std::size_t u : block) {
      bool in_p = contains(sp, u), in_q = contains(sq, u);
      if (in_p && in_q) {
        bisection.push_back(g.unit_arrow(u));
      } else if (in_p) {
        from.push_back(u);
      } else if (in_q) {
        to.push_back(u);
      }
    }
    if (from.size() > to.size()) return std::nullopt;
    for (std::size_t i = 0; i < from.size(); ++i) {
      std::optional<std::size_t> arrow;
      for (std::size_t a = 0; a < g.arrow_count() && !arrow; ++a)
        if (g.source(a) == from[i] && g.target(a) == to[i]) arrow = a;
      if (!arrow) return std::nullopt;
      bisection.push_back(*arrow);
    }
  }
  return AlgebraElement::indicator(pr.groupoid, normalize_set(bisection));
}

}  // namespace weylkit

#endif  // WEYLKIT_PAIR_HPP_
