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

// The convolution *-algebra of a finite groupoid over Q(i). Elements are
// dense coefficient vectors indexed by arrow; the diagonal subalgebra is
// the span of the unit-arrow indicators.

#ifndef WEYLKIT_ALGEBRA_HPP_
#define WEYLKIT_ALGEBRA_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/groupoid.hpp"
#include "weylkit/linalg.hpp"
#include "weylkit/scalar.hpp"

namespace weylkit {

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(GroupoidPtr g)
      : g_(std::move(g)), c_(g_ ? g_->arrow_count() : 0) {}
  AlgebraElement(GroupoidPtr g, Vector coefficients)
      : g_(std::move(g)), c_(std::move(coefficients)) {
    if (!g_ || c_.size() != g_->arrow_count())
      throw InputError("coefficient vector does not match groupoid");
  }

  static AlgebraElement zero(GroupoidPtr g) { return AlgebraElement(std::move(g)); }
  static AlgebraElement delta(GroupoidPtr g, std::size_t arrow,
                              GaussianRational scale = 1) {
    AlgebraElement f(std::move(g));
    f.c_.at(arrow) = std::move(scale);
    return f;
  }
  static AlgebraElement indicator(GroupoidPtr g, const IndexSet& arrows) {
    AlgebraElement f(std::move(g));
    for (std::size_t a : arrows) f.c_.at(a) = 1;
    return f;
  }
  // Unit of the algebra: sum of the unit-arrow indicators.
  static AlgebraElement one(GroupoidPtr g) {
    AlgebraElement f(g);
    for (std::size_t u = 0; u < g->unit_count(); ++u) f.c_[g->unit_arrow(u)] = 1;
    return f;
  }
  // Diagonal element with the given value at each unit.
  static AlgebraElement diagonal(GroupoidPtr g, const Vector& values) {
    if (values.size() != g->unit_count())
      throw InputError("diagonal needs one value per unit");
    AlgebraElement f(g);
    for (std::size_t u = 0; u < values.size(); ++u)
      f.c_[g->unit_arrow(u)] = values[u];
    return f;
  }
  // Indicator of a set of units, viewed in the diagonal.
  static AlgebraElement unit_indicator(GroupoidPtr g, const IndexSet& units) {
    AlgebraElement f(g);
    for (std::size_t u : units) f.c_.at(g->unit_arrow(u)) = 1;
    return f;
  }

  const GroupoidPtr& groupoid() const { return g_; }
  const FiniteGroupoid& g() const { return *g_; }
  const Vector& coefficients() const { return c_; }
  const GaussianRational& operator[](std::size_t arrow) const { return c_[arrow]; }
  GaussianRational& operator[](std::size_t arrow) { return c_[arrow]; }

  // Value of a diagonal element at unit u.
  const GaussianRational& at_unit(std::size_t u) const {
    return c_[g_->unit_arrow(u)];
  }

  IndexSet support() const {
    IndexSet s;
    for (std::size_t a = 0; a < c_.size(); ++a)
      if (!c_[a].is_zero()) s.push_back(a);
    return s;
  }
  bool is_zero() const {
    for (const auto& z : c_)
      if (!z.is_zero()) return false;
    return true;
  }
  bool is_diagonal() const {
    for (std::size_t a = 0; a < c_.size(); ++a)
      if (!c_[a].is_zero() && !g_->is_unit_arrow(a)) return false;
    return true;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    require_same(o);
    for (std::size_t a = 0; a < c_.size(); ++a) c_[a] += o.c_[a];
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    require_same(o);
    for (std::size_t a = 0; a < c_.size(); ++a) c_[a] -= o.c_[a];
    return *this;
  }
  AlgebraElement& operator*=(const GaussianRational& z) {
    for (auto& x : c_) x *= z;
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(const GaussianRational& z, AlgebraElement a) {
    return a *= z;
  }

  // Equal when the coefficients agree over structurally equal groupoids.
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.c_ == b.c_ && same_groupoid(a.g_, b.g_);
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t a = 0; a < c_.size(); ++a) {
      if (c_[a].is_zero()) continue;
      if (!out.empty()) out += " + ";
      std::string coef = c_[a].to_string();
      out += (coef == "1" ? "" : "(" + coef + ")") + "d" + g_->arrow(a).id;
    }
    return out.empty() ? "0" : out;
  }

  void require_same(const AlgebraElement& o) const {
    if (!same_groupoid(g_, o.g_))
      throw InputError("elements live over different groupoids");
  }

 private:
  GroupoidPtr g_;
  Vector c_;
};

// (f*g)(c) = sum over b∘a = c of f(b) g(a).
inline AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g) {
  f.require_same(g);
  const FiniteGroupoid& G = f.g();
  AlgebraElement out(f.groupoid());
  IndexSet sf = f.support(), sg = g.support();
  for (std::size_t b : sf)
    for (std::size_t a : sg) {
      std::size_t c = G.compose_raw(b, a);
      if (c != FiniteGroupoid::kUndefined) out[c] += f[b] * g[a];
    }
  return out;
}

inline AlgebraElement operator*(const AlgebraElement& f, const AlgebraElement& g) {
  return convolve(f, g);
}

// f*(c) = conj(f(c^{-1})).
inline AlgebraElement adjoint(const AlgebraElement& f) {
  AlgebraElement out(f.groupoid());
  for (std::size_t a : f.support()) out[f.g().inverse(a)] = f[a].conj();
  return out;
}

// Canonical conditional expectation: restriction to the unit arrows.
inline AlgebraElement expectation(const AlgebraElement& f) {
  AlgebraElement out(f.groupoid());
  for (std::size_t u = 0; u < f.g().unit_count(); ++u) {
    std::size_t e = f.g().unit_arrow(u);
    out[e] = f[e];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ideals and quotients from invariant unit sets.

struct IdealData {
  IndexSet units;    // the invariant set U
  IndexSet support;  // arrows with both endpoints in U
};

inline IdealData ideal_from_invariant(const FiniteGroupoid& g, IndexSet u) {
  u = normalize_set(std::move(u));
  require_units(g, u);
  if (!is_invariant(g, u)) throw InputError("unit set is not invariant");
  IdealData data{u, {}};
  for (std::size_t a = 0; a < g.arrow_count(); ++a)
    if (contains(u, g.source(a)) && contains(u, g.target(a)))
      data.support.push_back(a);
  return data;
}

// The restriction map C*(G) -> C*(G|_{X\U}); arrows keep their ids.
struct QuotientAlgebra {
  GroupoidPtr source;
  GroupoidPtr reduced;
  std::vector<std::optional<std::size_t>> arrow_map;  // source -> reduced

  AlgebraElement apply(const AlgebraElement& f) const {
    if (!same_groupoid(f.groupoid(), source))
      throw InputError("element is not over the quotiented groupoid");
    AlgebraElement out(reduced);
    for (std::size_t a = 0; a < arrow_map.size(); ++a)
      if (arrow_map[a]) out[*arrow_map[a]] = f[a];
    return out;
  }
};

inline QuotientAlgebra quotient_algebra(const GroupoidPtr& g, const IndexSet& u) {
  IdealData ideal = ideal_from_invariant(*g, u);
  QuotientAlgebra q;
  q.source = g;
  q.reduced = share(reduction(*g, complement(*g, ideal.units)));
  for (std::size_t a = 0; a < g->arrow_count(); ++a)
    q.arrow_map.push_back(q.reduced->find_arrow(g->arrow(a).id));
  return q;
}

// ---------------------------------------------------------------------------
// Tensor products.

// kron(f, g) over `prod`, which must be product(f.g(), g.g()).
inline AlgebraElement kronecker(const AlgebraElement& f, const AlgebraElement& g,
                                const GroupoidPtr& prod) {
  const std::size_t n2 = g.g().arrow_count();
  if (prod->arrow_count() != f.g().arrow_count() * n2)
    throw InputError("product groupoid does not match factors");
  AlgebraElement out(prod);
  for (std::size_t a1 : f.support())
    for (std::size_t a2 : g.support()) out[a1 * n2 + a2] = f[a1] * g[a2];
  return out;
}

inline AlgebraElement kronecker(const AlgebraElement& f, const AlgebraElement& g) {
  return kronecker(f, g, share(product(f.g(), g.g())));
}

// ---------------------------------------------------------------------------
// Traces.

struct Trace {
  std::vector<IndexSet> orbits;
  std::vector<Rational> weights;  // one per orbit, summing to 1
};

// One extreme trace per orbit: normalized counting measure on that orbit.
inline std::vector<Trace> extreme_traces(const FiniteGroupoid& g) {
  if (!is_principal(g)) throw InputError("traces need a principal groupoid");
  auto blocks = orbits(g);
  std::vector<Trace> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    Trace t{blocks, std::vector<Rational>(blocks.size(), Rational(0))};
    t.weights[b] = 1;
    out.push_back(std::move(t));
  }
  return out;
}

inline GaussianRational evaluate(const Trace& tau, const AlgebraElement& f) {
  GaussianRational total;
  for (std::size_t b = 0; b < tau.orbits.size(); ++b) {
    if (sgn(tau.weights[b]) == 0) continue;
    GaussianRational sum;
    for (std::size_t u : tau.orbits[b]) sum += f.at_unit(u);
    Rational scale = tau.weights[b] / Rational(tau.orbits[b].size());
    total += sum * GaussianRational(scale);
  }
  return total;
}

}  // namespace weylkit

#endif  // WEYLKIT_ALGEBRA_HPP_
