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

#ifndef WEYLKIT_TRIPLE_HPP_
#define WEYLKIT_TRIPLE_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "weylkit/groupoid.hpp"

namespace weylkit {

// A partial morphism H -> G: a wide subgroupoid K of H, an injective functor
// rho: K -> G, and a unit bijection h agreeing with rho on units. Stored as
// explicit tables so that equality is literal.
struct PartialMorphismTriple {
  GroupoidPtr domain;
  GroupoidPtr codomain;
  IndexSet k;
  std::map<std::size_t, std::size_t> rho;
  std::vector<std::size_t> h;

  friend bool operator==(const PartialMorphismTriple& a,
                         const PartialMorphismTriple& b) {
    return a.k == b.k && a.rho == b.rho && a.h == b.h &&
           same_groupoid(a.domain, b.domain) &&
           same_groupoid(a.codomain, b.codomain);
  }
};

inline std::vector<std::string> validate_triple(const PartialMorphismTriple& t) {
  std::vector<std::string> out;
  const FiniteGroupoid& hg = *t.domain;
  const FiniteGroupoid& gg = *t.codomain;
  std::set<std::size_t> in_k(t.k.begin(), t.k.end());
  if (t.h.size() != hg.unit_count()) {
    out.push_back("h is not defined on every unit");
    return out;
  }
  std::set<std::size_t> h_image(t.h.begin(), t.h.end());
  if (hg.unit_count() != gg.unit_count() || h_image.size() != t.h.size())
    out.push_back("h is not a bijection of unit spaces");
  for (std::size_t v : t.h)
    if (v >= gg.unit_count()) out.push_back("h leaves the unit space");
  if (!out.empty()) return out;

  for (std::size_t u = 0; u < hg.unit_count(); ++u)
    if (!in_k.count(hg.unit_arrow(u)))
      out.push_back("K misses the unit " + hg.unit_id(u));
  for (std::size_t a : t.k) {
    if (!in_k.count(hg.inverse(a)))
      out.push_back("K not closed under inverse at " + hg.arrow(a).id);
    for (std::size_t b : t.k) {
      auto c = hg.compose(b, a);
      if (c && !in_k.count(*c))
        out.push_back("K not closed under composition at (" + hg.arrow(b).id +
                      ", " + hg.arrow(a).id + ")");
    }
  }
  if (t.rho.size() != t.k.size()) out.push_back("rho is not defined exactly on K");
  for (auto [a, b] : t.rho)
    if (!in_k.count(a) || b >= gg.arrow_count())
      out.push_back("rho table entry outside K or codomain");
  if (!out.empty()) return out;

  std::set<std::size_t> image;
  for (auto [a, b] : t.rho)
    if (!image.insert(b).second)
      out.push_back("rho is not injective (collision at " + gg.arrow(b).id + ")");
  for (std::size_t u = 0; u < hg.unit_count(); ++u)
    if (t.rho.at(hg.unit_arrow(u)) != gg.unit_arrow(t.h[u]))
      out.push_back("rho disagrees with h at unit " + hg.unit_id(u));
  for (std::size_t a : t.k) {
    std::size_t ra = t.rho.at(a);
    if (gg.source(ra) != t.h[hg.source(a)] || gg.target(ra) != t.h[hg.target(a)])
      out.push_back("rho does not cover h at " + hg.arrow(a).id);
    if (t.rho.at(hg.inverse(a)) != gg.inverse(ra))
      out.push_back("rho does not preserve inverse at " + hg.arrow(a).id);
    for (std::size_t b : t.k) {
      auto c = hg.compose(b, a);
      if (!c) continue;
      auto rc = gg.compose(t.rho.at(b), ra);
      if (!rc || *rc != t.rho.at(*c))
        out.push_back("rho is not functorial at (" + hg.arrow(b).id + ", " +
                      hg.arrow(a).id + ")");
    }
  }
  return out;
}

}  // namespace weylkit

#endif  // WEYLKIT_TRIPLE_HPP_
