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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "weylkit/weylkit.hpp"

namespace weylkit {
namespace {

using oracle::g3;
using oracle::r;
using oracle::t;

PairMorphism RandomInner(const DiagonalPair& p, std::mt19937_64& rng) {
  Vector phases;
  for (std::size_t u = 0; u < p.g().unit_count(); ++u) phases.push_back(oracle::random_phase(rng));
  return inner_diagonal_automorphism(p, phases);
}

TEST(PartialCategory, IdentityExamples) {
  auto g = r(2);
  auto id = identity_partial(g);
  EXPECT_EQ(id.k.size(), 4u);
  EXPECT_EQ(compose_partial(id, id), id);
  auto emb = weyl_morphism(embedding_morphism(make_pair(t(2)), make_pair(r(2))));
  EXPECT_EQ(compose_partial(emb, identity_partial(emb.domain)), emb);
  EXPECT_EQ(compose_partial(identity_partial(emb.codomain), emb), emb);
}

TEST(PartialCategory, AxiomsOnRandomChains) {
  std::mt19937_64 rng(41);
  std::vector<GroupoidPtr> objects{r(3), t(3), g3(), share(random_equivalence(3, 5)),
                                   share(random_equivalence(3, 6))};
  std::size_t chains = 0;
  for (int c = 0; c < 60; ++c) {
    auto pick = [&] { return objects[rng() % objects.size()]; };
    GroupoidPtr a = pick(), b = pick(), cc = pick(), d = pick();
    auto t1 = random_triple(a, b, rng), t2 = random_triple(b, cc, rng),
         t3 = random_triple(cc, d, rng);
    EXPECT_TRUE(validate_triple(t1).empty());
    Report rep = check_category_axioms(t1, t2, t3);
    EXPECT_TRUE(rep.ok()) << rep;
    ++chains;
  }
  EXPECT_GE(chains, 50u);
}

TEST(PartialCategory, IsomorphismCharacterization) {
  std::mt19937_64 rng(42);
  for (int c = 0; c < 40; ++c) {
    auto h = share(random_equivalence(3, rng()));
    auto t1 = random_triple(h, r(3), rng);
    auto inv = partial_inverse(t1);
    bool full = t1.k.size() == t1.domain->arrow_count() &&
                t1.rho.size() == t1.codomain->arrow_count();
    EXPECT_EQ(inv.has_value(), full);
    if (inv) EXPECT_TRUE(is_partial_isomorphism(t1, *inv));
  }
  EXPECT_TRUE(partial_inverse(identity_partial(g3())));
  EXPECT_FALSE(partial_inverse(weyl_morphism(embedding_morphism(make_pair(t(2)), make_pair(r(2))))));
}

TEST(WeylFunctor, ObjectsAndIdentities) {
  EXPECT_TRUE(oracle::principal_isomorphism(*weyl_object(make_pair(r(2))), full_relation(2)));
  for (const auto& g : {r(2), g3(), t(3)}) {
    DiagonalPair p = make_pair(g);
    EXPECT_EQ(weyl_morphism(identity_morphism(p)), identity_partial(weyl_object(p)));
  }
  auto w = weyl_morphism(embedding_morphism(make_pair(g3()), make_pair(r(3))));
  EXPECT_EQ(w.k.size(), 5u);
}

TEST(WeylFunctor, ContravariantOnComposableChains) {
  std::mt19937_64 rng(43);
  std::size_t chains = 0;
  for (const auto& g : {r(2), r(3), g3(), t(3), share(random_equivalence(4, 8))}) {
    DiagonalPair p = make_pair(g);
    DiagonalPair units = make_pair(unit_space_groupoid(*g));
    PairMorphism embed = embedding_morphism(units, p);
    for (int k = 0; k < 2; ++k) {
      PairMorphism inner = RandomInner(p, rng), inner2 = RandomInner(p, rng);
      for (const auto& [phi, psi] : {std::pair{embed, inner}, std::pair{inner, inner2},
                                     std::pair{identity_morphism(units), embed}}) {
        Report rep = check_functoriality(phi, psi);
        EXPECT_TRUE(rep.ok()) << rep;
        EXPECT_TRUE(check_composition_closure(phi, psi).ok());
        ++chains;
      }
    }
  }
  PairMorphism e1 = embedding_morphism(make_pair(t(3)), make_pair(g3()));
  PairMorphism e2 = embedding_morphism(make_pair(g3()), make_pair(r(3)));
  EXPECT_TRUE(check_functoriality(e1, e2).ok());
  ++chains;
  EXPECT_GE(chains, 20u);
}

TEST(WeylFunctor, IsoInducesFullInvertibleTriple) {
  DiagonalPair z3 = make_pair(cyclic_transformation(3)), r3 = make_pair(r(3));
  auto w = weyl_morphism(iso_morphism(z3, r3, *find_isomorphism(z3.g(), r3.g())));
  EXPECT_EQ(w.k.size(), w.domain->arrow_count());
  EXPECT_TRUE(partial_inverse(w));
}

TEST(PosetFunctor, Fixtures) {
  auto q = poset_functor_q(make_pair(g3()));
  EXPECT_EQ(q.objects.size(), 4u);
  std::size_t nonidentity = 0;
  for (const auto& a : q.arrows)
    if (a.from != a.to) ++nonidentity;
  EXPECT_EQ(nonidentity, 5u);
  EXPECT_EQ(poset_functor_q(make_pair(r(2))).objects.size(), 2u);
  for (const auto& g : {g3(), r(2), t(2), share(disjoint_union(*g3(), trivial(1)))})
    EXPECT_TRUE(check_poset_functor(make_pair(g)).ok());
}

TEST(Tensor, ProductWeylOnFixturePairs) {
  std::vector<GroupoidPtr> gs{r(1), r(2), t(2), g3(), r(3), t(3)};
  for (const auto& a : gs)
    for (const auto& b : gs) {
      if (a->arrow_count() * b->arrow_count() > 64) continue;
      Report rep = check_product_weyl(make_pair(a), make_pair(b));
      EXPECT_TRUE(rep.ok()) << rep;
    }
  DiagonalPair rr = tensor_pair(make_pair(r(2)), make_pair(r(2)));
  EXPECT_TRUE(oracle::principal_isomorphism(*weyl_object(rr), full_relation(4)));
  DiagonalPair pt = tensor_pair(make_pair(g3()), make_pair(r(1)));
  EXPECT_TRUE(oracle::principal_isomorphism(pt.g(), *g3()));
}

TEST(Tensor, EmbeddingsTensorToEmbeddings) {
  PairMorphism e1 = embedding_morphism(make_pair(t(2)), make_pair(r(2)));
  PairMorphism e2 = embedding_morphism(make_pair(t(3)), make_pair(g3()));
  PairMorphism e = tensor_morphism(e1, e2);
  EXPECT_TRUE(validate_morphism(e).ok());
  EXPECT_TRUE(e.monomial);
  for (std::size_t a = 0; a < e.source.g().arrow_count(); ++a) {
    auto s = e.image_of_arrow(a).support();
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(e.target.g().arrow(s[0]).id, e.source.g().arrow(a).id);
  }
}

TEST(Monoidal, Coherence) {
  DiagonalPair r2 = make_pair(r(2)), t2 = make_pair(t(2)), p3 = make_pair(g3());
  Report rep = check_monoidal(r2, t2, p3, r2);
  EXPECT_TRUE(rep.ok()) << rep;
  PairMorphism s = symmetry(r2, p3);
  EXPECT_EQ(compose_morphisms(symmetry(p3, r2), s), identity_morphism(s.source));
  EXPECT_TRUE(validate_morphism(left_unitor(r2)).ok());
  EXPECT_TRUE(validate_morphism(right_unitor(r2)).ok());
}

TEST(Faithfulness, IsomorphicGroupoidsGiveIsomorphicPairs) {
  EXPECT_TRUE(check_faithful_iso(make_pair(cyclic_transformation(3)), make_pair(r(3))).ok());
  EXPECT_TRUE(check_faithful_iso(make_pair(g3()), make_pair(disjoint_union(trivial(1), full_relation(2)))).ok());
}

TEST(Faithfulness, WeylDistinguishesPairs) {
  EXPECT_TRUE(check_weyl_distinguishes(make_pair(r(2)), make_pair(t(4))).ok());
  EXPECT_TRUE(check_weyl_distinguishes(make_pair(r(3)), make_pair(g3())).ok());
  EXPECT_FALSE(oracle::principal_isomorphism(full_relation(2), trivial(4)));
}

}  // namespace
}  // namespace weylkit
