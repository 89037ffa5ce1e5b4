#include <gtest/gtest.h>

#include "support.hpp"

namespace spined {
namespace {

SFunctor<Graph> independence() {
  return {"independence-number", [](const Graph& g) { return independence_number(g); }};
}

SFunctor<Graph> complemented_delta() {
  return {"complemented-delta", [](const Graph& g) { return complemented_treewidth(g); }};
}

TEST(ReflexiveHomomorphism, Examples) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_small_graph(rng, 7);
    EXPECT_TRUE(is_reflexive_homomorphism(identity_arrow(rmono_instance(), g)));
  }
  for (const auto& m : enumerate_graph_morphisms(discrete_graph(2), discrete_graph(4), GraphMorphismKind::mono, {})) {
    EXPECT_TRUE(is_reflexive_homomorphism(m));
  }
  EXPECT_FALSE(is_reflexive_homomorphism({discrete_graph(2), complete_graph(2), {0, 1}}));
  EXPECT_TRUE(is_reflexive_homomorphism({complete_graph(2), complete_graph(2), {1, 0}}));
  // collapsing two vertices never reflects anything
  EXPECT_TRUE(is_reflexive_homomorphism({discrete_graph(2), complete_graph(1), {0, 0}}));
  EXPECT_FALSE(is_reflexive_monomorphism({discrete_graph(2), complete_graph(1), {0, 0}}));
}

TEST(ReflexiveMonomorphism, EnumerationMatchesFilter) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_small_graph(rng, 4);
    const Graph h = random_small_graph(rng, 5);
    const auto found = enumerate_graph_morphisms(g, h, GraphMorphismKind::reflexive_mono, {});
    std::size_t expected = 0;
    for (const auto& m : enumerate_graph_morphisms(g, complete_graph(h.order()), GraphMorphismKind::mono, {})) {
      if (is_reflexive_monomorphism({g, h, m.map})) ++expected;
    }
    EXPECT_EQ(found.size(), expected);
    for (const auto& m : found) EXPECT_TRUE(is_reflexive_monomorphism(m));
  }
}

TEST(IndependentGluing, FullOverlapAbsorbs) {
  const Graph d2 = discrete_graph(2);
  const auto j = independent_gluing({d2, d2, {0, 1}}, {d2, d2, {0, 1}});
  EXPECT_EQ(j.apex, d2);
  EXPECT_EQ(j.shared, 2u);
}

TEST(IndependentGluing, OneSharedVertex) {
  const Graph d1 = discrete_graph(1), d2 = discrete_graph(2);
  const auto j = independent_gluing({d1, d2, {0}}, {d1, d2, {0}});
  EXPECT_EQ(j.apex, Graph(3, {{1, 2}}));
  EXPECT_EQ(j.left_leg.map, (VertexMap{0, 1}));
  EXPECT_EQ(j.right_leg.map, (VertexMap{0, 2}));
  const auto sum = clique_sum(complement_functor({d1, d2, {0}}), complement_functor({d1, d2, {0}}));
  EXPECT_EQ(complement(j.apex), sum.apex);
}

TEST(IndependentGluing, NothingSharedJoinsEverything) {
  const Graph d0 = discrete_graph(0), k2 = complete_graph(2);
  const auto j = independent_gluing({d0, k2, {}}, {d0, k2, {}});
  EXPECT_EQ(j.apex, complete_graph(4));
  EXPECT_EQ(j.apex.edge_count(), 6u);
  const auto sum = clique_sum(GraphMorphism{complete_graph(0), discrete_graph(2), {}},
                              GraphMorphism{complete_graph(0), discrete_graph(2), {}});
  EXPECT_EQ(complement(j.apex), sum.apex);
}

TEST(IndependentGluing, Errors) {
  const Graph d1 = discrete_graph(1), d2 = discrete_graph(2), k2 = complete_graph(2);
  try {
    independent_gluing({k2, k2, {0, 1}}, {k2, k2, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::legs_invalid);
  }
  try {
    independent_gluing({d2, k2, {0, 1}}, {d2, d2, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::legs_invalid);
  }
  try {
    independent_gluing({d1, d2, {0}}, {d2, d2, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::legs_invalid);
  }
}

TEST(IndependentGluing, InvariantsOnSampledSpans) {
  for (const auto& s : testing::rmono_spans(200, 3, 6)) {
    const auto j = independent_gluing(s);
    ASSERT_TRUE(is_reflexive_monomorphism(j.left_leg));
    ASSERT_TRUE(is_reflexive_monomorphism(j.right_leg));
    EXPECT_TRUE(is_independent(j.apex, to_bits(j.left_leg.map) & to_bits(j.right_leg.map)));
    const Bits left_rest = to_bits(j.left_leg.map) & ~to_bits(j.right_leg.map);
    const Bits right_rest = to_bits(j.right_leg.map) & ~to_bits(j.left_leg.map);
    for_each_bit(left_rest, [&](std::size_t u) { EXPECT_TRUE(is_subset(right_rest, j.apex.neighbors(u))); });
  }
}

TEST(Complementation, CarriesGluingsToCliqueSums) {
  for (const auto& s : testing::rmono_spans(200, 21, 6)) {
    const auto j = independent_gluing(s);
    const auto sum = clique_sum(complement_functor(s.left), complement_functor(s.right));
    EXPECT_EQ(complement(j.apex), sum.apex);
    EXPECT_EQ(complement_functor(j.left_leg).map, sum.left.map);
    EXPECT_EQ(complement_functor(j.right_leg).map, sum.right.map);
  }
}

TEST(Complementation, FunctorExamples) {
  const Graph c5 = cycle_graph(5);
  const auto id = identity_arrow(rmono_instance(), c5);
  const auto image = complement_functor(id);
  EXPECT_EQ(image.domain, complement(c5));
  EXPECT_EQ(image.map, id.map);
  for (const auto& m :
       enumerate_graph_morphisms(discrete_graph(2), discrete_graph(3), GraphMorphismKind::reflexive_mono, {})) {
    const auto c = complement_functor(m);
    EXPECT_EQ(c.domain, complete_graph(2));
    EXPECT_EQ(c.codomain, complete_graph(3));
    EXPECT_TRUE(is_monomorphism(c));
  }
  try {
    complement_functor({discrete_graph(2), complete_graph(2), {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_reflexive_mono);
  }
}

TEST(Complementation, RoundTripsMorphisms) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_small_graph(rng, 5);
    const Graph h = random_reflexive_target(rng, g, uniform_below(rng, 3));
    for (const auto& m : enumerate_graph_morphisms(g, h, GraphMorphismKind::reflexive_mono, {})) {
      const auto back = complement_functor_inverse(complement_functor(m));
      EXPECT_EQ(back.domain, m.domain);
      EXPECT_EQ(back.codomain, m.codomain);
      EXPECT_EQ(back.map, m.map);
    }
  }
}

TEST(ComplementedTreewidth, Examples) {
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(complemented_treewidth(complete_graph(n)), 1u);
    EXPECT_EQ(complemented_treewidth(discrete_graph(n)), n);
  }
  ASSERT_TRUE(are_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  EXPECT_EQ(complemented_treewidth(cycle_graph(5)), 3u);
}

TEST(ComplementedTreewidth, EqualsNativeSearchInRmono) {
  for (const Graph& g : testing::graph_corpus(5)) {
    EXPECT_EQ(native_rmono_triangulation(g), complemented_treewidth(g));
  }
  // a spare vertex never helps, except that it makes the empty graph non-empty
  for (const Graph& g : testing::graph_corpus(4)) {
    if (g.order() == 0) continue;
    EXPECT_EQ(native_rmono_triangulation(g, 1), complemented_treewidth(g));
  }
}

TEST(RmonoInstance, Spine) {
  const auto inst = rmono_instance();
  EXPECT_EQ(inst.spine(3), discrete_graph(3));
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(generalized_clique(inst, discrete_graph(n)), n);
}

TEST(RmonoInstance, Sc1OnAllSmallGraphs) {
  const auto inst = rmono_instance();
  for (const Graph& g : testing::graph_corpus(7)) {
    const auto w = check_sc1(inst, g);
    EXPECT_EQ(w.index, g.order());
    EXPECT_TRUE(is_reflexive_monomorphism(w.morphism));
  }
}

TEST(RmonoInstance, GeneralizedCliqueIsIndependenceNumber) {
  const auto inst = rmono_instance();
  for (const Graph& g : testing::graph_corpus(6)) {
    EXPECT_EQ(generalized_clique(inst, g), testing::brute_clique_number(complement(g)));
  }
}

TEST(RmonoInstance, Sc2OnSampledSpans) {
  const auto inst = rmono_instance();
  std::mt19937_64 rng(2);
  auto grow = [](std::mt19937_64& r, const Graph& g) { return random_reflexive_target(r, g, uniform_below(r, 2)); };
  for (const auto& s : testing::rmono_spans(80, 4, 5)) {
    const auto el = random_extension(inst, s.left.codomain, grow, rng);
    const auto er = random_extension(inst, s.right.codomain, grow, rng);
    const auto v = check_sc2(inst, s, el, er);
    EXPECT_TRUE(v.unique);
    EXPECT_EQ(v.commuting, 1u);
  }
}

TEST(RmonoInstance, IndependenceAndDeltaAreSFunctors) {
  const auto inst = rmono_instance();
  const auto spans = testing::rmono_spans(300, 15, 6);
  EXPECT_TRUE(check_spinal(inst, independence(), spans, 6).passed());
  EXPECT_TRUE(check_spinal(inst, complemented_delta(), spans, 6).passed());
}

TEST(RmonoInstance, NaiveGluingAdmitsNoSpinalFunctor) {
  auto inst = rmono_instance();
  inst.proxy_pushout = [](const Span<Graph>& span) { return naive_gluing(span); };
  const Graph d1 = discrete_graph(1), d2 = discrete_graph(2);
  const std::vector<Span<Graph>> spans{{1, {d1, d2, {0}}, {d1, d2, {0}}}};
  EXPECT_EQ(inst.proxy_pushout(spans.front()).apex, discrete_graph(3));
  // SF1 pins F(K̄_3) = 3 while SF2 asks for max(2, 2)
  for (const auto& f : {independence(), complemented_delta()}) {
    const auto report = check_spinal(inst, f, spans, 3);
    EXPECT_TRUE(report.sf1());
    ASSERT_EQ(report.sf2_failures.size(), 1u);
    EXPECT_EQ(report.sf2_failures.front().apex_value, 3u);
  }
}

}  // namespace
}  // namespace spined
