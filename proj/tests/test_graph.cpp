#include <gtest/gtest.h>

#include "support.hpp"

namespace spined {
namespace {

TEST(Graph, Constructors) {
  EXPECT_EQ(complete_graph(0).order(), 0u);
  EXPECT_EQ(complete_graph(4).edge_count(), 6u);
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(c5.edge_count(), 5u);
  for (std::size_t v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2u);
  EXPECT_EQ(discrete_graph(3).edge_count(), 0u);
  EXPECT_THROW(cycle_graph(2), Error);
}

TEST(Graph, RejectsLoopsAndOutOfRangeVertices) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), Error);
  EXPECT_THROW(g.add_edge(0, 3), Error);
  g.add_edge(2, 0);
  g.add_edge(0, 2);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}}));
}

TEST(Graph, VertexCapIsAnError) {
  try {
    Graph g(65);
    FAIL() << "expected cap-exceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::cap_exceeded);
  }
  EXPECT_NO_THROW(Graph(64));
}

TEST(Morphism, HomomorphismAndMonomorphism) {
  const Graph k3 = complete_graph(3);
  const GraphMorphism id{k3, k3, {0, 1, 2}};
  EXPECT_TRUE(is_homomorphism(id));
  EXPECT_TRUE(is_monomorphism(id));

  const GraphMorphism collapse{discrete_graph(2), complete_graph(1), {0, 0}};
  EXPECT_TRUE(is_homomorphism(collapse));
  EXPECT_FALSE(is_monomorphism(collapse));

  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      EXPECT_FALSE(is_homomorphism(GraphMorphism{complete_graph(2), discrete_graph(2), {a, b}}));
    }
  }
  EXPECT_FALSE(is_homomorphism(GraphMorphism{k3, k3, {0, 1}}));
  EXPECT_FALSE(is_homomorphism(GraphMorphism{k3, k3, {0, 1, 3}}));
}

TEST(Morphism, EnumerationExamples) {
  EXPECT_EQ(enumerate_monomorphisms(complete_graph(1), complete_graph(3)).size(), 3u);
  EXPECT_EQ(enumerate_monomorphisms(complete_graph(2), complete_graph(3)).size(), 3u * 2u);
  EXPECT_TRUE(enumerate_monomorphisms(complete_graph(3), cycle_graph(4)).empty());
}

TEST(Morphism, EnumerationIsLexicographicAndComplete) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    const Graph g = random_graph(rng, 1 + uniform_below(rng, 4), 0.5);
    const Graph h = random_graph(rng, 1 + uniform_below(rng, 5), 0.6);
    const auto found = enumerate_monomorphisms(g, h);
    // brute force over every map
    std::vector<VertexMap> expected;
    VertexMap map(g.order(), 0);
    auto rec = [&](auto&& self, std::size_t v) -> void {
      if (v == g.order()) {
        if (is_monomorphism(GraphMorphism{g, h, map})) expected.push_back(map);
        return;
      }
      for (std::size_t t = 0; t < h.order(); ++t) {
        map[v] = t;
        self(self, v + 1);
      }
    };
    rec(rec, 0);
    ASSERT_EQ(found.size(), expected.size());
    for (std::size_t i = 0; i < found.size(); ++i) EXPECT_EQ(found[i].map, expected[i]);
  }
}

TEST(Morphism, EnumerationRespectsCap) {
  EXPECT_THROW(enumerate_monomorphisms(complete_graph(9), complete_graph(9)), Error);
  EXPECT_EQ(enumerate_monomorphisms(complete_graph(9), complete_graph(9), 9).size(), 362880u);
}

TEST(CliqueSum, TwoTrianglesSharingAnEdge) {
  const Graph k2 = complete_graph(2), k3 = complete_graph(3);
  const auto c = clique_sum(GraphMorphism{k2, k3, {0, 1}}, GraphMorphism{k2, k3, {0, 1}});
  EXPECT_EQ(c.apex.order(), 4u);
  EXPECT_EQ(c.apex.edge_count(), 5u);
  EXPECT_TRUE(is_monomorphism(c.left));
  EXPECT_TRUE(is_monomorphism(c.right));
  EXPECT_EQ(c.left.map, (VertexMap{0, 1, 2}));
  EXPECT_EQ(c.right.map, (VertexMap{0, 1, 3}));
}

TEST(CliqueSum, AbsorbingASubClique) {
  const Graph g = cycle_graph(5);
  const Graph k2 = complete_graph(2);
  const auto c = clique_sum(GraphMorphism{k2, g, {1, 2}}, GraphMorphism{k2, k2, {0, 1}});
  EXPECT_EQ(c.apex, g);
}

TEST(CliqueSum, PathFromTwoEdges) {
  const Graph k1 = complete_graph(1), k2 = complete_graph(2);
  const auto c = clique_sum(GraphMorphism{k1, k2, {0}}, GraphMorphism{k1, k2, {0}});
  EXPECT_EQ(c.apex.order(), 3u);
  EXPECT_EQ(c.apex.edge_count(), 2u);
  EXPECT_TRUE(are_isomorphic(c.apex, path_graph(3)));
  const auto inst = grph_mono_instance();
  EXPECT_EQ(inst.proxy_pushout({1, {k1, k2, {0}}, {k1, k2, {0}}}).apex, c.apex);
  EXPECT_EQ(inst.spine(3), complete_graph(3));
}

TEST(CliqueSum, Errors) {
  const Graph k1 = complete_graph(1), k2 = complete_graph(2);
  try {
    clique_sum(GraphMorphism{discrete_graph(2), k2, {0, 1}}, GraphMorphism{discrete_graph(2), k2, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::apex_mismatch);
  }
  try {
    clique_sum(GraphMorphism{k1, k2, {0}}, GraphMorphism{k2, k2, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::apex_mismatch);
  }
  try {
    clique_sum(GraphMorphism{k2, k2, {0, 0}}, GraphMorphism{k2, k2, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::legs_not_mono);
  }
}

TEST(CliqueSum, SymmetricUpToIsomorphism) {
  for (const auto& s : testing::graph_spans(150, 31, 5)) {
    const auto ab = clique_sum(s.left, s.right).apex;
    const auto ba = clique_sum(s.right, s.left).apex;
    EXPECT_TRUE(are_isomorphic(ab, ba));
  }
}

// Every cocone in the homomorphism category over the span factors through
// the clique sum exactly once.
TEST(CliqueSum, UniversalPropertyAmongHomomorphisms) {
  std::mt19937_64 rng(17);
  std::size_t cocones = 0;
  for (const auto& s : testing::graph_spans(25, 41, 4)) {
    const auto c = clique_sum(s);
    for (int k = 0; k < 3; ++k) {
      const Graph z = random_graph(rng, 1 + uniform_below(rng, 4), 0.7);
      SearchOptions all;
      for (const auto& z1 : enumerate_graph_morphisms(s.left.codomain, z, GraphMorphismKind::homo, all)) {
        for (const auto& z2 : enumerate_graph_morphisms(s.right.codomain, z, GraphMorphismKind::homo, all)) {
          if (!(compose(s.left, z1) == compose(s.right, z2))) continue;
          ++cocones;
          std::size_t factorizations = 0;
          for (const auto& m : enumerate_graph_morphisms(c.apex, z, GraphMorphismKind::homo, all)) {
            if (compose(c.left, m) == z1 && compose(c.right, m) == z2) ++factorizations;
          }
          EXPECT_EQ(factorizations, 1u);
        }
      }
    }
  }
  EXPECT_GT(cocones, 100u);
}

TEST(ApexExtension, Examples) {
  EXPECT_EQ(apex_extension(complete_graph(0)), complete_graph(1));
  for (std::size_t n = 0; n < 6; ++n) EXPECT_EQ(apex_extension(complete_graph(n)), complete_graph(n + 1));
  const Graph w4 = apex_extension(cycle_graph(4));
  EXPECT_EQ(w4.order(), 5u);
  EXPECT_EQ(w4.edge_count(), 8u);
}

TEST(ApexExtension, RaisesTreewidthByOne) {
  for (const Graph& g : testing::graph_corpus(6)) {
    const auto before = treewidth_dp(g).delta();
    EXPECT_EQ(treewidth_dp(apex_extension(g)).delta(), before + 1);
    EXPECT_EQ(triangulation_graph(apex_extension(g)), triangulation_graph(g) + 1);
  }
}

TEST(Complement, Examples) {
  for (std::size_t n = 0; n < 6; ++n) EXPECT_EQ(complement(complete_graph(n)), discrete_graph(n));
  const auto iso = find_isomorphism(complement(cycle_graph(5)), cycle_graph(5));
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_monomorphism(GraphMorphism{complement(cycle_graph(5)), cycle_graph(5), *iso}));
}

TEST(Complement, IsAnInvolution) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng, uniform_below(rng, 12), 0.4);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(Isomorphism, DetectsRelabelingsAndRejectsNonIsomorphicPairs) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(rng, 1 + uniform_below(rng, 7), 0.5);
    VertexMap perm(g.order());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    EXPECT_TRUE(are_isomorphic(g, h));
  }
  EXPECT_FALSE(are_isomorphic(path_graph(4), complete_graph(4)));
  // same degree sequence, different graphs
  Graph two_triangles(6);
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}) two_triangles.add_edge(u, v);
  EXPECT_FALSE(are_isomorphic(two_triangles, cycle_graph(6)));
}

TEST(Instance, EveryGraphOnSevenVerticesEmbedsInItsClique) {
  const auto inst = grph_mono_instance();
  for (const Graph& g : testing::graph_classes(7)[7]) {
    const auto w = check_sc1(inst, g);
    EXPECT_EQ(w.index, 7u);
    EXPECT_TRUE(inst.is_morphism(w.morphism));
  }
}

TEST(Corpus, ClassCountsMatchKnownValues) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  const auto& classes = testing::graph_classes(7);
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(classes[n].size(), expected[n]) << n;
}

}  // namespace
}  // namespace spined
