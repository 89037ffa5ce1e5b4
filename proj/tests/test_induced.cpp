#include <gtest/gtest.h>

#include "support.hpp"

namespace spined {
namespace {

std::size_t bell(std::size_t n) {
  std::vector<std::vector<std::size_t>> t{{1}};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> row{t.back().back()};
    for (std::size_t j = 0; j < i; ++j) row.push_back(row.back() + t.back()[j]);
    t.push_back(row);
  }
  return t[n][0];
}

TEST(Labeling, Construction) {
  const Labeling lab = make_labeling(path_graph(3), {1, 0, 1});
  EXPECT_EQ(lab.classes(), 2u);
  EXPECT_EQ(lab.label_class(1), bit(0) | bit(2));
  EXPECT_THROW(make_labeling(path_graph(3), {0, 2, 2}), Error);
  EXPECT_THROW(make_labeling(path_graph(3), {0, 1}), Error);
  EXPECT_THROW(make_labeling(path_graph(3), {0, 1, 3}), Error);
  EXPECT_EQ(normalize_labels({7, 3, 7, 9}), (std::vector<std::size_t>{0, 1, 0, 2}));
}

TEST(Partitions, CountsAreBellNumbers) {
  for (std::size_t n = 0; n <= 8; ++n) {
    std::size_t count = 0;
    std::set<std::vector<std::size_t>> seen;
    for_each_partition(n, [&](const std::vector<std::size_t>& rgs) {
      ++count;
      EXPECT_EQ(normalize_labels(rgs), rgs);
      seen.insert(rgs);
    });
    EXPECT_EQ(count, bell(n));
    EXPECT_EQ(seen.size(), count);
  }
}

TEST(Quotient, Examples) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_small_graph(rng, 7);
    EXPECT_EQ(quotient_graph(identity_labeling(g)), g);
    EXPECT_EQ(quotient_graph(constant_labeling(g)).order(), g.order() == 0 ? 0u : 1u);
    EXPECT_EQ(quotient_graph(constant_labeling(g)).edge_count(), 0u);
  }
  EXPECT_EQ(quotient_graph(make_labeling(cycle_graph(4), {0, 1, 0, 1})), complete_graph(2));
}

TEST(Quotient, EdgesMatchClassAdjacency) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 200; ++i) {
    const Labeling lab = random_small_labeling(rng, 7);
    const Graph q = quotient_graph(lab);
    for (std::size_t a = 0; a < q.order(); ++a) {
      for (std::size_t b = a + 1; b < q.order(); ++b) {
        bool joined = false;
        for (auto [u, v] : lab.base.edges()) {
          const auto lu = lab.labels[u], lv = lab.labels[v];
          joined = joined || (lu == a && lv == b) || (lu == b && lv == a);
        }
        EXPECT_EQ(q.has_edge(a, b), joined);
      }
    }
  }
}

TEST(Module, Examples) {
  const Graph p3 = path_graph(3);
  for (std::size_t v = 0; v < 3; ++v) EXPECT_TRUE(is_module(p3, bit(v)));
  EXPECT_TRUE(is_module(p3, p3.vertex_set()));
  EXPECT_FALSE(is_module(p3, bit(0) | bit(1)));
  EXPECT_TRUE(is_module(p3, bit(0) | bit(2)));
}

TEST(Module, LabelingPredicates) {
  std::mt19937_64 rng(3);
  const Graph g = random_small_graph(rng, 6);
  EXPECT_TRUE(is_modular_labeling(identity_labeling(g)));
  EXPECT_TRUE(is_proper_coloring(identity_labeling(g)));
  const Graph k2 = complete_graph(2);
  EXPECT_TRUE(is_modular_labeling(constant_labeling(k2)));
  EXPECT_FALSE(is_proper_coloring(constant_labeling(k2)));
  const Labeling sides = make_labeling(cycle_graph(4), {0, 1, 0, 1});
  EXPECT_TRUE(is_modular_labeling(sides));
  EXPECT_TRUE(is_proper_coloring(sides));
}

TEST(ModularTreewidth, Examples) {
  const auto c4 = modular_treewidth(cycle_graph(4));
  EXPECT_EQ(c4.value, 1u);
  ASSERT_TRUE(c4.witness.has_value());
  EXPECT_TRUE(is_modular_labeling(*c4.witness));
  EXPECT_EQ(c4.with_trivial, 0u);

  // {0,2} is a module of P_3 too; its quotient K_2 has the same width
  const auto p3 = modular_treewidth(path_graph(3));
  EXPECT_EQ(p3.value, 1u);
  EXPECT_EQ(p3.with_trivial, 0u);
  EXPECT_TRUE(is_modular_labeling(make_labeling(path_graph(3), {0, 1, 0})));

  EXPECT_EQ(modular_treewidth(complete_graph(1)).value, 0u);
  // any two-class split of K_5 is modular and collapses it to K_2
  EXPECT_EQ(modular_treewidth(complete_graph(5)).value, 1u);
  EXPECT_EQ(modular_treewidth(cycle_graph(5)).value, 2u);
  EXPECT_THROW(modular_treewidth(Graph(11)), Error);
}

TEST(ModularTreewidth, BoundedByTreewidthAndWitnessed) {
  for (const Graph& g : testing::graph_corpus(7)) {
    if (g.order() == 0) continue;
    const auto m = modular_treewidth(g);
    ASSERT_TRUE(m.value && m.witness);
    EXPECT_LE(*m.value, *treewidth_dp(g).treewidth);
    EXPECT_TRUE(is_modular_labeling(*m.witness));
    EXPECT_EQ(treewidth_dp(quotient_graph(*m.witness)).treewidth, m.value);
    if (g.order() >= 2) {
      EXPECT_GE(m.witness->classes(), 2u);
      EXPECT_EQ(m.with_trivial, 0u);
    }
  }
}

TEST(ChromaticTreewidth, Examples) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(chromatic_treewidth(discrete_graph(n)).value, 0u);
    EXPECT_EQ(chromatic_treewidth(complete_graph(n)).value, n - 1);
  }
  EXPECT_EQ(chromatic_treewidth(cycle_graph(4)).value, 1u);
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3u);
  EXPECT_EQ(chromatic_number(cycle_graph(6)), 2u);
  EXPECT_EQ(chromatic_number(complete_graph(6)), 6u);
}

TEST(ChromaticTreewidth, BoundedByChromaticNumber) {
  for (const Graph& g : testing::graph_corpus(7)) {
    if (g.order() == 0) continue;
    const auto c = chromatic_treewidth(g);
    ASSERT_TRUE(c.value && c.witness);
    EXPECT_LE(*c.value + 1, chromatic_number(g));
    EXPECT_TRUE(is_proper_coloring(*c.witness));
    // a quotient by a proper colouring keeps every clique
    EXPECT_GE(*c.value + 1, clique_number(g));
  }
}

TEST(InducedInstance, LabeledGraphs) {
  const auto inst = labeled_graph_instance();
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(inst.spine(n), identity_labeling(complete_graph(n)));
  const Labeling lab = make_labeling(cycle_graph(4), {0, 1, 0, 1});
  EXPECT_EQ(object_order(inst, lab), 2u);
  EXPECT_EQ(generalized_clique(inst, lab), 2u);
  EXPECT_EQ(labeled_triangulation(lab), 2u);
  EXPECT_EQ(labeled_triangulation(identity_labeling(cycle_graph(5))), 3u);
}

TEST(InducedInstance, HomsAreInheritedFromQuotients) {
  const auto inst = labeled_graph_instance();
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const Labeling a = random_small_labeling(rng, 4);
    const Labeling b = random_small_labeling(rng, 5);
    const auto arrows = enumerate_morphisms(inst, a, b);
    EXPECT_EQ(arrows.size(), enumerate_monomorphisms(quotient_graph(a), quotient_graph(b)).size());
    for (const auto& m : arrows) EXPECT_TRUE(inst.is_morphism(m));
  }
}

TEST(InducedInstance, SpinedAxiomsAndTriangulation) {
  const auto inst = labeled_graph_instance();
  const auto spans = sample_spans(
      inst, [](std::mt19937_64& rng) { return random_small_labeling(rng, 6); }, 200, 19);
  std::mt19937_64 rng(20);
  auto grow = [](std::mt19937_64& r, const Labeling& lab) {
    return identity_labeling(random_supergraph(r, quotient_graph(lab), uniform_below(r, 2)));
  };
  for (std::size_t i = 0; i < 40; ++i) {
    const auto& s = spans[i];
    const auto v = check_sc2(inst, s, random_extension(inst, s.left.codomain, grow, rng),
                             random_extension(inst, s.right.codomain, grow, rng));
    EXPECT_TRUE(v.unique);
  }
  const SFunctor<Labeling> delta{"delta", [](const Labeling& l) { return labeled_triangulation(l); }};
  EXPECT_TRUE(check_spinal(inst, delta, spans, 6).passed());
  const SFunctor<Labeling> omega{"clique-number", [](const Labeling& l) { return clique_number(quotient_graph(l)); }};
  EXPECT_TRUE(check_spinal(inst, omega, spans, 6).passed());
}

TEST(InducedInstance, Errors) {
  const auto base = grph_mono_instance();
  const auto quotient = [](const Labeling& l) { return quotient_graph(l); };
  const auto missing = induced_instance<Labeling, Graph>(
      base, quotient, [](std::size_t n) { return identity_labeling(discrete_graph(n)); },
      [](const Graph& g) { return identity_labeling(g); });
  EXPECT_NO_THROW(missing.spine(1));
  try {
    missing.spine(2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::surjection_misses_spine);
  }
  const auto wrong_apex = induced_instance<Labeling, Graph>(
      base, quotient, [](std::size_t n) { return identity_labeling(complete_graph(n)); },
      [](const Graph& g) { return constant_labeling(g); });
  const Labeling k2 = identity_labeling(complete_graph(2));
  const Labeling k1 = identity_labeling(complete_graph(1));
  try {
    wrong_apex.proxy_pushout({1, {k1, k2, {0}}, {k1, k2, {0}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_distinguished_preimage);
  }
}

TEST(InducedInstance, EveryQuotientDecompositionValidates) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 200; ++i) {
    const Labeling lab = random_small_labeling(rng, 8);
    const Graph q = quotient_graph(lab);
    const auto r = treewidth_dp(q);
    EXPECT_TRUE(validate_tree_decomposition(q, r.decomposition).valid());
  }
}

}  // namespace
}  // namespace spined
