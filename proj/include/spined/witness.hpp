#ifndef SPINED_WITNESS_HPP
#define SPINED_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spined/chordal.hpp"
#include "spined/core.hpp"
#include "spined/error.hpp"
#include "spined/graph.hpp"
#include "spined/ndiv.hpp"
#include "spined/poset.hpp"

namespace spined {

struct CliqueFailureRow {
  std::string value;
  std::size_t generalized_clique = 0;
  std::size_t max_prime_exponent = 0;
};

struct CliqueFailureReport {
  CliqueFailureRow left;   // 16
  CliqueFailureRow right;  // 81
  CliqueFailureRow apex;   // lcm(16, 81)
  std::vector<std::string> spine;  // Ω_0 .. Ω_6
  bool apex_is_spine = false;      // 1296 = Ω_4
  bool violation = false;
  SpinalReport clique_spinal;
  SpinalReport exponent_spinal;
};

inline SFunctor<DivObject> ndiv_generalized_clique() {
  return {"generalized-clique", [](const DivObject& d) { return generalized_clique(ndiv_instance(), d); }};
}

inline SFunctor<DivObject> ndiv_max_prime_exponent() {
  return {"max-prime-exponent", [](const DivObject& d) { return max_prime_exponent(d); }};
}

inline std::vector<Span<DivObject>> sample_ndiv_spans(std::size_t count, std::uint64_t seed,
                                                      std::uint64_t max_value = 10000) {
  return sample_spans(
      ndiv_instance(), [max_value](std::mt19937_64& rng) { return DivObject(1 + uniform_below(rng, max_value)); },
      count, seed);
}

/// ω on 16, 81 and their lcm; max_prime_exponent checked on a seeded sample.
inline CliqueFailureReport demo_clique_failure(std::uint64_t seed = 0, std::size_t spans = 100) {
  const auto inst = ndiv_instance();
  auto row = [&](const DivObject& d) {
    return CliqueFailureRow{d.to_string(), generalized_clique(inst, d), max_prime_exponent(d)};
  };
  const DivObject a(16), b(81);
  const DivObject c = lcm(a, b);
  CliqueFailureReport r;
  r.left = row(a);
  r.right = row(b);
  r.apex = row(c);
  for (std::size_t n = 0; n <= 6; ++n) r.spine.push_back(ndiv_spine(n).to_string());
  r.apex_is_spine = c == ndiv_spine(4);
  r.violation = r.apex.generalized_clique != std::max(r.left.generalized_clique, r.right.generalized_clique);

  std::vector<Span<DivObject>> quoted{{1, {ndiv_spine(1), a, {}}, {ndiv_spine(1), b, {}}}};
  r.clique_spinal = check_spinal(inst, ndiv_generalized_clique(), quoted, 6);
  r.exponent_spinal = check_spinal(inst, ndiv_max_prime_exponent(), sample_ndiv_spans(spans, seed), 6);
  return r;
}

struct PosetFailureReport {
  Poset pushout;
  std::optional<VertexMap> isomorphism_to_chain;  // into L_4
  std::size_t spine_index = 0;                    // least n with P -> L_n
  std::size_t forced_value = 0;                   // F[P] = F[Ω_4]
  std::size_t max_of_parts = 0;                   // max(F[Ω_3], F[Ω_2])
  bool violation = false;
  // The span after extending Ω_2 to Ω_3 along 0 -> 0, 1 -> 1.
  std::size_t extended_index = 0;
  std::size_t extended_max = 0;
  bool extended_violation = false;
  bool extended_mediator_unique = false;
};

/// Ω_1 -> Ω_3 at the top element, Ω_1 -> Ω_2 at the bottom element.
inline PosetFailureReport demo_poset_no_sfunctor() {
  const auto inst = poset_instance();
  const Poset l1 = chain_poset(1), l2 = chain_poset(2), l3 = chain_poset(3);
  Span<Poset> span{1, {l1, l3, {2}}, {l1, l2, {0}}};
  const auto cocone = poset_pushout(span);
  PosetFailureReport r;
  r.pushout = cocone.apex;
  r.isomorphism_to_chain = find_poset_isomorphism(cocone.apex, chain_poset(4));
  r.spine_index = object_order(inst, cocone.apex);
  r.forced_value = r.isomorphism_to_chain ? 4 : r.spine_index;
  r.max_of_parts = std::max(l3.size(), l2.size());
  r.violation = r.forced_value != r.max_of_parts;

  const PosetMorphism ext_left = identity_arrow(inst, l3);
  const PosetMorphism ext_right{l2, l3, {0, 1}};
  const auto verdict = check_sc2(inst, span, ext_left, ext_right);
  r.extended_index = object_order(inst, verdict.target.apex);
  r.extended_max = std::max(ext_left.codomain.size(), ext_right.codomain.size());
  r.extended_violation = find_poset_isomorphism(verdict.target.apex, chain_poset(r.extended_index)).has_value() &&
                         r.extended_index != r.extended_max;
  r.extended_mediator_unique = verdict.unique;
  return r;
}

/// Order in GRPH_mono. The first injective map into K_|V| is found at once,
/// so the enumeration cap is lifted to the vertex limit.
inline SFunctor<Graph> order_sfunctor() {
  auto inst = grph_mono_instance();
  inst.enumeration_cap = Graph::kMaxVertices;
  return {"order", [inst](const Graph& g) { return object_order(inst, g); }};
}

inline SFunctor<Graph> clique_number_sfunctor() {
  return {"clique-number", [](const Graph& g) { return clique_number(g); }};
}

inline SFunctor<Graph> triangulation_sfunctor() {
  return {"delta", [](const Graph& g) { return triangulation_graph(g); }};
}

struct OrderFailureReport {
  Graph apex;
  std::size_t apex_order = 0;
  std::size_t left_order = 0;
  std::size_t right_order = 0;
  SpinalReport order;
  SpinalReport clique;
  SpinalReport delta;
};

/// Two copies of K_2 glued at one vertex.
inline OrderFailureReport demo_order_failure() {
  const auto inst = grph_mono_instance();
  const Graph k1 = complete_graph(1), k2 = complete_graph(2);
  std::vector<Span<Graph>> spans{{1, {k1, k2, {0}}, {k1, k2, {0}}}};
  const auto cocone = clique_sum(spans.front());
  OrderFailureReport r;
  r.apex = cocone.apex;
  r.apex_order = object_order(inst, cocone.apex);
  r.left_order = object_order(inst, k2);
  r.right_order = object_order(inst, k2);
  r.order = check_spinal(inst, order_sfunctor(), spans, 6);
  r.clique = check_spinal(inst, clique_number_sfunctor(), spans, 6);
  r.delta = check_spinal(inst, triangulation_sfunctor(), spans, 6);
  return r;
}

struct PseudoChordalReport {
  std::size_t n = 0;
  Graph graph;  // K_n glued to C_n at one vertex
  bool chordal = false;
  std::optional<GraphMorphism> from_clique;  // K_n -> graph
  std::optional<GraphMorphism> into_double;  // graph -> K_n glued to K_n
  std::size_t delta = 0;
};

inline constexpr std::size_t kPseudoChordalMin = 3;
inline constexpr std::size_t kPseudoChordalMax = 8;

inline PseudoChordalReport pseudo_chordal_witness(std::size_t n) {
  if (n < kPseudoChordalMin || n > kPseudoChordalMax) {
    throw Error(Errc::out_of_range, "pseudo_chordal_witness needs 3 <= n <= 8");
  }
  const Graph k1 = complete_graph(1), kn = complete_graph(n);
  const Graph g = clique_sum(GraphMorphism{k1, kn, {0}}, GraphMorphism{k1, cycle_graph(n), {0}}).apex;
  const Graph doubled = clique_sum(GraphMorphism{k1, kn, {0}}, GraphMorphism{k1, kn, {0}}).apex;
  PseudoChordalReport r;
  r.n = n;
  r.graph = g;
  r.chordal = is_chordal(g).chordal;
  SearchOptions opts;
  opts.limit = 1;
  opts.cap = g.order();
  auto first = enumerate_graph_morphisms(kn, g, GraphMorphismKind::mono, opts);
  auto second = enumerate_graph_morphisms(g, doubled, GraphMorphismKind::mono, opts);
  if (!first.empty()) r.from_clique = first.front();
  if (!second.empty()) r.into_double = second.front();
  r.delta = triangulation_graph(g);
  return r;
}

}  // namespace spined

#endif  // SPINED_WITNESS_HPP
