#ifndef SPINED_COMPLEMENT_HPP
#define SPINED_COMPLEMENT_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "spined/bits.hpp"
#include "spined/chordal.hpp"
#include "spined/core.hpp"
#include "spined/error.hpp"
#include "spined/graph.hpp"

namespace spined {

/// f(x)f(y) in E(H) implies xy in E(G), over all pairs of distinct vertices.
inline bool is_reflexive_homomorphism(const GraphMorphism& m) {
  if (!detail::total_map(m)) return false;
  const std::size_t n = m.domain.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (m.map[x] == m.map[y]) continue;
      if (m.codomain.has_edge(m.map[x], m.map[y]) && !m.domain.has_edge(x, y)) return false;
    }
  }
  return true;
}

struct IndependentGluing {
  Graph left;
  Graph right;
  std::size_t shared = 0;
  Graph apex;
  GraphMorphism left_leg;
  GraphMorphism right_leg;

  Cocone<Graph> cocone() const { return {apex, left_leg, right_leg}; }
};

namespace detail {

inline void require_independent_legs(const GraphMorphism& l, const GraphMorphism& r) {
  const Graph& shared = l.domain;
  if (!(l.domain == r.domain) || shared.edge_count() != 0) {
    throw Error(Errc::legs_invalid, "gluing legs must start at the same edgeless graph");
  }
  if (!is_reflexive_monomorphism(l) || !is_reflexive_monomorphism(r)) {
    throw Error(Errc::legs_invalid, "gluing legs must be reflexive monomorphisms");
  }
}

// Identifies R's image of the shared set with L's; R's other vertices follow L.
inline VertexMap right_into_apex(const GraphMorphism& l, const GraphMorphism& r) {
  VertexMap into(r.codomain.order(), kFree);
  for (std::size_t i = 0; i < l.domain.order(); ++i) into[r.map[i]] = l.map[i];
  std::size_t next = l.codomain.order();
  for (auto& t : into) {
    if (t == kFree) t = next++;
  }
  return into;
}

}  // namespace detail

/// L and R glued along a shared independent set, with every unshared vertex
/// of L joined to every unshared vertex of R.
inline IndependentGluing independent_gluing(const GraphMorphism& l, const GraphMorphism& r) {
  detail::require_independent_legs(l, r);
  const Graph& left = l.codomain;
  const Graph& right = r.codomain;
  const std::size_t n = l.domain.order();
  VertexMap into = detail::right_into_apex(l, r);

  Graph apex(left.order() + right.order() - n);
  for (auto [u, v] : left.edges()) apex.add_edge(u, v);
  for (auto [u, v] : right.edges()) apex.add_edge(into[u], into[v]);
  const Bits left_rest = low_bits(left.order()) & ~to_bits(l.map);
  const Bits right_rest = low_bits(apex.order()) & ~low_bits(left.order());
  for_each_bit(left_rest, [&](std::size_t u) {
    for_each_bit(right_rest, [&](std::size_t v) { apex.add_edge(u, v); });
  });

  VertexMap left_map(left.order());
  std::iota(left_map.begin(), left_map.end(), std::size_t{0});
  IndependentGluing out{left, right, n, apex, {left, apex, std::move(left_map)}, {right, apex, std::move(into)}};
  if (!is_reflexive_monomorphism(out.left_leg) || !is_reflexive_monomorphism(out.right_leg)) {
    throw std::logic_error("independent_gluing: legs are not reflexive monomorphisms");
  }
  return out;
}

inline IndependentGluing independent_gluing(const Span<Graph>& span) {
  if (span.left.domain.order() != span.index) {
    throw Error(Errc::legs_invalid, "span apex is not the edgeless graph on " + std::to_string(span.index) +
                                        " vertices");
  }
  return independent_gluing(span.left, span.right);
}

/// The same gluing without the join between the remainders.
inline Cocone<Graph> naive_gluing(const Span<Graph>& span) {
  detail::require_independent_legs(span.left, span.right);
  const Graph& left = span.left.codomain;
  const Graph& right = span.right.codomain;
  VertexMap into = detail::right_into_apex(span.left, span.right);
  Graph apex(left.order() + right.order() - span.left.domain.order());
  for (auto [u, v] : left.edges()) apex.add_edge(u, v);
  for (auto [u, v] : right.edges()) apex.add_edge(into[u], into[v]);
  VertexMap left_map(left.order());
  std::iota(left_map.begin(), left_map.end(), std::size_t{0});
  GraphMorphism l{left, apex, std::move(left_map)};
  GraphMorphism r{right, apex, std::move(into)};
  return {std::move(apex), std::move(l), std::move(r)};
}

/// Graphs with reflexive monomorphisms; spine K̄_n.
inline SpinedInstance<Graph> rmono_instance() {
  SpinedInstance<Graph> inst;
  inst.name = "r-mono";
  inst.object_kind = "graph";
  inst.points = [](const Graph& g) { return g.order(); };
  inst.is_morphism = [](const GraphMorphism& m) { return is_reflexive_monomorphism(m); };
  inst.enumerate = [](const Graph& a, const Graph& b, const SearchOptions& opts) {
    return enumerate_graph_morphisms(a, b, GraphMorphismKind::reflexive_mono, opts);
  };
  inst.spine = [](std::size_t n) { return discrete_graph(n); };
  inst.proxy_pushout = [](const Span<Graph>& span) { return independent_gluing(span).cocone(); };
  inst.spine_cap = Graph::kMaxVertices;
  inst.spine_is_chain = true;
  return inst;
}

/// Reflexive monomorphism G -> H re-typed as the monomorphism co-G -> co-H.
inline GraphMorphism complement_functor(const GraphMorphism& m) {
  if (!is_reflexive_monomorphism(m)) {
    throw Error(Errc::not_reflexive_mono, "complement_functor expects a reflexive monomorphism");
  }
  GraphMorphism out{complement(m.domain), complement(m.codomain), m.map};
  if (!is_monomorphism(out)) throw std::logic_error("complement_functor: image is not a monomorphism");
  return out;
}

/// Monomorphism G -> H re-typed as the reflexive monomorphism co-G -> co-H.
inline GraphMorphism complement_functor_inverse(const GraphMorphism& m) {
  if (!is_monomorphism(m)) throw Error(Errc::legs_not_mono, "complement_functor_inverse expects a monomorphism");
  GraphMorphism out{complement(m.domain), complement(m.codomain), m.map};
  if (!is_reflexive_monomorphism(out)) {
    throw std::logic_error("complement_functor_inverse: image is not a reflexive monomorphism");
  }
  return out;
}

/// Δ on R_mono: tw(co-G) + 1.
inline std::size_t complemented_treewidth(const Graph& g) { return treewidth_dp(complement(g)).delta(); }

/// Objects generated from the spine by independent gluings.
inline bool is_rmono_chordal(const Graph& g) { return is_chordal(complement(g)).chordal; }

inline constexpr std::size_t kNativeRmonoCap = 6;

/// Δ^ch computed inside R_mono: the least generalized clique of a chordal
/// object receiving G, over all objects on |V(G)| + extra vertices.
inline std::size_t native_rmono_triangulation(const Graph& g, std::size_t extra = 0) {
  const std::size_t n = g.order() + extra;
  if (n > kNativeRmonoCap) throw Error(Errc::cap_exceeded, "native R_mono search is limited to 6 vertices");
  const auto inst = rmono_instance();
  std::vector<Edge> slots;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Bits mask = 0; mask < bit(slots.size()); ++mask) {
    Graph h(n);
    for_each_bit(mask, [&](std::size_t i) { h.add_edge(slots[i].first, slots[i].second); });
    if (!is_rmono_chordal(h) || !has_morphism(inst, g, h)) continue;
    best = std::min(best, generalized_clique(inst, h));
  }
  return best;
}

}  // namespace spined

#endif  // SPINED_COMPLEMENT_HPP
