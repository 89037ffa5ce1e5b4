#ifndef SPINED_GRAPH_HPP
#define SPINED_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spined/bits.hpp"
#include "spined/core.hpp"
#include "spined/error.hpp"

namespace spined {

using Edge = std::pair<std::size_t, std::size_t>;

/// Finite simple graph on {0..n-1}, one adjacency bitset per vertex.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  Graph() = default;

  explicit Graph(std::size_t n) : adj_(n, 0) {
    if (n > kMaxVertices) {
      throw Error(Errc::cap_exceeded, "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
    }
  }

  Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t order() const noexcept { return adj_.size(); }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (Bits row : adj_) twice += popcount(row);
    return twice / 2;
  }

  Bits vertex_set() const noexcept { return low_bits(order()); }

  Bits neighbors(std::size_t v) const { return adj_.at(v); }

  std::size_t degree(std::size_t v) const { return popcount(adj_.at(v)); }

  bool has_edge(std::size_t u, std::size_t v) const { return contains(adj_.at(u), v); }

  Graph& add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(Errc::invalid_argument, "loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    return *this;
  }

  Graph& remove_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
    return *this;
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < order(); ++u) {
      for_each_bit(adj_[u] & ~low_bits(u + 1), [&](std::size_t v) { out.emplace_back(u, v); });
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(std::size_t v) const {
    if (v >= order()) {
      throw Error(Errc::invalid_argument,
                  "vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
    }
  }

  std::vector<Bits> adj_;
};

using GraphMorphism = Arrow<Graph>;

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph discrete_graph(std::size_t n) { return Graph(n); }

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(Errc::invalid_argument, "cycle_graph needs n >= 3");
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// Adjoins a new vertex adjacent to every existing vertex.
inline Graph apex_extension(const Graph& g) {
  Graph out(g.order() + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (std::size_t v = 0; v < g.order(); ++v) out.add_edge(v, g.order());
  return out;
}

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

/// Subgraph induced on `keep`, relabeled in increasing vertex order.
inline Graph induced_subgraph(const Graph& g, Bits keep) {
  auto vs = to_vector(keep & g.vertex_set());
  Graph out(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.has_edge(vs[i], vs[j])) out.add_edge(i, j);
    }
  }
  return out;
}

/// Edge-independent draw: each pair is an edge with the given probability.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double edge_probability) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (r < edge_probability) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::size_t clique_number(const Graph& g) {
  std::size_t best = 0;
  auto expand = [&](auto&& self, std::size_t size, Bits candidates) -> void {
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    while (candidates != 0) {
      if (size + popcount(candidates) <= best) return;
      std::size_t v = lowest(candidates);
      candidates &= ~bit(v);
      self(self, size + 1, candidates & g.neighbors(v));
    }
    best = std::max(best, size);
  };
  expand(expand, 0, g.vertex_set());
  return best;
}

inline std::size_t independence_number(const Graph& g) { return clique_number(complement(g)); }

inline bool is_clique(const Graph& g, Bits set) {
  bool ok = true;
  for_each_bit(set, [&](std::size_t v) { ok = ok && is_subset(set & ~bit(v), g.neighbors(v)); });
  return ok;
}

inline bool is_independent(const Graph& g, Bits set) {
  bool ok = true;
  for_each_bit(set, [&](std::size_t v) { ok = ok && (g.neighbors(v) & set) == 0; });
  return ok;
}

namespace detail {

inline bool total_map(const GraphMorphism& m) {
  if (m.map.size() != m.domain.order()) return false;
  return std::all_of(m.map.begin(), m.map.end(), [&](std::size_t t) { return t < m.codomain.order(); });
}

inline bool injective(const VertexMap& map) {
  Bits seen = 0;
  for (std::size_t t : map) {
    if (contains(seen, t)) return false;
    seen |= bit(t);
  }
  return true;
}

}  // namespace detail

inline bool is_homomorphism(const GraphMorphism& m) {
  if (!detail::total_map(m)) return false;
  for (auto [u, v] : m.domain.edges()) {
    if (!m.codomain.has_edge(m.map[u], m.map[v])) return false;
  }
  return true;
}

inline bool is_monomorphism(const GraphMorphism& m) {
  return is_homomorphism(m) && detail::injective(m.map);
}

/// Injective map reflecting edges: f(x)f(y) in E(H) implies xy in E(G).
inline bool is_reflexive_monomorphism(const GraphMorphism& m) {
  if (!detail::total_map(m) || !detail::injective(m.map)) return false;
  for (std::size_t x = 0; x < m.domain.order(); ++x) {
    for (std::size_t y = x + 1; y < m.domain.order(); ++y) {
      if (m.codomain.has_edge(m.map[x], m.map[y]) && !m.domain.has_edge(x, y)) return false;
    }
  }
  return true;
}

enum class GraphMorphismKind { homo, mono, reflexive_mono };

/// Backtracking enumeration in lexicographic order of the vertex map.
inline std::vector<GraphMorphism> enumerate_graph_morphisms(const Graph& dom, const Graph& cod,
                                                            GraphMorphismKind kind,
                                                            const SearchOptions& opts = {}) {
  const std::size_t n = dom.order();
  const std::size_t m = cod.order();
  const bool injective = kind != GraphMorphismKind::homo;
  std::vector<GraphMorphism> out;
  if (!opts.pinned.empty() && opts.pinned.size() != n) {
    throw Error(Errc::invalid_argument, "pinned map size differs from domain order");
  }
  if (injective && n > m) return out;
  std::size_t free = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (opts.pinned.empty() || opts.pinned[v] == kFree) ++free;
  }
  if (free > opts.cap) {
    throw Error(Errc::cap_exceeded, "morphism enumeration over " + std::to_string(free) +
                                        " free vertices exceeds cap " + std::to_string(opts.cap));
  }

  VertexMap map(n, 0);
  Bits used = 0;
  auto compatible = [&](std::size_t v, std::size_t t) {
    if (injective && contains(used, t)) return false;
    if (kind == GraphMorphismKind::mono && cod.degree(t) < dom.degree(v)) return false;
    for (std::size_t u = 0; u < v; ++u) {
      const bool dom_edge = dom.has_edge(u, v);
      const bool cod_edge = map[u] != t && cod.has_edge(map[u], t);
      if (kind == GraphMorphismKind::reflexive_mono) {
        if (cod_edge && !dom_edge) return false;
      } else if (dom_edge && !cod_edge) {
        return false;
      }
    }
    return true;
  };
  auto extend = [&](auto&& self, std::size_t v) -> void {
    if (out.size() >= opts.limit) return;
    if (v == n) {
      out.push_back({dom, cod, map});
      return;
    }
    const bool pinned = !opts.pinned.empty() && opts.pinned[v] != kFree;
    const std::size_t first = pinned ? opts.pinned[v] : 0;
    const std::size_t last = pinned ? opts.pinned[v] + 1 : m;
    for (std::size_t t = first; t < last && t < m; ++t) {
      if (!compatible(v, t)) continue;
      map[v] = t;
      used |= bit(t);
      self(self, v + 1);
      used &= ~bit(t);
      if (out.size() >= opts.limit) return;
    }
  };
  extend(extend, 0);
  return out;
}

inline std::vector<GraphMorphism> enumerate_monomorphisms(const Graph& g, const Graph& h,
                                                          std::size_t cap = kDefaultEnumerationCap) {
  SearchOptions opts;
  opts.cap = cap;
  return enumerate_graph_morphisms(g, h, GraphMorphismKind::mono, opts);
}

/// Glues G1 and G2 along the shared clique K_n given by two monomorphisms.
/// G1 keeps its indices; G2's remaining vertices follow in G2's order.
inline Cocone<Graph> clique_sum(const GraphMorphism& g1, const GraphMorphism& g2) {
  const Graph& shared = g1.domain;
  if (!(g1.domain == g2.domain) || !(shared == complete_graph(shared.order()))) {
    throw Error(Errc::apex_mismatch, "clique_sum legs must start at the same complete graph");
  }
  if (!is_monomorphism(g1) || !is_monomorphism(g2)) {
    throw Error(Errc::legs_not_mono, "clique_sum legs must be monomorphisms");
  }
  const Graph& left = g1.codomain;
  const Graph& right = g2.codomain;
  const std::size_t order = left.order() + right.order() - shared.order();

  VertexMap into_apex(right.order(), kFree);
  for (std::size_t i = 0; i < shared.order(); ++i) into_apex[g2.map[i]] = g1.map[i];
  std::size_t next = left.order();
  for (std::size_t v = 0; v < right.order(); ++v) {
    if (into_apex[v] == kFree) into_apex[v] = next++;
  }

  Graph apex(order);
  for (auto [u, v] : left.edges()) apex.add_edge(u, v);
  for (auto [u, v] : right.edges()) apex.add_edge(into_apex[u], into_apex[v]);

  VertexMap left_leg(left.order());
  for (std::size_t v = 0; v < left.order(); ++v) left_leg[v] = v;
  GraphMorphism inj1{left, apex, std::move(left_leg)};
  GraphMorphism inj2{right, apex, std::move(into_apex)};
  return {std::move(apex), std::move(inj1), std::move(inj2)};
}

inline Cocone<Graph> clique_sum(const Span<Graph>& span) {
  if (span.left.domain.order() != span.index) {
    throw Error(Errc::apex_mismatch, "span apex is not K_" + std::to_string(span.index));
  }
  return clique_sum(span.left, span.right);
}

/// Exhaustive isomorphism search with degree pruning; n <= 10.
inline std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h) {
  constexpr std::size_t kCap = 10;
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  const std::size_t n = g.order();
  if (n > kCap) throw Error(Errc::cap_exceeded, "isomorphism search is limited to 10 vertices");
  std::vector<std::size_t> dg(n), dh(n);
  for (std::size_t v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  auto sg = dg, sh = dh;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return std::nullopt;

  VertexMap map(n);
  Bits used = 0;
  auto extend = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (contains(used, t) || dh[t] != dg[v]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == h.has_edge(map[u], t);
      if (!ok) continue;
      map[v] = t;
      used |= bit(t);
      if (self(self, v + 1)) return true;
      used &= ~bit(t);
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

inline bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

/// Graphs with injective homomorphisms; spine K_n; clique sums as proxy pushouts.
inline SpinedInstance<Graph> grph_mono_instance() {
  SpinedInstance<Graph> inst;
  inst.name = "grph-mono";
  inst.object_kind = "graph";
  inst.points = [](const Graph& g) { return g.order(); };
  inst.is_morphism = [](const GraphMorphism& m) { return is_monomorphism(m); };
  inst.enumerate = [](const Graph& a, const Graph& b, const SearchOptions& opts) {
    return enumerate_graph_morphisms(a, b, GraphMorphismKind::mono, opts);
  };
  inst.spine = [](std::size_t n) { return complete_graph(n); };
  inst.proxy_pushout = [](const Span<Graph>& span) { return clique_sum(span); };
  inst.spine_cap = Graph::kMaxVertices;
  inst.spine_is_chain = true;
  return inst;
}

}  // namespace spined

#endif  // SPINED_GRAPH_HPP
