#ifndef SPINED_HYPERGRAPH_HPP
#define SPINED_HYPERGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spined/bits.hpp"
#include "spined/chordal.hpp"
#include "spined/core.hpp"
#include "spined/error.hpp"
#include "spined/graph.hpp"

namespace spined {

inline constexpr std::size_t kSpineHypergraphCap = 16;
inline constexpr std::size_t kHypergraphDirectCap = 7;

/// Vertex set {0..n-1} with a set of hyperedges stored as sorted bitsets.
/// The empty hyperedge is allowed.
class Hypergraph {
 public:
  Hypergraph() = default;

  explicit Hypergraph(std::size_t n) : n_(n) {
    if (n > Graph::kMaxVertices) throw Error(Errc::cap_exceeded, "hypergraphs are limited to 64 vertices");
  }

  Hypergraph(std::size_t n, const std::vector<std::vector<std::size_t>>& edges) : Hypergraph(n) {
    for (const auto& e : edges) add_edge(e);
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Bits>& edge_sets() const noexcept { return edges_; }

  bool has_edge(Bits e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

  Hypergraph& add_edge_bits(Bits e) {
    if (!is_subset(e, low_bits(n_))) throw Error(Errc::invalid_argument, "hyperedge vertex out of range");
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) edges_.insert(it, e);
    return *this;
  }

  Hypergraph& add_edge(const std::vector<std::size_t>& e) {
    for (std::size_t v : e) {
      if (v >= n_) throw Error(Errc::invalid_argument, "hyperedge vertex " + std::to_string(v) + " out of range");
    }
    return add_edge_bits(to_bits(e));
  }

  std::vector<std::vector<std::size_t>> edges() const {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(edges_.size());
    for (Bits e : edges_) out.push_back(to_vector(e));
    return out;
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Bits> edges_;
};

using HypergraphMorphism = Arrow<Hypergraph>;

/// ([n], 2^[n]): every subset is a hyperedge.
inline Hypergraph spine_hypergraph(std::size_t n) {
  if (n > kSpineHypergraphCap) {
    throw Error(Errc::cap_exceeded, "spine_hypergraph is limited to n <= 16");
  }
  Hypergraph h(n);
  for (Bits s = 0; s <= low_bits(n); ++s) h.add_edge_bits(s);
  return h;
}

/// Primal graph: u ~ v iff some hyperedge holds both.
inline Graph gaifman(const Hypergraph& h) {
  Graph g(h.order());
  for (Bits e : h.edge_sets()) {
    for_each_bit(e, [&](std::size_t u) {
      for_each_bit(e & ~low_bits(u + 1), [&](std::size_t v) { g.add_edge(u, v); });
    });
  }
  return g;
}

inline Hypergraph as_hypergraph(const Graph& g) {
  Hypergraph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge_bits(bit(u) | bit(v));
  return h;
}

inline Bits image(const VertexMap& map, Bits set) {
  Bits out = 0;
  for_each_bit(set, [&](std::size_t v) { out |= bit(map[v]); });
  return out;
}

inline bool is_hypergraph_homomorphism(const HypergraphMorphism& m) {
  if (m.map.size() != m.domain.order()) return false;
  for (std::size_t t : m.map) {
    if (t >= m.codomain.order()) return false;
  }
  return std::all_of(m.domain.edge_sets().begin(), m.domain.edge_sets().end(),
                     [&](Bits e) { return m.codomain.has_edge(image(m.map, e)); });
}

inline bool is_hypergraph_monomorphism(const HypergraphMorphism& m) {
  return is_hypergraph_homomorphism(m) && detail::injective(m.map);
}

/// Lexicographic backtracking; each hyperedge is checked once its largest
/// vertex is assigned.
inline std::vector<HypergraphMorphism> enumerate_hypergraph_morphisms(const Hypergraph& dom, const Hypergraph& cod,
                                                                      bool injective,
                                                                      const SearchOptions& opts = {}) {
  const std::size_t n = dom.order();
  const std::size_t m = cod.order();
  std::vector<HypergraphMorphism> out;
  if (!opts.pinned.empty() && opts.pinned.size() != n) {
    throw Error(Errc::invalid_argument, "pinned map size differs from domain order");
  }
  if (injective && n > m) return out;
  if (dom.has_edge(0) && !cod.has_edge(0)) return out;
  std::size_t free = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (opts.pinned.empty() || opts.pinned[v] == kFree) ++free;
  }
  if (free > opts.cap) {
    throw Error(Errc::cap_exceeded, "morphism enumeration over " + std::to_string(free) +
                                        " free vertices exceeds cap " + std::to_string(opts.cap));
  }
  std::vector<std::vector<Bits>> closing(n);
  for (Bits e : dom.edge_sets()) {
    if (e != 0) closing[63 - static_cast<std::size_t>(std::countl_zero(e))].push_back(e);
  }

  VertexMap map(n, 0);
  Bits used = 0;
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
      if (injective && contains(used, t)) continue;
      map[v] = t;
      const bool ok = std::all_of(closing[v].begin(), closing[v].end(),
                                  [&](Bits e) { return cod.has_edge(image(map, e)); });
      if (!ok) continue;
      used |= bit(t);
      self(self, v + 1);
      used &= ~bit(t);
      if (out.size() >= opts.limit) return;
    }
  };
  extend(extend, 0);
  return out;
}

/// Glues H1 and H2 along the images of ([n], 2^[n]); hyperedge families are
/// merged after identification. Index convention follows clique_sum.
inline Cocone<Hypergraph> hgr_proxy_pushout(const HypergraphMorphism& h1, const HypergraphMorphism& h2) {
  const Hypergraph& shared = h1.domain;
  if (!(h1.domain == h2.domain) || !(shared == spine_hypergraph(shared.order()))) {
    throw Error(Errc::spine_mismatch, "proxy pushout legs must start at the same spine hypergraph");
  }
  if (!is_hypergraph_monomorphism(h1) || !is_hypergraph_monomorphism(h2)) {
    throw Error(Errc::legs_not_mono, "proxy pushout legs must be monomorphisms");
  }
  const Hypergraph& left = h1.codomain;
  const Hypergraph& right = h2.codomain;
  VertexMap into_apex(right.order(), kFree);
  for (std::size_t i = 0; i < shared.order(); ++i) into_apex[h2.map[i]] = h1.map[i];
  std::size_t next = left.order();
  for (std::size_t v = 0; v < right.order(); ++v) {
    if (into_apex[v] == kFree) into_apex[v] = next++;
  }
  Hypergraph apex(next);
  for (Bits e : left.edge_sets()) apex.add_edge_bits(e);
  for (Bits e : right.edge_sets()) apex.add_edge_bits(image(into_apex, e));

  VertexMap left_leg(left.order());
  std::iota(left_leg.begin(), left_leg.end(), std::size_t{0});
  HypergraphMorphism inj1{left, apex, std::move(left_leg)};
  HypergraphMorphism inj2{right, apex, std::move(into_apex)};
  return {std::move(apex), std::move(inj1), std::move(inj2)};
}

inline Cocone<Hypergraph> hgr_proxy_pushout(const Span<Hypergraph>& span) {
  if (span.left.domain.order() != span.index) {
    throw Error(Errc::spine_mismatch, "span apex is not the spine hypergraph of index " + std::to_string(span.index));
  }
  return hgr_proxy_pushout(span.left, span.right);
}

inline TdVerdict validate_tree_decomposition(const Hypergraph& h, const TreeDecomposition& td) {
  return validate_tree_decomposition(h.order(), h.edges(), td);
}

/// Tree-width of the Gaifman graph; the decomposition is re-validated
/// against the hyperedges themselves.
inline TreewidthResult hypergraph_treewidth(const Hypergraph& h) {
  TreewidthResult result = treewidth_dp(gaifman(h));
  if (!validate_tree_decomposition(h, result.decomposition).valid()) {
    throw std::logic_error("hypergraph_treewidth: decomposition does not cover the hyperedges");
  }
  return result;
}

/// Brute force: every elimination ordering of the primal graph yields a
/// decomposition, each validated against the hyperedges directly.
inline std::optional<std::size_t> hypergraph_treewidth_direct(const Hypergraph& h) {
  const std::size_t n = h.order();
  if (n > kHypergraphDirectCap) {
    throw Error(Errc::cap_exceeded, "hypergraph_treewidth_direct is limited to 7 vertices");
  }
  if (n == 0) return std::nullopt;
  const auto hyperedges = h.edges();
  std::vector<std::vector<bool>> primal(n, std::vector<bool>(n, false));
  for (const auto& e : hyperedges) {
    for (std::size_t a : e) {
      for (std::size_t b : e) primal[a][b] = primal[a][b] || a != b;
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::optional<std::size_t> best;
  do {
    auto adj = primal;
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[perm[i]] = i;
    TreeDecomposition td;
    td.vertex_count = n;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t v = perm[i];
      Bag bag{v};
      std::size_t parent = n;
      for (std::size_t u = 0; u < n; ++u) {
        if (position[u] > i && adj[v][u]) {
          bag.push_back(u);
          parent = std::min(parent, position[u]);
        }
      }
      for (std::size_t a : bag) {
        for (std::size_t b : bag) adj[a][b] = adj[a][b] || a != b;
      }
      std::sort(bag.begin(), bag.end());
      td.bags.push_back(std::move(bag));
      if (parent < n) {
        td.tree.emplace_back(i, parent);
      } else if (i + 1 < n) {
        td.tree.emplace_back(i, n - 1);
      }
    }
    auto verdict = validate_tree_decomposition(n, hyperedges, td);
    if (verdict.valid() && verdict.width && (!best || *verdict.width < *best)) best = verdict.width;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// `edge_count` random non-empty hyperedges (duplicates merge).
inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t edge_count) {
  Hypergraph h(n);
  if (n == 0) return h;
  for (std::size_t i = 0; i < edge_count; ++i) {
    Bits e = 0;
    while (e == 0) e = rng() & low_bits(n);
    h.add_edge_bits(e);
  }
  return h;
}

/// Hypergraphs with injective hypergraph homomorphisms; spine ([n], 2^[n]).
inline SpinedInstance<Hypergraph> hgr_instance() {
  SpinedInstance<Hypergraph> inst;
  inst.name = "hgr-mono";
  inst.object_kind = "hypergraph";
  inst.points = [](const Hypergraph& h) { return h.order(); };
  inst.is_morphism = [](const HypergraphMorphism& m) { return is_hypergraph_monomorphism(m); };
  inst.enumerate = [](const Hypergraph& a, const Hypergraph& b, const SearchOptions& opts) {
    return enumerate_hypergraph_morphisms(a, b, true, opts);
  };
  inst.spine = [](std::size_t n) { return spine_hypergraph(n); };
  inst.proxy_pushout = [](const Span<Hypergraph>& span) { return hgr_proxy_pushout(span); };
  inst.spine_cap = kSpineHypergraphCap;
  inst.spine_is_chain = true;
  return inst;
}

}  // namespace spined

#endif  // SPINED_HYPERGRAPH_HPP
