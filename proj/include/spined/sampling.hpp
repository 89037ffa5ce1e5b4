#ifndef SPINED_SAMPLING_HPP
#define SPINED_SAMPLING_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "spined/bits.hpp"
#include "spined/core.hpp"
#include "spined/graph.hpp"
#include "spined/hypergraph.hpp"
#include "spined/induced.hpp"
#include "spined/ndiv.hpp"
#include "spined/poset.hpp"

namespace spined {

inline bool coin(std::mt19937_64& rng) { return (rng() & 1U) != 0; }

/// Random graph on 1..max_order vertices, edge probability 1/2.
inline Graph random_small_graph(std::mt19937_64& rng, std::size_t max_order) {
  return random_graph(rng, 1 + uniform_below(rng, max_order), 0.5);
}

/// g on the first |V(g)| vertices plus `extra` new ones; new pairs get
/// edges at random and, if `add_inside`, so do non-adjacent old pairs.
inline Graph random_supergraph(std::mt19937_64& rng, const Graph& g, std::size_t extra, bool add_inside = true) {
  const std::size_t n = g.order();
  Graph h(n + extra);
  for (std::size_t u = 0; u < h.order(); ++u) {
    for (std::size_t v = u + 1; v < h.order(); ++v) {
      const bool old = v < n;
      if ((old && g.has_edge(u, v)) || ((!old || add_inside) && coin(rng) && coin(rng))) h.add_edge(u, v);
    }
  }
  return h;
}

/// Random target for an R_mono extension: g with some edges removed plus
/// new vertices joined arbitrarily.
inline Graph random_reflexive_target(std::mt19937_64& rng, const Graph& g, std::size_t extra) {
  const std::size_t n = g.order();
  Graph h(n + extra);
  for (std::size_t u = 0; u < h.order(); ++u) {
    for (std::size_t v = u + 1; v < h.order(); ++v) {
      if (v < n ? g.has_edge(u, v) && (coin(rng) || coin(rng)) : coin(rng)) h.add_edge(u, v);
    }
  }
  return h;
}

inline Hypergraph random_small_hypergraph(std::mt19937_64& rng, std::size_t max_order, std::size_t max_edges) {
  const std::size_t n = 1 + uniform_below(rng, max_order);
  return random_hypergraph(rng, n, uniform_below(rng, max_edges + 1));
}

/// Random hypergraph that also holds the full power set of a random subset
/// of at most three vertices, so spine objects map into it.
inline Hypergraph random_spined_hypergraph(std::mt19937_64& rng, std::size_t max_order, std::size_t max_edges) {
  Hypergraph h = random_small_hypergraph(rng, max_order, max_edges);
  Bits core = 0;
  const std::size_t k = uniform_below(rng, std::min<std::size_t>(3, h.order()) + 1);
  while (popcount(core) < k) core |= bit(uniform_below(rng, h.order()));
  for (Bits s = core;; s = (s - 1) & core) {
    h.add_edge_bits(s);
    if (s == 0) break;
  }
  return h;
}

inline Hypergraph random_superhypergraph(std::mt19937_64& rng, const Hypergraph& h, std::size_t extra,
                                         std::size_t extra_edges) {
  Hypergraph out(h.order() + extra);
  for (Bits e : h.edge_sets()) out.add_edge_bits(e);
  for (std::size_t i = 0; i < extra_edges; ++i) {
    Bits e = 0;
    while (e == 0) e = rng() & low_bits(out.order());
    out.add_edge_bits(e);
  }
  return out;
}

/// Random poset: a random relation on 1..max_size elements oriented by index,
/// so the closure is always antisymmetric.
inline Poset random_small_poset(std::mt19937_64& rng, std::size_t max_size) {
  const std::size_t n = 1 + uniform_below(rng, max_size);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng)) rel.emplace_back(a, b);
    }
  }
  return Poset(n, rel);
}

inline Poset random_superposet(std::mt19937_64& rng, const Poset& p, std::size_t extra) {
  const std::size_t n = p.size() + extra;
  auto rel = p.relation();
  for (std::size_t z = p.size(); z < n; ++z) {
    for (std::size_t a = 0; a < z; ++a) {
      if (coin(rng) && coin(rng)) rel.emplace_back(a, z);
    }
  }
  return Poset(n, rel);
}

inline DivObject random_multiple(std::mt19937_64& rng, const DivObject& d) {
  static constexpr std::uint64_t kFactors[] = {1, 2, 3, 4, 5, 6, 7, 9, 10, 12};
  return lcm(d, DivObject(kFactors[uniform_below(rng, std::size(kFactors))]));
}

inline Labeling random_small_labeling(std::mt19937_64& rng, std::size_t max_order) {
  return random_labeling(rng, random_small_graph(rng, max_order));
}

}  // namespace spined

#endif  // SPINED_SAMPLING_HPP
