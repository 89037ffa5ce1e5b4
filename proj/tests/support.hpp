#ifndef SPINED_TESTS_SUPPORT_HPP
#define SPINED_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "spined/spined.hpp"
#include "spined/sampling.hpp"

namespace spined::testing {

/// Every labelled graph on n vertices (n <= 6 keeps this at 32768).
inline std::vector<Graph> all_labeled_graphs(std::size_t n) {
  std::vector<Edge> slots;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << slots.size());
  for (Bits mask = 0; mask < bit(slots.size()); ++mask) {
    Graph g(n);
    for_each_bit(mask, [&](std::size_t i) { g.add_edge(slots[i].first, slots[i].second); });
    out.push_back(std::move(g));
  }
  return out;
}

/// Vertex count plus the lexicographically least upper-triangle adjacency
/// string over orderings that list vertices by non-increasing degree.
using CanonicalCode = std::pair<std::size_t, std::uint64_t>;

inline CanonicalCode canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
  // blocks of equal degree are permuted independently
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && g.degree(perm[j]) == g.degree(perm[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  auto code = [&]() {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) c = (c << 1) | (g.has_edge(perm[i], perm[j]) ? 1U : 0U);
    }
    return c;
  };
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      best = std::min(best, code());
      return;
    }
    auto first = perm.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = perm.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do {
      self(self, b + 1);
    } while (std::next_permutation(first, last));
  };
  rec(rec, 0);
  return {n, best};
}

/// One representative per isomorphism class, for 0..max_n vertices, built
/// by adding a vertex to each smaller representative in every possible way.
inline const std::vector<std::vector<Graph>>& graph_classes(std::size_t max_n = 7) {
  static std::vector<std::vector<Graph>> classes{{Graph(0)}};
  while (classes.size() <= max_n) {
    const std::size_t n = classes.size();
    std::set<CanonicalCode> seen;
    std::vector<Graph> next;
    for (const Graph& g : classes.back()) {
      for (Bits nb = 0; nb < bit(n - 1); ++nb) {
        Graph h(n);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for_each_bit(nb, [&](std::size_t u) { h.add_edge(u, n - 1); });
        if (seen.insert(canonical_code(h)).second) next.push_back(std::move(h));
      }
    }
    classes.push_back(std::move(next));
  }
  return classes;
}

inline std::vector<Graph> graph_corpus(std::size_t max_n) {
  std::vector<Graph> out;
  const auto& classes = graph_classes(max_n);
  for (std::size_t n = 0; n <= max_n; ++n) out.insert(out.end(), classes[n].begin(), classes[n].end());
  return out;
}

/// Largest vertex subset that is a clique, by checking every subset.
inline std::size_t brute_clique_number(const Graph& g) {
  std::size_t best = 0;
  for (Bits s = 0; s < bit(g.order()); ++s) {
    bool clique = true;
    for_each_bit(s, [&](std::size_t v) { clique = clique && is_subset(s & ~bit(v), g.neighbors(v)); });
    if (clique) best = std::max(best, popcount(s));
  }
  return best;
}

/// Chordal iff no vertex subset of size >= 4 induces a cycle.
inline bool brute_is_chordal(const Graph& g) {
  for (Bits s = 0; s < bit(g.order()); ++s) {
    if (popcount(s) < 4) continue;
    bool two_regular = true;
    for_each_bit(s, [&](std::size_t v) { two_regular = two_regular && popcount(g.neighbors(v) & s) == 2; });
    if (!two_regular) continue;
    Bits reached = bit(lowest(s));
    Bits frontier = reached;
    while (frontier != 0) {
      Bits next = 0;
      for_each_bit(frontier, [&](std::size_t v) { next |= g.neighbors(v) & s; });
      frontier = next & ~reached;
      reached |= next;
    }
    if (reached == s) return false;
  }
  return true;
}

/// All trees on 1..max_n vertices up to isomorphism, grown leaf by leaf.
inline std::vector<Graph> all_trees(std::size_t max_n) {
  std::vector<Graph> out;
  std::vector<Graph> layer{Graph(1)};
  for (std::size_t n = 1; n <= max_n; ++n) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::set<CanonicalCode> seen;
    std::vector<Graph> next;
    for (const Graph& t : layer) {
      for (std::size_t v = 0; v < n; ++v) {
        Graph h(n + 1);
        for (auto [a, b] : t.edges()) h.add_edge(a, b);
        h.add_edge(v, n);
        if (seen.insert(canonical_code(h)).second) next.push_back(std::move(h));
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// Graph spans in GRPH_mono with parts on at most max_part vertices.
inline std::vector<Span<Graph>> graph_spans(std::size_t count, std::uint64_t seed, std::size_t max_part) {
  return sample_spans(
      grph_mono_instance(), [max_part](std::mt19937_64& rng) { return random_small_graph(rng, max_part); }, count,
      seed);
}

inline std::vector<Span<Graph>> rmono_spans(std::size_t count, std::uint64_t seed, std::size_t max_part) {
  return sample_spans(
      rmono_instance(), [max_part](std::mt19937_64& rng) { return random_small_graph(rng, max_part); }, count, seed);
}


/// Canonical codes of every graph on at most max_n vertices obtainable from
/// complete graphs by repeated clique sums.
inline std::set<CanonicalCode> clique_sum_closure(std::size_t max_n) {
  std::set<CanonicalCode> seen;
  std::vector<Graph> members;
  for (std::size_t n = 0; n <= max_n; ++n) {
    seen.insert(canonical_code(complete_graph(n)));
    members.push_back(complete_graph(n));
  }
  SearchOptions all;
  all.cap = max_n;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Graph a = members[i];
      const Graph b = members[j];
      for (std::size_t k = 0; k <= std::min(a.order(), b.order()); ++k) {
        if (a.order() + b.order() - k > max_n) continue;
        const Graph kk = complete_graph(k);
        const auto into_a = enumerate_graph_morphisms(kk, a, GraphMorphismKind::mono, all);
        // one increasing map per clique of b, every ordering on the a side
        std::vector<GraphMorphism> into_b;
        for (auto& m : enumerate_graph_morphisms(kk, b, GraphMorphismKind::mono, all)) {
          if (std::is_sorted(m.map.begin(), m.map.end())) into_b.push_back(std::move(m));
        }
        if (into_b.empty()) continue;
        for (const auto& la : into_a) {
          for (const auto& rb : into_b) {
            Graph apex = clique_sum(la, rb).apex;
            if (seen.insert(canonical_code(apex)).second) members.push_back(std::move(apex));
          }
        }
      }
    }
  }
  return seen;
}

}  // namespace spined::testing

#endif  // SPINED_TESTS_SUPPORT_HPP
