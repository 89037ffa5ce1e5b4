#ifndef SPINED_CHORDAL_HPP
#define SPINED_CHORDAL_HPP

// Tree decompositions, chordal graphs and exact tree-width.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spined/bits.hpp"
#include "spined/error.hpp"
#include "spined/graph.hpp"

namespace spined {

inline constexpr std::size_t kTreewidthDpCap = 24;
inline constexpr std::size_t kTreewidthOracleCap = 9;
inline constexpr std::size_t kCompletionCap = 16;

using Bag = std::vector<std::size_t>;

struct TreeDecomposition {
  std::size_t vertex_count = 0;
  std::vector<Bag> bags;
  std::vector<Edge> tree;

  /// Largest bag size minus one; empty when there is no non-empty bag.
  std::optional<std::size_t> width() const {
    std::size_t largest = 0;
    for (const auto& b : bags) largest = std::max(largest, b.size());
    if (largest == 0) return std::nullopt;
    return largest - 1;
  }

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

enum class TdViolation {
  none,
  vertex_count_mismatch,
  vertex_out_of_range,
  not_a_tree,
  edge_uncovered,
  vertex_uncovered,
  occurrence_disconnected,
};

inline const char* to_string(TdViolation v) {
  switch (v) {
    case TdViolation::none: return "none";
    case TdViolation::vertex_count_mismatch: return "vertex-count-mismatch";
    case TdViolation::vertex_out_of_range: return "vertex-out-of-range";
    case TdViolation::not_a_tree: return "not-a-tree";
    case TdViolation::edge_uncovered: return "edge-uncovered";
    case TdViolation::vertex_uncovered: return "vertex-uncovered";
    case TdViolation::occurrence_disconnected: return "occurrence-disconnected";
  }
  return "unknown";
}

struct TdVerdict {
  TdViolation violation = TdViolation::none;
  std::string detail;
  std::optional<std::size_t> width;

  bool valid() const { return violation == TdViolation::none; }
};

/// Checks that `td` is a tree decomposition of the hypergraph with vertex set
/// {0..n-1} and the given hyperedges. Empty hyperedges are covered vacuously.
/// Reports the first violated condition.
inline TdVerdict validate_tree_decomposition(std::size_t n, const std::vector<std::vector<std::size_t>>& hyperedges,
                                             const TreeDecomposition& td) {
  auto fail = [](TdViolation v, std::string detail) { return TdVerdict{v, std::move(detail), std::nullopt}; };
  if (td.vertex_count != n) {
    return fail(TdViolation::vertex_count_mismatch,
                "decomposition is over " + std::to_string(td.vertex_count) + " vertices, object has " +
                    std::to_string(n));
  }
  const std::size_t nodes = td.bags.size();
  std::vector<std::vector<bool>> member(nodes, std::vector<bool>(n, false));
  for (std::size_t t = 0; t < nodes; ++t) {
    for (std::size_t x : td.bags[t]) {
      if (x >= n) {
        return fail(TdViolation::vertex_out_of_range,
                    "bag " + std::to_string(t) + " holds vertex " + std::to_string(x));
      }
      member[t][x] = true;
    }
  }

  std::vector<std::vector<std::size_t>> adj(nodes);
  for (auto [a, b] : td.tree) {
    if (a >= nodes || b >= nodes || a == b) {
      return fail(TdViolation::not_a_tree, "bad tree edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Connected component of `start` within the nodes accepted by `keep`.
  auto reach = [&](std::size_t start, auto&& keep) {
    std::vector<bool> seen(nodes, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t count = 0;
    while (!stack.empty()) {
      std::size_t t = stack.back();
      stack.pop_back();
      ++count;
      for (std::size_t s : adj[t]) {
        if (!seen[s] && keep(s)) {
          seen[s] = true;
          stack.push_back(s);
        }
      }
    }
    return count;
  };
  if (nodes > 0) {
    if (td.tree.size() != nodes - 1 || reach(0, [](std::size_t) { return true; }) != nodes) {
      return fail(TdViolation::not_a_tree, "tree on " + std::to_string(nodes) + " nodes has " +
                                               std::to_string(td.tree.size()) + " edges or is disconnected");
    }
  } else if (!td.tree.empty()) {
    return fail(TdViolation::not_a_tree, "edges without nodes");
  }

  for (std::size_t e = 0; e < hyperedges.size(); ++e) {
    const auto& edge = hyperedges[e];
    bool covered = edge.empty();
    for (std::size_t t = 0; t < nodes && !covered; ++t) {
      covered = std::all_of(edge.begin(), edge.end(), [&](std::size_t x) { return x < n && member[t][x]; });
    }
    if (!covered) {
      std::string list;
      for (std::size_t x : edge) list += (list.empty() ? "" : ",") + std::to_string(x);
      return fail(TdViolation::edge_uncovered, "edge {" + list + "} lies in no bag");
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    std::size_t first = nodes;
    std::size_t occurrences = 0;
    for (std::size_t t = 0; t < nodes; ++t) {
      if (member[t][x]) {
        if (first == nodes) first = t;
        ++occurrences;
      }
    }
    if (occurrences == 0) return fail(TdViolation::vertex_uncovered, "vertex " + std::to_string(x) + " in no bag");
    if (reach(first, [&](std::size_t t) { return member[t][x]; }) != occurrences) {
      return fail(TdViolation::occurrence_disconnected,
                  "bags holding vertex " + std::to_string(x) + " are not connected");
    }
  }
  return {TdViolation::none, {}, td.width()};
}

inline TdVerdict validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  std::vector<std::vector<std::size_t>> edges;
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return validate_tree_decomposition(g.order(), edges, td);
}

using EliminationOrdering = std::vector<std::size_t>;

inline bool is_permutation_of(const EliminationOrdering& ord, std::size_t n) {
  if (ord.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t v : ord) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// Eliminates vertices in order, turning each vertex's later neighbourhood into a clique.
inline Graph fill_in(const Graph& g, const EliminationOrdering& ord) {
  if (!is_permutation_of(ord, g.order())) {
    throw Error(Errc::invalid_permutation, "ordering is not a permutation of the vertices");
  }
  Graph h = g;
  Bits remaining = g.vertex_set();
  for (std::size_t v : ord) {
    remaining &= ~bit(v);
    Bits later = h.neighbors(v) & remaining;
    for_each_bit(later, [&](std::size_t a) {
      for_each_bit(later & ~low_bits(a + 1), [&](std::size_t b) { h.add_edge(a, b); });
    });
  }
  return h;
}

struct ChordalityVerdict {
  bool chordal = false;
  std::optional<EliminationOrdering> perfect_elimination_ordering;
};

/// Maximum-cardinality search; the reverse visit order is tested for being
/// a perfect elimination ordering.
inline ChordalityVerdict is_chordal(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  Bits unvisited = g.vertex_set();
  EliminationOrdering visit;
  visit.reserve(n);
  while (unvisited != 0) {
    std::size_t pick = lowest(unvisited);
    for_each_bit(unvisited, [&](std::size_t v) {
      if (weight[v] > weight[pick]) pick = v;
    });
    visit.push_back(pick);
    unvisited &= ~bit(pick);
    for_each_bit(g.neighbors(pick) & unvisited, [&](std::size_t v) { ++weight[v]; });
  }
  EliminationOrdering peo(visit.rbegin(), visit.rend());
  Bits later = g.vertex_set();
  for (std::size_t v : peo) {
    later &= ~bit(v);
    if (!is_clique(g, g.neighbors(v) & later)) return {false, std::nullopt};
  }
  return {true, std::move(peo)};
}

namespace detail {

// Merges tree nodes whose bag is contained in a neighbour's bag.
inline TreeDecomposition contract_redundant_bags(TreeDecomposition td) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < td.tree.size() && !changed; ++e) {
      auto [a, b] = td.tree[e];
      auto subset = [&](std::size_t x, std::size_t y) {
        return std::includes(td.bags[y].begin(), td.bags[y].end(), td.bags[x].begin(), td.bags[x].end());
      };
      std::size_t drop = 0;
      std::size_t keep = 0;
      if (subset(a, b)) {
        drop = a;
        keep = b;
      } else if (subset(b, a)) {
        drop = b;
        keep = a;
      } else {
        continue;
      }
      td.tree.erase(td.tree.begin() + static_cast<std::ptrdiff_t>(e));
      for (auto& [x, y] : td.tree) {
        if (x == drop) x = keep;
        if (y == drop) y = keep;
      }
      td.bags.erase(td.bags.begin() + static_cast<std::ptrdiff_t>(drop));
      for (auto& [x, y] : td.tree) {
        if (x > drop) --x;
        if (y > drop) --y;
        if (x > y) std::swap(x, y);
      }
      std::sort(td.tree.begin(), td.tree.end());
      changed = true;
    }
  }
  return td;
}

}  // namespace detail

/// Bags {v} plus v's later fill-in neighbours; each bag hangs off the bag of
/// its earliest later neighbour. Bags contained in a neighbouring bag are merged.
inline TreeDecomposition decomposition_from_ordering(const Graph& g, const EliminationOrdering& ord) {
  const Graph filled = fill_in(g, ord);
  const std::size_t n = g.order();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[ord[i]] = i;

  TreeDecomposition td;
  td.vertex_count = n;
  td.bags.resize(n);
  Bits remaining = g.vertex_set();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = ord[i];
    remaining &= ~bit(v);
    const Bits later = filled.neighbors(v) & remaining;
    td.bags[i] = to_vector(later | bit(v));
    if (later != 0) {
      std::size_t parent = n;
      for_each_bit(later, [&](std::size_t u) { parent = std::min(parent, position[u]); });
      td.tree.emplace_back(i, parent);
    } else if (i + 1 < n) {
      td.tree.emplace_back(i, n - 1);
    }
  }
  std::sort(td.tree.begin(), td.tree.end());
  return detail::contract_redundant_bags(std::move(td));
}

struct TreewidthResult {
  /// Empty for the graph without vertices.
  std::optional<std::size_t> treewidth;
  TreeDecomposition decomposition;
  EliminationOrdering ordering;

  /// Tree-width plus one; 0 for the empty graph.
  std::size_t delta() const { return treewidth ? *treewidth + 1 : 0; }
};

namespace detail {

// Vertices outside S and v reachable from v through S, for every v outside S.
class EliminationCost {
 public:
  EliminationCost(const Graph& g, Bits eliminated) : g_(g), eliminated_(eliminated) {
    Bits rest = eliminated;
    while (rest != 0) {
      Bits comp = bit(lowest(rest));
      Bits frontier = comp;
      while (frontier != 0) {
        Bits nb = 0;
        for_each_bit(frontier, [&](std::size_t u) { nb |= g.neighbors(u); });
        frontier = nb & eliminated & ~comp;
        comp |= frontier;
      }
      Bits boundary = 0;
      for_each_bit(comp, [&](std::size_t u) { boundary |= g.neighbors(u); });
      components_.push_back(comp);
      boundaries_.push_back(boundary & ~eliminated);
      rest &= ~comp;
    }
  }

  std::size_t operator()(std::size_t v) const {
    Bits reach = g_.neighbors(v);
    for (std::size_t c = 0; c < components_.size(); ++c) {
      if ((g_.neighbors(v) & components_[c]) != 0) reach |= boundaries_[c];
    }
    return popcount(reach & ~eliminated_ & ~bit(v));
  }

 private:
  const Graph& g_;
  Bits eliminated_;
  std::vector<Bits> components_;
  std::vector<Bits> boundaries_;
};

}  // namespace detail

/// Exact tree-width by dynamic programming over eliminated vertex sets.
/// Returns the lexicographically smallest optimal elimination ordering and
/// the decomposition built from it.
inline TreewidthResult treewidth_dp(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kTreewidthDpCap) {
    throw Error(Errc::cap_exceeded, "treewidth_dp is limited to " + std::to_string(kTreewidthDpCap) + " vertices");
  }
  TreewidthResult result;
  result.decomposition.vertex_count = n;
  if (n == 0) return result;

  const Bits full = g.vertex_set();
  // rest[S]: best achievable maximum cost for eliminating V \ S after S.
  std::vector<std::uint8_t> rest(std::size_t{1} << n, 0);
  for (Bits s = full; s-- > 0;) {
    detail::EliminationCost cost(g, s);
    std::uint8_t best = 0xFF;
    for_each_bit(full & ~s, [&](std::size_t v) {
      auto value = static_cast<std::uint8_t>(std::max<std::size_t>(cost(v), rest[s | bit(v)]));
      best = std::min(best, value);
    });
    rest[s] = best;
  }

  const std::size_t tw = rest[0];
  Bits eliminated = 0;
  for (std::size_t step = 0; step < n; ++step) {
    detail::EliminationCost cost(g, eliminated);
    for (std::size_t v = 0; v < n; ++v) {
      if (contains(eliminated, v)) continue;
      if (std::max<std::size_t>(cost(v), rest[eliminated | bit(v)]) <= tw) {
        result.ordering.push_back(v);
        eliminated |= bit(v);
        break;
      }
    }
  }
  result.treewidth = tw;
  result.decomposition = decomposition_from_ordering(g, result.ordering);
  return result;
}

/// Brute force over all n! orderings on an adjacency matrix. A prefix that
/// already reaches the best width skips every ordering that extends it.
inline std::optional<std::size_t> treewidth_oracle(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kTreewidthOracleCap) {
    throw Error(Errc::cap_exceeded, "treewidth_oracle is limited to 9 vertices");
  }
  if (n == 0) return std::nullopt;
  std::array<std::uint32_t, kTreewidthOracleCap> base{};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && g.has_edge(u, v)) base[u] |= std::uint32_t{1} << v;
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::size_t best = n;
  do {
    auto adj = base;
    std::uint32_t alive = (std::uint32_t{1} << n) - 1;
    std::size_t width = 0;
    std::size_t i = 0;
    for (; i < n; ++i) {
      const std::size_t v = perm[i];
      alive &= ~(std::uint32_t{1} << v);
      const std::uint32_t later = adj[v] & alive;
      width = std::max<std::size_t>(width, std::popcount(later));
      if (width >= best) break;
      for (std::size_t u = 0; u < n; ++u) {
        if (later >> u & 1) adj[u] |= later & ~(std::uint32_t{1} << u);
      }
    }
    if (i < n) {
      std::sort(perm.begin() + static_cast<std::ptrdiff_t>(i) + 1, perm.end(), std::greater<>());
    } else {
      best = width;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct ChordalCompletion {
  Graph completion;
  GraphMorphism embedding;
  /// Clique number of the completion.
  std::size_t width = 0;
  EliminationOrdering ordering;
};

/// Chordal completion of least clique number, found by branch and bound over
/// elimination orderings (memoised on the eliminated set).
inline ChordalCompletion min_chordal_completion(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCompletionCap) {
    throw Error(Errc::cap_exceeded, "min_chordal_completion is limited to 16 vertices");
  }
  const Bits full = g.vertex_set();
  std::vector<Bits> start(n);
  for (std::size_t v = 0; v < n; ++v) start[v] = g.neighbors(v);

  // Min-degree ordering as the initial bound.
  EliminationOrdering best_order;
  std::size_t best = n;
  {
    auto adj = start;
    Bits left = full;
    std::size_t width = 0;
    while (left != 0) {
      std::size_t pick = lowest(left);
      for_each_bit(left, [&](std::size_t v) {
        if (popcount(adj[v] & left) < popcount(adj[pick] & left)) pick = v;
      });
      const Bits nb = adj[pick] & left & ~bit(pick);
      width = std::max(width, popcount(nb));
      for_each_bit(nb, [&](std::size_t u) { adj[u] |= nb & ~bit(u); });
      left &= ~bit(pick);
      best_order.push_back(pick);
    }
    best = width;
  }

  std::unordered_map<Bits, std::size_t> seen;
  EliminationOrdering prefix;
  auto search = [&](auto&& self, const std::vector<Bits>& adj, Bits left, std::size_t cost) -> void {
    if (left == 0) {
      if (cost < best) {
        best = cost;
        best_order = prefix;
      }
      return;
    }
    auto [it, fresh] = seen.try_emplace(left, cost);
    if (!fresh) {
      if (it->second <= cost) return;
      it->second = cost;
    }
    std::size_t min_degree = n;
    for_each_bit(left, [&](std::size_t v) { min_degree = std::min(min_degree, popcount(adj[v] & left)); });
    if (std::max(cost, min_degree) >= best) return;
    for_each_bit(left, [&](std::size_t v) {
      const Bits nb = adj[v] & left;
      const std::size_t next_cost = std::max(cost, popcount(nb));
      if (next_cost >= best) return;
      auto next = adj;
      for_each_bit(nb, [&](std::size_t u) { next[u] |= nb & ~bit(u); });
      prefix.push_back(v);
      self(self, next, left & ~bit(v), next_cost);
      prefix.pop_back();
    });
  };
  search(search, start, full, 0);

  ChordalCompletion out;
  out.ordering = best_order;
  out.completion = fill_in(g, best_order);
  out.width = clique_number(out.completion);
  VertexMap id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  out.embedding = GraphMorphism{g, out.completion, std::move(id)};
  return out;
}

/// Maximal cliques of a chordal graph, each sorted, in lexicographic order.
inline std::vector<Bag> maximal_cliques(const Graph& g) {
  auto verdict = is_chordal(g);
  if (!verdict.chordal) throw Error(Errc::not_chordal, "maximal_cliques needs a chordal graph");
  std::vector<Bits> candidates;
  Bits later = g.vertex_set();
  for (std::size_t v : *verdict.perfect_elimination_ordering) {
    later &= ~bit(v);
    candidates.push_back((g.neighbors(v) & later) | bit(v));
  }
  std::vector<Bag> cliques;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
      if (i == j) continue;
      const bool inside = is_subset(candidates[i], candidates[j]);
      maximal = !inside || (candidates[i] == candidates[j] && i < j);
    }
    if (maximal) cliques.push_back(to_vector(candidates[i]));
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

struct CliqueTree {
  TreeDecomposition decomposition;
  /// Shared clique along each tree edge, parallel to decomposition.tree.
  std::vector<Bag> separators;
};

/// Maximum-weight spanning tree of the clique intersection graph.
inline CliqueTree clique_tree(const Graph& g) {
  CliqueTree out;
  out.decomposition.vertex_count = g.order();
  out.decomposition.bags = maximal_cliques(g);
  const auto& bags = out.decomposition.bags;
  const std::size_t k = bags.size();

  struct Candidate {
    std::size_t weight, a, b;
  };
  std::vector<Candidate> candidates;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      candidates.push_back({popcount(to_bits(bags[a]) & to_bits(bags[b])), a, b});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& x, const Candidate& y) { return x.weight > y.weight; });
  std::vector<std::size_t> root(k);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& c : candidates) {
    std::size_t ra = find(c.a);
    std::size_t rb = find(c.b);
    if (ra == rb) continue;
    root[ra] = rb;
    out.decomposition.tree.emplace_back(c.a, c.b);
    out.separators.push_back(to_vector(to_bits(bags[c.a]) & to_bits(bags[c.b])));
  }
  return out;
}

/// Tree-width plus one, cross-checked against the least clique number of a
/// chordal completion whenever the graph is within the completion cap.
inline std::size_t triangulation_graph(const Graph& g) {
  const std::size_t delta = treewidth_dp(g).delta();
  if (g.order() <= kCompletionCap) {
    const std::size_t chordal = min_chordal_completion(g).width;
    if (chordal != delta) {
      throw std::logic_error("triangulation_graph: chordal completion width " + std::to_string(chordal) +
                             " disagrees with treewidth + 1 = " + std::to_string(delta));
    }
  }
  return delta;
}

}  // namespace spined

#endif  // SPINED_CHORDAL_HPP
