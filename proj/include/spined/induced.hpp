#ifndef SPINED_INDUCED_HPP
#define SPINED_INDUCED_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spined/bits.hpp"
#include "spined/chordal.hpp"
#include "spined/core.hpp"
#include "spined/error.hpp"
#include "spined/graph.hpp"

namespace spined {

inline constexpr std::size_t kPartitionCap = 10;

/// A vertex labeling of `base` using every label in {0..classes-1}.
struct Labeling {
  Graph base;
  std::vector<std::size_t> labels;

  std::size_t classes() const {
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  }

  Bits label_class(std::size_t label) const {
    Bits out = 0;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      if (labels[v] == label) out |= bit(v);
    }
    return out;
  }

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Relabels in order of first occurrence, so the range becomes contiguous.
inline std::vector<std::size_t> normalize_labels(const std::vector<std::size_t>& labels) {
  std::map<std::size_t, std::size_t> seen;
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (std::size_t l : labels) {
    auto it = seen.try_emplace(l, seen.size()).first;
    out.push_back(it->second);
  }
  return out;
}

inline Labeling make_labeling(Graph base, std::vector<std::size_t> labels) {
  if (labels.size() != base.order()) {
    throw Error(Errc::invalid_argument, "labeling must assign a label to every vertex");
  }
  std::vector<bool> used(labels.size(), false);
  for (std::size_t l : labels) {
    if (l >= labels.size()) throw Error(Errc::invalid_argument, "label out of range");
    used[l] = true;
  }
  const auto k = static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
  if (!std::all_of(used.begin(), used.begin() + static_cast<std::ptrdiff_t>(k), [](bool b) { return b; })) {
    throw Error(Errc::invalid_argument, "labels must be contiguous from 0");
  }
  return {std::move(base), std::move(labels)};
}

inline Labeling identity_labeling(const Graph& g) {
  std::vector<std::size_t> labels(g.order());
  for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = v;
  return {g, std::move(labels)};
}

inline Labeling constant_labeling(const Graph& g) { return {g, std::vector<std::size_t>(g.order(), 0)}; }

/// Classes become vertices; loops are dropped.
inline Graph quotient_graph(const Labeling& lab) {
  Graph q(lab.classes());
  for (auto [u, v] : lab.base.edges()) {
    if (lab.labels[u] != lab.labels[v]) q.add_edge(lab.labels[u], lab.labels[v]);
  }
  return q;
}

/// Every outside vertex sees all of s or none of it.
inline bool is_module(const Graph& g, Bits s) {
  const Bits outside = g.vertex_set() & ~s;
  bool ok = true;
  for_each_bit(outside, [&](std::size_t z) {
    const Bits seen = g.neighbors(z) & s;
    if (seen != 0 && seen != s) ok = false;
  });
  return ok;
}

inline bool is_modular_labeling(const Labeling& lab) {
  for (std::size_t c = 0; c < lab.classes(); ++c) {
    if (!is_module(lab.base, lab.label_class(c))) return false;
  }
  return true;
}

inline bool is_proper_coloring(const Labeling& lab) {
  for (auto [u, v] : lab.base.edges()) {
    if (lab.labels[u] == lab.labels[v]) return false;
  }
  return true;
}

/// Calls f on every set partition of {0..n-1} as a restricted-growth string.
template <class F>
void for_each_partition(std::size_t n, F&& f) {
  std::vector<std::size_t> rgs(n, 0);
  auto extend = [&](auto&& self, std::size_t v, std::size_t blocks) -> void {
    if (v == n) {
      f(static_cast<const std::vector<std::size_t>&>(rgs));
      return;
    }
    for (std::size_t b = 0; b <= blocks && b < n; ++b) {
      rgs[v] = b;
      self(self, v + 1, std::max(blocks, b + 1));
    }
  };
  extend(extend, 0, 0);
}

struct LabelingWidth {
  /// Tree-width of the best quotient; empty when no labeling qualifies.
  std::optional<std::size_t> value;
  std::optional<Labeling> witness;
};

struct ModularWidth : LabelingWidth {
  /// Minimum including the one-class labeling.
  std::optional<std::size_t> with_trivial;
};

namespace detail {

inline void require_partition_cap(const Graph& g, const char* what) {
  if (g.order() > kPartitionCap) {
    throw Error(Errc::cap_exceeded, std::string(what) + " is limited to 10 vertices");
  }
}

// Tree-width of small quotients, memoised on the adjacency rows.
class QuotientWidths {
 public:
  std::optional<std::size_t> operator()(const Graph& q) {
    std::vector<Bits> key;
    key.reserve(q.order());
    for (std::size_t v = 0; v < q.order(); ++v) key.push_back(q.neighbors(v));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto tw = treewidth_dp(q).treewidth;
    cache_.emplace(std::move(key), tw);
    return tw;
  }

 private:
  std::map<std::vector<Bits>, std::optional<std::size_t>> cache_;
};

inline void consider(LabelingWidth& best, std::optional<std::size_t> tw, const Graph& g,
                     const std::vector<std::size_t>& labels) {
  if (!tw) return;
  if (!best.value || *tw < *best.value) {
    best.value = tw;
    best.witness = Labeling{g, labels};
  }
}

}  // namespace detail

/// Least tree-width of a modular quotient. The headline value skips the
/// one-class labeling once there are two or more vertices.
inline ModularWidth modular_treewidth(const Graph& g) {
  detail::require_partition_cap(g, "modular_treewidth");
  ModularWidth best;
  detail::QuotientWidths widths;
  for_each_partition(g.order(), [&](const std::vector<std::size_t>& labels) {
    Labeling lab{g, labels};
    if (!is_modular_labeling(lab)) return;
    const auto tw = widths(quotient_graph(lab));
    if (tw && (!best.with_trivial || *tw < *best.with_trivial)) best.with_trivial = tw;
    if (g.order() >= 2 && lab.classes() == 1) return;
    detail::consider(best, tw, g, labels);
  });
  return best;
}

/// Least tree-width of the quotient by a proper colouring.
inline LabelingWidth chromatic_treewidth(const Graph& g) {
  detail::require_partition_cap(g, "chromatic_treewidth");
  LabelingWidth best;
  detail::QuotientWidths widths;
  for_each_partition(g.order(), [&](const std::vector<std::size_t>& labels) {
    Labeling lab{g, labels};
    if (!is_proper_coloring(lab)) return;
    detail::consider(best, widths(quotient_graph(lab)), g, labels);
  });
  return best;
}

inline std::size_t chromatic_number(const Graph& g) {
  detail::require_partition_cap(g, "chromatic_number");
  std::size_t best = g.order();
  for_each_partition(g.order(), [&](const std::vector<std::size_t>& labels) {
    Labeling lab{g, labels};
    if (is_proper_coloring(lab)) best = std::min(best, lab.classes());
  });
  return best;
}

/// S_{↓f}: objects of type Source, hom(A, B) = hom_C(f(A), f(B)), spine and
/// proxy pushouts given by chosen preimages.
template <class Source, class Object>
SpinedInstance<Source> induced_instance(const SpinedInstance<Object>& base,
                                        std::function<Object(const Source&)> f,
                                        std::function<Source(std::size_t)> spine_preimage,
                                        std::function<Source(const Object&)> distinguished_preimage) {
  SpinedInstance<Source> inst;
  inst.name = base.name + "/induced";
  inst.object_kind = "induced " + base.object_kind;
  inst.points = [base, f](const Source& x) { return base.points(f(x)); };
  inst.is_morphism = [base, f](const Arrow<Source>& m) {
    return base.is_morphism(Arrow<Object>{f(m.domain), f(m.codomain), m.map});
  };
  inst.enumerate = [base, f](const Source& a, const Source& b, const SearchOptions& opts) {
    std::vector<Arrow<Source>> out;
    for (auto& m : base.enumerate(f(a), f(b), opts)) out.push_back({a, b, std::move(m.map)});
    return out;
  };
  inst.spine = [base, f, spine_preimage](std::size_t n) {
    Source s = spine_preimage(n);
    if (!(f(s) == base.spine(n))) {
      throw Error(Errc::surjection_misses_spine, "no preimage of spine object " + std::to_string(n));
    }
    return s;
  };
  inst.proxy_pushout = [base, f, distinguished_preimage](const Span<Source>& span) {
    Span<Object> image{span.index,
                       {f(span.left.domain), f(span.left.codomain), span.left.map},
                       {f(span.right.domain), f(span.right.codomain), span.right.map}};
    Cocone<Object> c = base.proxy_pushout(image);
    Source z = distinguished_preimage(c.apex);
    if (!(f(z) == c.apex)) {
      throw Error(Errc::no_distinguished_preimage, "chosen preimage does not map onto the proxy pushout");
    }
    Arrow<Source> left{span.left.codomain, z, std::move(c.left.map)};
    Arrow<Source> right{span.right.codomain, z, std::move(c.right.map)};
    return Cocone<Source>{std::move(z), std::move(left), std::move(right)};
  };
  inst.enumeration_cap = base.enumeration_cap;
  inst.spine_cap = base.spine_cap;
  inst.spine_is_chain = base.spine_is_chain;
  return inst;
}

/// Labelled graphs over GRPH_mono via the quotient map.
inline SpinedInstance<Labeling> labeled_graph_instance() {
  return induced_instance<Labeling, Graph>(
      grph_mono_instance(), [](const Labeling& lab) { return quotient_graph(lab); },
      [](std::size_t n) { return identity_labeling(complete_graph(n)); },
      [](const Graph& apex) { return identity_labeling(apex); });
}

/// Δ_ℓ[lab] = tw(G/lab) + 1.
inline std::size_t labeled_triangulation(const Labeling& lab) { return treewidth_dp(quotient_graph(lab)).delta(); }

inline Labeling random_labeling(std::mt19937_64& rng, const Graph& g) {
  std::vector<std::size_t> labels(g.order());
  for (auto& l : labels) l = uniform_below(rng, g.order());
  return {g, normalize_labels(labels)};
}

}  // namespace spined

#endif  // SPINED_INDUCED_HPP
