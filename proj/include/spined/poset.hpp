#ifndef SPINED_POSET_HPP
#define SPINED_POSET_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spined/bits.hpp"
#include "spined/core.hpp"
#include "spined/error.hpp"

namespace spined {

/// Finite partial order on {0..n-1}; up[i] holds every j with i <= j.
class Poset {
 public:
  static constexpr std::size_t kMaxElements = 64;

  Poset() = default;

  /// Reflexive-transitive closure of `relation`; throws if the closure is
  /// not antisymmetric.
  Poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relation) : up_(n) {
    if (n > kMaxElements) throw Error(Errc::cap_exceeded, "posets are limited to 64 elements");
    for (std::size_t i = 0; i < n; ++i) up_[i] = bit(i);
    for (auto [a, b] : relation) {
      if (a >= n || b >= n) throw Error(Errc::invalid_argument, "relation element out of range");
      up_[a] |= bit(b);
    }
    close();
  }

  std::size_t size() const noexcept { return up_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return contains(up_[a], b); }
  Bits up_set(std::size_t a) const { return up_[a]; }

  std::vector<std::pair<std::size_t, std::size_t>> relation() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a) {
      for_each_bit(up_[a], [&](std::size_t b) { out.emplace_back(a, b); });
    }
    return out;
  }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  void close() {
    const std::size_t n = up_.size();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (contains(up_[i], k)) up_[i] |= up_[k];
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for_each_bit(up_[a] & ~bit(a), [&](std::size_t b) {
        if (contains(up_[b], a)) {
          throw Error(Errc::antisymmetry_violated,
                      "elements " + std::to_string(a) + " and " + std::to_string(b) + " are identified");
        }
      });
    }
  }

  std::vector<Bits> up_;
};

using PosetMorphism = Arrow<Poset>;

/// L_n: 0 <= 1 <= ... <= n-1.
inline Poset chain_poset(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset(n, rel);
}

inline bool is_order_preserving_injection(const PosetMorphism& m) {
  const std::size_t n = m.domain.size();
  if (m.map.size() != n) return false;
  Bits seen = 0;
  for (std::size_t t : m.map) {
    if (t >= m.codomain.size() || contains(seen, t)) return false;
    seen |= bit(t);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (m.domain.leq(a, b) && !m.codomain.leq(m.map[a], m.map[b])) return false;
    }
  }
  return true;
}

inline std::vector<PosetMorphism> enumerate_poset_morphisms(const Poset& dom, const Poset& cod,
                                                            const SearchOptions& opts = {}) {
  const std::size_t n = dom.size();
  const std::size_t m = cod.size();
  std::vector<PosetMorphism> out;
  if (!opts.pinned.empty() && opts.pinned.size() != n) {
    throw Error(Errc::invalid_argument, "pinned map size differs from domain size");
  }
  if (n > m) return out;
  std::size_t free = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (opts.pinned.empty() || opts.pinned[v] == kFree) ++free;
  }
  if (free > opts.cap) {
    throw Error(Errc::cap_exceeded, "morphism enumeration over " + std::to_string(free) +
                                        " free elements exceeds cap " + std::to_string(opts.cap));
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
      if (contains(used, t)) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        if (dom.leq(u, v) && !cod.leq(map[u], t)) ok = false;
        if (dom.leq(v, u) && !cod.leq(t, map[u])) ok = false;
      }
      if (!ok) continue;
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

/// Pushout in posets with monotone maps: disjoint union, identified along
/// the two images, then closed. A keeps its indices; B's rest follows.
inline Cocone<Poset> poset_pushout(const PosetMorphism& f, const PosetMorphism& g) {
  if (!(f.domain == g.domain)) throw Error(Errc::spine_mismatch, "poset_pushout legs must share their domain");
  if (!is_order_preserving_injection(f) || !is_order_preserving_injection(g)) {
    throw Error(Errc::legs_not_mono, "poset_pushout legs must be order-preserving injections");
  }
  const Poset& a = f.codomain;
  const Poset& b = g.codomain;
  VertexMap into(b.size(), kFree);
  for (std::size_t i = 0; i < f.domain.size(); ++i) into[g.map[i]] = f.map[i];
  std::size_t next = a.size();
  for (auto& t : into) {
    if (t == kFree) t = next++;
  }
  std::vector<std::pair<std::size_t, std::size_t>> rel = a.relation();
  for (auto [x, y] : b.relation()) rel.emplace_back(into[x], into[y]);
  Poset apex(next, rel);
  VertexMap left(a.size());
  std::iota(left.begin(), left.end(), std::size_t{0});
  PosetMorphism l{a, apex, std::move(left)};
  PosetMorphism r{b, apex, std::move(into)};
  return {std::move(apex), std::move(l), std::move(r)};
}

inline Cocone<Poset> poset_pushout(const Span<Poset>& span) {
  if (!(span.left.domain == chain_poset(span.index))) {
    throw Error(Errc::spine_mismatch, "span apex is not L_" + std::to_string(span.index));
  }
  return poset_pushout(span.left, span.right);
}

/// Order isomorphism by exhaustive search; at most 8 elements.
inline std::optional<VertexMap> find_poset_isomorphism(const Poset& p, const Poset& q) {
  constexpr std::size_t kCap = 8;
  if (p.size() != q.size() || p.relation().size() != q.relation().size()) return std::nullopt;
  if (p.size() > kCap) throw Error(Errc::cap_exceeded, "poset isomorphism search is limited to 8 elements");
  VertexMap perm(p.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t a = 0; a < p.size() && ok; ++a) {
      for (std::size_t b = 0; b < p.size() && ok; ++b) ok = p.leq(a, b) == q.leq(perm[a], perm[b]);
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

/// Finite posets with order-preserving injections; spine L_n; pushouts
/// computed among monotone maps.
inline SpinedInstance<Poset> poset_instance() {
  SpinedInstance<Poset> inst;
  inst.name = "poset-mono";
  inst.object_kind = "poset";
  inst.points = [](const Poset& p) { return p.size(); };
  inst.is_morphism = [](const PosetMorphism& m) { return is_order_preserving_injection(m); };
  inst.enumerate = [](const Poset& a, const Poset& b, const SearchOptions& opts) {
    return enumerate_poset_morphisms(a, b, opts);
  };
  inst.spine = [](std::size_t n) { return chain_poset(n); };
  inst.proxy_pushout = [](const Span<Poset>& span) { return poset_pushout(span); };
  inst.spine_cap = Poset::kMaxElements;
  inst.spine_is_chain = true;
  return inst;
}

}  // namespace spined

#endif  // SPINED_POSET_HPP
