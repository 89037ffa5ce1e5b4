#ifndef SPINED_CORE_HPP
#define SPINED_CORE_HPP

// Instance-independent machinery: arrows, spans, the runnable description of
// a spined category, and the checkers for its axioms and for S-functors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spined/error.hpp"

namespace spined {

using VertexMap = std::vector<std::size_t>;

/// Marks an unconstrained entry of a pinned vertex map.
inline constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

inline constexpr std::size_t kDefaultEnumerationCap = 8;

/// A vertex map between two objects. Objects without underlying points (the
/// divisibility poset) carry an empty map.
template <class Object>
struct Arrow {
  Object domain;
  Object codomain;
  VertexMap map;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// `second ∘ first`.
template <class Object>
Arrow<Object> compose(const Arrow<Object>& first, const Arrow<Object>& second) {
  if (!(first.codomain == second.domain)) {
    throw Error(Errc::invalid_argument, "compose: codomain and domain differ");
  }
  VertexMap map(first.map.size());
  for (std::size_t i = 0; i < first.map.size(); ++i) map[i] = second.map.at(first.map[i]);
  return {first.domain, second.codomain, std::move(map)};
}

/// A span G <- Omega_n -> H.
template <class Object>
struct Span {
  std::size_t index = 0;
  Arrow<Object> left;
  Arrow<Object> right;
};

/// A cocone G -> apex <- H, as produced by a proxy pushout.
template <class Object>
struct Cocone {
  Object apex;
  Arrow<Object> left;
  Arrow<Object> right;
};

struct SearchOptions {
  /// Either empty or one entry per domain point; kFree leaves a point open.
  VertexMap pinned;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  /// Maximum number of unpinned domain points an enumeration may branch on.
  std::size_t cap = kDefaultEnumerationCap;
};

template <class Object>
struct SpinedInstance {
  using ArrowType = Arrow<Object>;

  std::string name;
  std::string object_kind;
  /// Number of points an arrow's vertex map ranges over (0 for point-free objects).
  std::function<std::size_t(const Object&)> points;
  std::function<bool(const ArrowType&)> is_morphism;
  /// All morphisms dom -> cod agreeing with `pinned`, lexicographic in the map.
  std::function<std::vector<ArrowType>(const Object&, const Object&, const SearchOptions&)>
      enumerate;
  std::function<Object(std::size_t)> spine;
  std::function<Cocone<Object>(const Span<Object>&)> proxy_pushout;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  /// Largest spine index any search may build.
  std::size_t spine_cap = 64;
  /// Omega_n -> Omega_{n+1} exists for every n, so hom(X, Omega_n) is
  /// eventually non-empty and stays so.
  bool spine_is_chain = false;
};

template <class Object>
Arrow<Object> identity_arrow(const SpinedInstance<Object>& inst, const Object& x) {
  VertexMap map(inst.points(x));
  std::iota(map.begin(), map.end(), std::size_t{0});
  return {x, x, std::move(map)};
}

template <class Object>
std::vector<Arrow<Object>> enumerate_morphisms(const SpinedInstance<Object>& inst,
                                               const Object& from, const Object& to,
                                               std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  SearchOptions opts;
  opts.limit = limit;
  opts.cap = inst.enumeration_cap;
  return inst.enumerate(from, to, opts);
}

template <class Object>
bool has_morphism(const SpinedInstance<Object>& inst, const Object& from, const Object& to) {
  return !enumerate_morphisms(inst, from, to, 1).empty();
}

namespace detail {

template <class Object>
void require_within_cap(const SpinedInstance<Object>& inst, const Object& x, const char* what) {
  if (inst.points(x) > inst.enumeration_cap) {
    throw Error(Errc::cap_exceeded, std::string(what) + ": object has " +
                                        std::to_string(inst.points(x)) + " points, cap is " +
                                        std::to_string(inst.enumeration_cap));
  }
}

// Least n in [0, spine_cap] with pred(n), using monotonicity when the spine is a chain.
template <class Object, class Pred>
std::optional<std::size_t> least_spine_index(const SpinedInstance<Object>& inst, Pred&& pred) {
  if (!inst.spine_is_chain) {
    for (std::size_t n = 0; n <= inst.spine_cap; ++n) {
      if (pred(n)) return n;
    }
    return std::nullopt;
  }
  if (pred(0)) return 0;
  std::size_t lo = 0;  // pred(lo) is false
  std::size_t hi = 1;
  while (!pred(hi)) {
    lo = hi;
    if (hi == inst.spine_cap) return std::nullopt;
    hi = std::min(hi * 2, inst.spine_cap);
  }
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace detail

/// SC1 witness: the least spine index X maps into, with one such morphism.
template <class Object>
struct Sc1Witness {
  std::size_t index = 0;
  Arrow<Object> morphism;
};

template <class Object>
Sc1Witness<Object> check_sc1(const SpinedInstance<Object>& inst, const Object& x) {
  detail::require_within_cap(inst, x, "check_sc1");
  auto maps_into = [&](std::size_t n) { return has_morphism(inst, x, inst.spine(n)); };
  auto n = detail::least_spine_index(inst, maps_into);
  if (!n) {
    throw Error(Errc::cap_exceeded, "check_sc1: no spine object up to index " +
                                        std::to_string(inst.spine_cap) + " receives the object");
  }
  auto witness = enumerate_morphisms(inst, x, inst.spine(*n), 1);
  return {*n, std::move(witness.front())};
}

/// Least n with a morphism x -> Omega_n.
template <class Object>
std::size_t object_order(const SpinedInstance<Object>& inst, const Object& x) {
  return check_sc1(inst, x).index;
}

/// Greatest n with a morphism Omega_n -> x.
template <class Object>
std::size_t generalized_clique(const SpinedInstance<Object>& inst, const Object& x) {
  std::size_t best = 0;
  for (std::size_t n = 0; n <= inst.spine_cap; ++n) {
    if (has_morphism(inst, inst.spine(n), x)) {
      best = n;
    } else if (inst.spine_is_chain) {
      break;
    }
  }
  return best;
}

template <class Object>
struct Sc2Verdict {
  Arrow<Object> mediator;
  /// Commuting morphisms found, counted up to 2.
  std::size_t commuting = 0;
  bool unique = false;
  Cocone<Object> source;
  Cocone<Object> target;
};

template <class Object>
bool is_valid_span(const SpinedInstance<Object>& inst, const Span<Object>& span) {
  const Object omega = inst.spine(span.index);
  return span.left.domain == omega && span.right.domain == omega && inst.is_morphism(span.left) &&
         inst.is_morphism(span.right);
}

/// SC2: the unique mediator P(g, h) -> P(g' g, h' h) commuting with both cocones.
template <class Object>
Sc2Verdict<Object> check_sc2(const SpinedInstance<Object>& inst, const Span<Object>& span,
                             const Arrow<Object>& ext_left, const Arrow<Object>& ext_right) {
  if (!is_valid_span(inst, span)) throw Error(Errc::invalid_argument, "check_sc2: invalid span");
  if (!(ext_left.domain == span.left.codomain) || !(ext_right.domain == span.right.codomain) ||
      !inst.is_morphism(ext_left) || !inst.is_morphism(ext_right)) {
    throw Error(Errc::invalid_argument, "check_sc2: extensions do not extend the span");
  }
  for (const Object* obj : {&ext_left.domain, &ext_right.domain, &ext_left.codomain, &ext_right.codomain}) {
    detail::require_within_cap(inst, *obj, "check_sc2");
  }

  Sc2Verdict<Object> verdict;
  verdict.source = inst.proxy_pushout(span);
  verdict.target = inst.proxy_pushout(
      Span<Object>{span.index, compose(span.left, ext_left), compose(span.right, ext_right)});

  const Arrow<Object> want_left = compose(ext_left, verdict.target.left);
  const Arrow<Object> want_right = compose(ext_right, verdict.target.right);

  SearchOptions opts;
  opts.limit = 2;
  opts.cap = inst.enumeration_cap;
  const std::size_t apex_points = inst.points(verdict.source.apex);
  if (apex_points > 0) {
    opts.pinned.assign(apex_points, kFree);
    auto pin = [&](const Arrow<Object>& leg, const Arrow<Object>& want) {
      for (std::size_t v = 0; v < leg.map.size(); ++v) {
        std::size_t& slot = opts.pinned[leg.map[v]];
        if (slot != kFree && slot != want.map[v]) return false;
        slot = want.map[v];
      }
      return true;
    };
    if (!pin(verdict.source.left, want_left) || !pin(verdict.source.right, want_right)) {
      throw Error(Errc::no_mediator, "check_sc2: commuting constraints conflict");
    }
  }

  auto candidates = inst.enumerate(verdict.source.apex, verdict.target.apex, opts);
  std::vector<Arrow<Object>> commuting;
  for (auto& m : candidates) {
    if (compose(verdict.source.left, m) == want_left && compose(verdict.source.right, m) == want_right) {
      commuting.push_back(std::move(m));
    }
  }
  if (commuting.empty()) throw Error(Errc::no_mediator, "check_sc2: no commuting morphism");
  verdict.commuting = commuting.size();
  verdict.unique = commuting.size() == 1;
  verdict.mediator = std::move(commuting.front());
  return verdict;
}

/// A candidate functor into the naturals ordered by <=.
template <class Object>
struct SFunctor {
  std::string name;
  std::function<std::size_t(const Object&)> evaluate;

  std::size_t operator()(const Object& x) const { return evaluate(x); }
};

/// Pointwise maximum of two S-functors.
template <class Object>
SFunctor<Object> sfunctor_join(SFunctor<Object> f, SFunctor<Object> g) {
  std::string name = "join(" + f.name + "," + g.name + ")";
  return {std::move(name), [f = std::move(f), g = std::move(g)](const Object& x) {
            return std::max(f(x), g(x));
          }};
}

struct Sf2Failure {
  std::size_t span = 0;
  std::size_t apex_value = 0;
  std::size_t left_value = 0;
  std::size_t right_value = 0;
};

struct MonotonicityFailure {
  std::size_t span = 0;
  std::string arrow;  // which arrow of the span or cocone
  std::size_t from_value = 0;
  std::size_t to_value = 0;
};

struct SpinalReport {
  std::vector<std::size_t> sf1_failures;  // spine indices n with F(Omega_n) != n
  std::vector<Sf2Failure> sf2_failures;
  std::vector<MonotonicityFailure> monotonicity_failures;
  std::size_t spans_checked = 0;
  std::size_t spine_checked = 0;

  bool sf1() const { return sf1_failures.empty(); }
  bool sf2() const { return sf2_failures.empty(); }
  bool monotone() const { return monotonicity_failures.empty(); }
  bool passed() const { return sf1() && sf2() && monotone(); }
};

/// Checks SF1 for n <= spine_limit, SF2 on every span, and monotonicity on
/// every arrow of each span and its proxy-pushout cocone.
template <class Object>
SpinalReport check_spinal(const SpinedInstance<Object>& inst, const SFunctor<Object>& f,
                          const std::vector<Span<Object>>& spans, std::size_t spine_limit) {
  SpinalReport report;
  report.spine_checked = spine_limit + 1;
  for (std::size_t n = 0; n <= spine_limit; ++n) {
    if (f(inst.spine(n)) != n) report.sf1_failures.push_back(n);
  }
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const auto& span = spans[i];
    const auto cocone = inst.proxy_pushout(span);
    const std::size_t omega = f(span.left.domain);
    const std::size_t left = f(span.left.codomain);
    const std::size_t right = f(span.right.codomain);
    const std::size_t apex = f(cocone.apex);
    if (apex != std::max(left, right)) report.sf2_failures.push_back({i, apex, left, right});
    auto monotone = [&](const char* which, std::size_t from, std::size_t to) {
      if (from > to) report.monotonicity_failures.push_back({i, which, from, to});
    };
    monotone("span.left", omega, left);
    monotone("span.right", omega, right);
    monotone("cocone.left", left, apex);
    monotone("cocone.right", right, apex);
  }
  report.spans_checked = spans.size();
  return report;
}

/// Uniform integer in [0, bound) drawn directly from the engine, so sampled
/// sequences do not depend on the standard library's distributions.
inline std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
  return bound == 0 ? 0 : static_cast<std::size_t>(rng() % bound);
}

/// Seeded span sampler. `random_object` draws a candidate part; the spine
/// index is drawn below both parts' generalized clique numbers and the legs
/// are drawn from the full lexicographic morphism lists.
template <class Object, class Generator>
std::vector<Span<Object>> sample_spans(const SpinedInstance<Object>& inst, Generator&& random_object,
                                       std::size_t count, std::uint64_t seed,
                                       std::size_t max_index = std::numeric_limits<std::size_t>::max()) {
  std::mt19937_64 rng(seed);
  std::vector<Span<Object>> spans;
  spans.reserve(count);
  while (spans.size() < count) {
    Object left = random_object(rng);
    Object right = random_object(rng);
    std::size_t top = std::min({generalized_clique(inst, left), generalized_clique(inst, right), max_index});
    std::size_t n = uniform_below(rng, top + 1);
    Object omega = inst.spine(n);
    auto into_left = enumerate_morphisms(inst, omega, left);
    auto into_right = enumerate_morphisms(inst, omega, right);
    if (into_left.empty() || into_right.empty()) continue;
    Span<Object> span{n, std::move(into_left[uniform_below(rng, into_left.size())]),
                      std::move(into_right[uniform_below(rng, into_right.size())])};
    spans.push_back(std::move(span));
  }
  return spans;
}

/// A random morphism out of x into an object drawn by `random_target`; falls
/// back to the identity when no attempt finds one.
template <class Object, class Generator>
Arrow<Object> random_extension(const SpinedInstance<Object>& inst, const Object& x,
                               Generator&& random_target, std::mt19937_64& rng, std::size_t attempts = 16) {
  for (std::size_t i = 0; i < attempts; ++i) {
    Object y = random_target(rng, x);
    auto arrows = enumerate_morphisms(inst, x, y, 64);
    if (!arrows.empty()) return std::move(arrows[uniform_below(rng, arrows.size())]);
  }
  return identity_arrow(inst, x);
}

}  // namespace spined

#endif  // SPINED_CORE_HPP
