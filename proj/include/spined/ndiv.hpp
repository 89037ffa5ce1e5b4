#ifndef SPINED_NDIV_HPP
#define SPINED_NDIV_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spined/core.hpp"
#include "spined/error.hpp"

namespace spined {

/// A positive integer kept as its factorization: (prime, exponent) pairs
/// sorted by prime, exponents positive. 1 is the empty factorization.
class DivObject {
 public:
  using Factor = std::pair<std::uint64_t, std::size_t>;

  DivObject() = default;

  explicit DivObject(std::uint64_t value) {
    if (value == 0) throw Error(Errc::invalid_argument, "divisibility objects are positive integers");
    for (std::uint64_t p = 2; p * p <= value; ++p) {
      std::size_t e = 0;
      while (value % p == 0) {
        value /= p;
        ++e;
      }
      if (e > 0) factors_.emplace_back(p, e);
    }
    if (value > 1) factors_.emplace_back(value, 1);
  }

  static DivObject from_factors(std::vector<Factor> factors) {
    DivObject d;
    std::sort(factors.begin(), factors.end());
    for (auto& f : factors) {
      if (f.second > 0) d.factors_.push_back(f);
    }
    return d;
  }

  const std::vector<Factor>& factors() const noexcept { return factors_; }

  std::size_t exponent(std::uint64_t p) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{p, 0});
    return it != factors_.end() && it->first == p ? it->second : 0;
  }

  boost::multiprecision::cpp_int value() const {
    boost::multiprecision::cpp_int v = 1;
    for (auto [p, e] : factors_) v *= boost::multiprecision::pow(boost::multiprecision::cpp_int(p), static_cast<unsigned>(e));
    return v;
  }

  std::string to_string() const { return value().str(); }

  friend bool operator==(const DivObject&, const DivObject&) = default;

 private:
  std::vector<Factor> factors_;
};

using DivMorphism = Arrow<DivObject>;

inline bool divides(const DivObject& a, const DivObject& b) {
  return std::all_of(a.factors().begin(), a.factors().end(),
                     [&](const DivObject::Factor& f) { return b.exponent(f.first) >= f.second; });
}

inline DivObject lcm(const DivObject& a, const DivObject& b) {
  std::vector<DivObject::Factor> out;
  auto i = a.factors().begin();
  auto j = b.factors().begin();
  while (i != a.factors().end() || j != b.factors().end()) {
    if (j == b.factors().end() || (i != a.factors().end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.factors().end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, std::max(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return DivObject::from_factors(std::move(out));
}

/// Highest exponent in the factorization; 0 for 1.
inline std::size_t max_prime_exponent(const DivObject& v) {
  std::size_t best = 0;
  for (auto [p, e] : v.factors()) best = std::max(best, e);
  return best;
}

namespace detail {

inline std::vector<std::uint64_t> primes_up_to(std::size_t n) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> primes;
  static std::size_t sieved = 1;
  std::lock_guard<std::mutex> lock(mutex);
  if (n > sieved) {
    const std::size_t limit = std::max(n, 2 * sieved);
    std::vector<bool> composite(limit + 1, false);
    primes.clear();
    for (std::size_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    sieved = limit;
  }
  return {primes.begin(), std::upper_bound(primes.begin(), primes.end(), static_cast<std::uint64_t>(n))};
}

}  // namespace detail

/// Ω_n = product of p^n over primes p <= n.
inline DivObject ndiv_spine(std::size_t n) {
  std::vector<DivObject::Factor> factors;
  for (std::uint64_t p : detail::primes_up_to(n)) factors.emplace_back(p, n);
  return DivObject::from_factors(std::move(factors));
}

inline constexpr std::size_t kNdivSpineCap = std::size_t{1} << 20;

/// The positive integers under divisibility; lcm as proxy pushout.
inline SpinedInstance<DivObject> ndiv_instance() {
  SpinedInstance<DivObject> inst;
  inst.name = "n-div";
  inst.object_kind = "positive integer";
  inst.points = [](const DivObject&) { return std::size_t{0}; };
  inst.is_morphism = [](const DivMorphism& m) { return m.map.empty() && divides(m.domain, m.codomain); };
  inst.enumerate = [](const DivObject& a, const DivObject& b, const SearchOptions& opts) {
    std::vector<DivMorphism> out;
    if (opts.limit > 0 && divides(a, b)) out.push_back({a, b, {}});
    return out;
  };
  inst.spine = [](std::size_t n) { return ndiv_spine(n); };
  inst.proxy_pushout = [](const Span<DivObject>& span) {
    DivObject apex = lcm(span.left.codomain, span.right.codomain);
    return Cocone<DivObject>{apex, {span.left.codomain, apex, {}}, {span.right.codomain, apex, {}}};
  };
  inst.spine_cap = kNdivSpineCap;
  inst.spine_is_chain = true;
  return inst;
}

}  // namespace spined

#endif  // SPINED_NDIV_HPP
