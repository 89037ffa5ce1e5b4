#ifndef SPINED_BITS_HPP
#define SPINED_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace spined {

/// Vertex set over at most 64 vertices.
using Bits = std::uint64_t;

constexpr Bits bit(std::size_t v) { return Bits{1} << v; }

constexpr Bits low_bits(std::size_t n) { return n >= 64 ? ~Bits{0} : bit(n) - 1; }

constexpr std::size_t popcount(Bits b) { return static_cast<std::size_t>(std::popcount(b)); }

constexpr std::size_t lowest(Bits b) { return static_cast<std::size_t>(std::countr_zero(b)); }

constexpr bool contains(Bits set, std::size_t v) { return (set >> v) & 1U; }

constexpr bool is_subset(Bits a, Bits b) { return (a & ~b) == 0; }

template <class F>
void for_each_bit(Bits b, F&& f) {
  while (b != 0) {
    f(lowest(b));
    b &= b - 1;
  }
}

inline std::vector<std::size_t> to_vector(Bits b) {
  std::vector<std::size_t> out;
  out.reserve(popcount(b));
  for_each_bit(b, [&](std::size_t v) { out.push_back(v); });
  return out;
}

template <class Range>
Bits to_bits(const Range& vertices) {
  Bits b = 0;
  for (auto v : vertices) b |= bit(static_cast<std::size_t>(v));
  return b;
}

}  // namespace spined

#endif  // SPINED_BITS_HPP
