#pragma once

#include <bitset>
#include <cstddef>

namespace gcon {

/// Capacity of the bitset kernels, for both vertex and edge indices.
inline constexpr std::size_t kMaxSearchBits = 128;

using Mask = std::bitset<kMaxSearchBits>;

inline std::size_t first_bit(const Mask& m) { return m._Find_first(); }

inline bool has_bit(std::size_t i) { return i < kMaxSearchBits; }

template <class F>
void for_each_bit(const Mask& m, F&& f) {
  for (std::size_t i = m._Find_first(); i < kMaxSearchBits; i = m._Find_next(i)) f(i);
}

}  // namespace gcon
