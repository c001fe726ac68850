#pragma once

// Word-level helpers for ground-set bitmasks. Bit p (0-based) stands for
// element p + 1.

#include <bit>
#include <cstdint>

namespace ekr {

#ifdef EKR_WIDE_SETS
using SetWord = unsigned __int128;
inline constexpr int kMaxElements = 128;
#else
using SetWord = std::uint64_t;
inline constexpr int kMaxElements = 64;
#endif

constexpr int popcount(SetWord w) noexcept {
#ifdef EKR_WIDE_SETS
  return std::popcount(static_cast<std::uint64_t>(w)) +
         std::popcount(static_cast<std::uint64_t>(w >> 64));
#else
  return std::popcount(w);
#endif
}

/// Index of the lowest set bit; undefined for w == 0.
constexpr int lowest_bit(SetWord w) noexcept {
#ifdef EKR_WIDE_SETS
  auto lo = static_cast<std::uint64_t>(w);
  if (lo != 0) return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<std::uint64_t>(w >> 64));
#else
  return std::countr_zero(w);
#endif
}

/// Index of the highest set bit; undefined for w == 0.
constexpr int highest_bit(SetWord w) noexcept {
#ifdef EKR_WIDE_SETS
  auto hi = static_cast<std::uint64_t>(w >> 64);
  if (hi != 0) return 127 - std::countl_zero(hi);
  return 63 - std::countl_zero(static_cast<std::uint64_t>(w));
#else
  return 63 - std::countl_zero(w);
#endif
}

constexpr SetWord bit(int pos) noexcept { return SetWord{1} << pos; }

/// Bits 0..count-1 set.
constexpr SetWord low_mask(int count) noexcept {
  return count >= kMaxElements ? ~SetWord{0} : (SetWord{1} << count) - 1;
}

}  // namespace ekr
