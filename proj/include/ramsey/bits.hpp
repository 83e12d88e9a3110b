#pragma once

#include <bit>
#include <cstdint>

namespace ramsey {

// One adjacency row per vertex. The default build keeps rows in a single
// machine word; RAMSEY_WIDE_ROWS switches to 128-bit rows.
#ifdef RAMSEY_WIDE_ROWS
using Row = unsigned __int128;
inline constexpr int kMaxOrder = 128;
#else
using Row = std::uint64_t;
inline constexpr int kMaxOrder = 64;
#endif

namespace bits {

constexpr Row one(int i) { return Row{1} << i; }

constexpr Row prefix(int n) {
  return n >= kMaxOrder ? ~Row{0} : (Row{1} << n) - 1;
}

constexpr bool test(Row r, int i) { return ((r >> i) & 1) != 0; }

constexpr int count(Row r) {
#ifdef RAMSEY_WIDE_ROWS
  return std::popcount(static_cast<std::uint64_t>(r)) +
         std::popcount(static_cast<std::uint64_t>(r >> 64));
#else
  return std::popcount(r);
#endif
}

// Index of the lowest set bit; r must be nonzero.
constexpr int lowest(Row r) {
#ifdef RAMSEY_WIDE_ROWS
  auto lo = static_cast<std::uint64_t>(r);
  return lo != 0 ? std::countr_zero(lo)
                 : 64 + std::countr_zero(static_cast<std::uint64_t>(r >> 64));
#else
  return std::countr_zero(r);
#endif
}

// Calls f(i) for every set bit i in increasing order.
template <class F>
constexpr void for_each(Row r, F&& f) {
  while (r != 0) {
    int i = lowest(r);
    r &= r - 1;
    f(i);
  }
}

}  // namespace bits
}  // namespace ramsey
