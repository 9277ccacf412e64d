#pragma once

// Test-only oracles. Nothing here calls the counting code under test.

#include <algorithm>
#include <vector>

#include "juggle/big_int.hpp"
#include "juggle/state.hpp"

namespace juggle::oracle {

/// Every state with `balls` balls, capacity m and height <= max_height.
inline std::vector<State> all_states(int balls, int capacity, int max_height) {
  std::vector<State> out;
  std::vector<int> slots(static_cast<std::size_t>(max_height), 0);
  auto fill = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == slots.size()) {
      if (remaining == 0) out.emplace_back(slots, capacity);
      return;
    }
    for (int a = 0; a <= std::min(remaining, capacity); ++a) {
      slots[i] = a;
      self(self, i + 1, remaining - a);
    }
  };
  fill(fill, 0, balls);
  std::sort(out.begin(), out.end());
  return out;
}

/// Plain recursive walk count over successors(), no memoization. The
/// height cap n + max(h) cannot cut off any walk of length n.
inline BigInt naive_walk_count(const State& from, const State& to, int length) {
  const int cap = std::max(1, length + std::max(from.height(), to.height()));
  auto go = [&](auto&& self, const State& here, int left) -> BigInt {
    if (left == 0) return here == to ? 1 : 0;
    BigInt total = 0;
    for (const auto& [next, label] : successors(here, cap)) total += self(self, next, left - 1);
    return total;
  };
  return go(go, from, length);
}

/// Textbook definition of first-return walks, by plain recursion.
inline BigInt naive_first_return(const State& origin, int length) {
  const int cap = std::max(1, length + origin.height());
  auto go = [&](auto&& self, const State& here, int left) -> BigInt {
    if (left == 0) return here == origin ? 1 : 0;
    BigInt total = 0;
    for (const auto& [next, label] : successors(here, cap)) {
      if (left > 1 && next == origin) continue;
      total += self(self, next, left - 1);
    }
    return total;
  };
  return go(go, origin, length);
}

/// Determinant by cofactor expansion along the first row.
inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (a[0][col] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    const BigInt term = a[0][col] * cofactor_det(minor);
    det += (col % 2 == 0) ? term : BigInt(-term);
  }
  return det;
}

}  // namespace juggle::oracle
