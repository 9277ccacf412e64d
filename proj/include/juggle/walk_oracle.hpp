#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "juggle/big_int.hpp"
#include "juggle/errors.hpp"
#include "juggle/state.hpp"

namespace juggle {

/*
 * Two exact walk counters that do not depend on the transfer matrix:
 *
 *  - the selection model: choose one admissible 1 per column of a 0/1
 *    matrix with n blocks of m columns, hitting prescribed row sums, with
 *    weakly decreasing heights inside each block;
 *  - a direct bucket simulation in which the first n buckets hold m balls
 *    and bucket n + j holds b_j, which makes the search finite and forces
 *    the walk to end in the target state.
 */

/// Row sums and block structure of the selection matrix for walks of
/// length `period`. Block t (0-based) has `capacity` columns, each of which
/// may select any row t, t+1, ..., rows()-1; selecting row t + j is a throw
/// of height j.
struct SelectionMatrix {
  int period = 0;
  int capacity = 1;
  std::vector<int> row_sums;

  std::size_t rows() const noexcept { return row_sums.size(); }

  bool feasible() const noexcept {
    return std::none_of(row_sums.begin(), row_sums.end(), [](int s) { return s < 0; });
  }

  /// Matrix for walks of length n from `from` to `to`: rows
  /// m - a_1, ..., m - a_n, b_1 - a_{n+1}, ..., b_h - a_{n+h} with
  /// h = max(h(from) - n, h(to)).
  static SelectionMatrix for_walk(const State& from, const State& to, int length) {
    detail::require_compatible(from, to);
    if (length < 0) throw ParameterError("walk length must be nonnegative");
    const int m = from.capacity();
    const int tail = std::max(from.height() - length, to.height());
    SelectionMatrix result{length, m, {}};
    result.row_sums.reserve(static_cast<std::size_t>(length + tail));
    for (int i = 1; i <= length; ++i) result.row_sums.push_back(m - from.slot(static_cast<std::size_t>(i)));
    for (int j = 1; j <= tail; ++j)
      result.row_sums.push_back(to.slot(static_cast<std::size_t>(j)) -
                                from.slot(static_cast<std::size_t>(length + j)));
    return result;
  }
};

/// Number of admissible selections. Zero if any row sum is negative.
inline BigInt count_selections(const SelectionMatrix& matrix) {
  if (!matrix.feasible()) return 0;
  if (matrix.capacity < 1) throw ParameterError("hand capacity must be positive");
  const std::size_t rows = matrix.rows();
  const std::size_t blocks = static_cast<std::size_t>(matrix.period);
  if (blocks > rows) {
    // Every block needs its own no-throw row.
    return 0;
  }
  const int m = matrix.capacity;

  // memo[t] maps the residual row sums of rows t.. to the number of ways to
  // fill blocks t.. from there.
  std::vector<std::map<std::vector<int>, BigInt>> memo(blocks + 1);

  auto fill_from = [&](auto&& self, std::size_t block, const std::vector<int>& residual) -> BigInt {
    if (block == blocks) {
      return std::all_of(residual.begin(), residual.end(), [](int s) { return s == 0; }) ? 1 : 0;
    }
    auto [it, inserted] = memo[block].try_emplace(residual);
    if (!inserted) return it->second;

    BigInt total = 0;
    const int idle = residual[0];
    if (idle <= m) {
      // Remaining m - idle columns go to rows below, as a multiset.
      std::vector<int> rest(residual.begin() + 1, residual.end());
      auto place = [&](auto&& inner, std::size_t row, int remaining) -> void {
        if (remaining == 0) {
          total += self(self, block + 1, rest);
          return;
        }
        if (row >= rest.size()) return;
        const int most = std::min(remaining, rest[row]);
        for (int k = 0; k <= most; ++k) {
          rest[row] -= k;
          inner(inner, row + 1, remaining - k);
          rest[row] += k;
        }
      };
      place(place, 0, m - idle);
    }
    memo[block][residual] = total;
    return total;
  };
  return fill_from(fill_from, 0, matrix.row_sums);
}

/// One transition of a walk: the throws made and the state they lead to.
struct Step {
  ThrowSet throws;
  State state;

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

struct Walk {
  State start;
  std::vector<Step> steps;

  std::size_t length() const noexcept { return steps.size(); }
  const State& end() const noexcept { return steps.empty() ? start : steps.back().state; }

  friend bool operator==(const Walk&, const Walk&) = default;
};

inline constexpr std::size_t kDefaultWalkLimit = 10000;

namespace detail {

/// Depth-first bucket simulation with the modified capacities m (first n
/// buckets) and b_1, b_2, ... (afterwards).
class BucketSearch {
 public:
  BucketSearch(const State& from, const State& to, int length, bool first_return)
      : from_(from), to_(to), length_(length), first_return_(first_return) {
    require_compatible(from, to);
    if (length < 0) throw ParameterError("walk length must be nonnegative");
    for (int i = 1; i <= from.height(); ++i)
      if (from.slot(static_cast<std::size_t>(i)) > capacity(i)) feasible_ = false;
  }

  BigInt count() { return feasible_ ? count_from(from_, 0) : BigInt(0); }

  std::vector<Walk> enumerate(std::optional<std::size_t> limit) {
    std::vector<Walk> out;
    if (!feasible_ || limit == std::size_t{0}) return out;
    Walk current{from_, {}};
    collect(current, 0, limit, out);
    return out;
  }

 private:
  // Capacity of absolute bucket `index` (1-based, relative to the start).
  int capacity(int index) const {
    if (index <= length_) return from_.capacity();
    return to_.slot(static_cast<std::size_t>(index - length_));
  }

  // Moves from `current`, the state after `done` steps, in state order.
  std::vector<std::pair<State, ThrowSet>> moves(const State& current, int done) const {
    const int m = current.capacity();
    const int reach = length_ + to_.height() - done - 1;  // highest useful throw
    std::vector<int> slots;
    for (int j = 1; j <= std::max(reach, current.height() - 1); ++j)
      slots.push_back(current.slot(static_cast<std::size_t>(j + 1)));

    std::vector<std::pair<State, ThrowSet>> result;
    std::vector<int> heights;
    auto drop = [&](auto&& self, int height, int remaining) -> void {
      if (remaining == 0) {
        std::vector<int> padded = heights;
        padded.resize(static_cast<std::size_t>(m), 0);
        State next(slots, m);
        if (first_return_ && done + 1 < length_ && next == from_) return;
        result.emplace_back(std::move(next), ThrowSet(std::move(padded)));
        return;
      }
      if (height > reach) return;
      const std::size_t idx = static_cast<std::size_t>(height - 1);
      const int room = std::min(remaining, capacity(done + 1 + height) - slots[idx]);
      for (int k = 0; k <= room; ++k) {
        slots[idx] += k;
        heights.insert(heights.end(), static_cast<std::size_t>(k), height);
        self(self, height + 1, remaining - k);
        heights.resize(heights.size() - static_cast<std::size_t>(k));
        slots[idx] -= k;
      }
    };
    drop(drop, 1, current.slot(1));
    std::sort(result.begin(), result.end());
    return result;
  }

  BigInt count_from(const State& current, int done) {
    if (done == length_) return current == to_ ? 1 : 0;
    auto key = std::make_pair(done, current);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    for (const auto& [next, throws] : moves(current, done)) total += count_from(next, done + 1);
    memo_.emplace(std::move(key), total);
    return total;
  }

  void collect(Walk& current, int done, std::optional<std::size_t> limit, std::vector<Walk>& out) {
    if (limit && out.size() >= *limit) return;
    if (done == length_) {
      if (current.end() == to_) out.push_back(current);
      return;
    }
    const State here = current.end();
    for (auto& [next, throws] : moves(here, done)) {
      if (count_from(next, done + 1) == 0) continue;
      current.steps.push_back(Step{throws, next});
      collect(current, done + 1, limit, out);
      current.steps.pop_back();
      if (limit && out.size() >= *limit) return;
    }
  }

  State from_;
  State to_;
  int length_;
  bool first_return_;
  bool feasible_ = true;
  std::map<std::pair<int, State>, BigInt> memo_;
};

}  // namespace detail

/// Walks of length n from `from` to `to` in the unbounded state diagram.
inline BigInt count_walks_brute(const State& from, const State& to, int length) {
  return detail::BucketSearch(from, to, length, false).count();
}

/// All walks from `from` to `to` of the given length in lexicographic order
/// of their state sequences, truncated to `limit` walks (nullopt = all).
inline std::vector<Walk> enumerate_walks(const State& from, const State& to, int length,
                                         std::optional<std::size_t> limit = kDefaultWalkLimit) {
  return detail::BucketSearch(from, to, length, false).enumerate(limit);
}

/// Closed walks of length n >= 1 at `origin` that do not pass through
/// `origin` at steps 1..n-1.
inline BigInt count_first_return(const State& origin, int length) {
  if (length < 1) throw ParameterError("first-return length must be at least 1");
  return detail::BucketSearch(origin, origin, length, true).count();
}

}  // namespace juggle
