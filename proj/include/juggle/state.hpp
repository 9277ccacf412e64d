#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "juggle/errors.hpp"

namespace juggle {

/*
 * A state is a landing schedule <a_1, a_2, ...>: a_i balls are due to land
 * i beats from now. At most `capacity` (the hand capacity m) balls may land
 * on any beat. Trailing zeros are dropped at construction so two states are
 * equal iff their slot vectors are.
 */
class State {
 public:
  State() = default;

  State(std::vector<int> slots, int capacity) : slots_(std::move(slots)), capacity_(capacity) {
    if (capacity_ < 1) throw ParameterError("hand capacity must be positive");
    for (int a : slots_) {
      if (a < 0 || a > capacity_)
        throw ParameterError("slot count " + std::to_string(a) + " outside [0, " +
                             std::to_string(capacity_) + "]");
    }
    while (!slots_.empty() && slots_.back() == 0) slots_.pop_back();
  }

  /// The empty state (no balls) for hand capacity m.
  static State empty(int capacity) { return State({}, capacity); }

  /// Parses the comma-separated text form, e.g. "1,2". "" and "0" denote
  /// the empty state.
  static State parse(std::string_view text, int capacity) {
    std::vector<int> slots;
    if (!text.empty()) {
      std::size_t pos = 0;
      while (true) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || value < 0) throw ParseError("expected a slot count", pos);
        pos = static_cast<std::size_t>(ptr - text.data());
        slots.push_back(value);
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
      }
    }
    return State(std::move(slots), capacity);
  }

  std::span<const int> slots() const noexcept { return slots_; }
  int capacity() const noexcept { return capacity_; }

  /// a_i for 1-based i; zero past the stored slots.
  int slot(std::size_t i) const noexcept {
    return (i >= 1 && i <= slots_.size()) ? slots_[i - 1] : 0;
  }

  int balls() const noexcept { return std::accumulate(slots_.begin(), slots_.end(), 0); }
  int height() const noexcept { return static_cast<int>(slots_.size()); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(slots_[i]);
    }
    return out;
  }

  /// Angle-bracket display form, e.g. "<1,2>".
  std::string display() const { return "<" + to_string() + ">"; }

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State& lhs, const State& rhs) {
    if (auto c = lhs.slots_ <=> rhs.slots_; c != 0) return c;
    return lhs.capacity_ <=> rhs.capacity_;
  }

 private:
  std::vector<int> slots_;
  int capacity_ = 1;
};

/// The multiset T of throw heights made on one beat; always exactly m
/// entries (0 = no-throw), stored weakly decreasing.
class ThrowSet {
 public:
  ThrowSet() = default;

  explicit ThrowSet(std::vector<int> heights) : heights_(std::move(heights)) {
    for (int h : heights_)
      if (h < 0) throw ParameterError("throw heights must be nonnegative");
    std::sort(heights_.begin(), heights_.end(), std::greater<>());
  }

  /// m no-throws.
  static ThrowSet idle(int capacity) { return ThrowSet(std::vector<int>(capacity, 0)); }

  std::span<const int> heights() const noexcept { return heights_; }
  int capacity() const noexcept { return static_cast<int>(heights_.size()); }

  int throw_count() const noexcept {
    return static_cast<int>(std::count_if(heights_.begin(), heights_.end(), [](int h) { return h > 0; }));
  }

  int height_sum() const noexcept { return std::accumulate(heights_.begin(), heights_.end(), 0); }

  /// Bracket form used by the siteswap grammar, e.g. "[3,1]".
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < heights_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(heights_[i]);
    }
    return out + "]";
  }

  friend bool operator==(const ThrowSet&, const ThrowSet&) = default;
  friend auto operator<=>(const ThrowSet&, const ThrowSet&) = default;

 private:
  std::vector<int> heights_;
};

namespace detail {

inline void require_compatible(const State& from, const State& to) {
  if (from.capacity() != to.capacity())
    throw ParameterError("states have different hand capacities");
  if (from.balls() != to.balls()) throw ParameterError("states have different ball counts");
}

}  // namespace detail

/// True iff from -> to is an edge of the state diagram, i.e.
/// from.a_i <= to.a_{i-1} for every i >= 2.
inline bool is_edge(const State& from, const State& to) {
  detail::require_compatible(from, to);
  const std::size_t span = std::max<std::size_t>(from.slots().size(), to.slots().size() + 1);
  for (std::size_t i = 2; i <= span; ++i)
    if (from.slot(i) > to.slot(i - 1)) return false;
  return true;
}

/// The unique throw multiset labelling the edge from -> to.
inline ThrowSet transition_label(const State& from, const State& to) {
  if (!is_edge(from, to))
    throw ParameterError(from.display() + " -> " + to.display() + " is not an edge");
  std::vector<int> heights;
  heights.reserve(static_cast<std::size_t>(from.capacity()));
  for (std::size_t j = 1; j <= to.slots().size(); ++j)
    heights.insert(heights.end(), static_cast<std::size_t>(to.slot(j) - from.slot(j + 1)), static_cast<int>(j));
  heights.resize(static_cast<std::size_t>(from.capacity()), 0);
  return ThrowSet(std::move(heights));
}

/// Shifts the buckets down one beat and lands the bottom bucket's balls at
/// the given heights. Throws ParameterError when the throw set does not
/// rethrow exactly the bottom bucket or overfills a bucket.
inline State apply_throws(const State& from, const ThrowSet& throws) {
  const int m = from.capacity();
  if (throws.capacity() != m)
    throw ParameterError("throw set has " + std::to_string(throws.capacity()) +
                         " entries, expected " + std::to_string(m));
  if (throws.throw_count() != from.slot(1))
    throw ParameterError("bottom bucket holds " + std::to_string(from.slot(1)) + " balls but " +
                         std::to_string(throws.throw_count()) + " are thrown");
  std::vector<int> next(from.slots().begin() + std::min<std::size_t>(1, from.slots().size()),
                        from.slots().end());
  for (int h : throws.heights()) {
    if (h == 0) continue;
    if (next.size() < static_cast<std::size_t>(h)) next.resize(static_cast<std::size_t>(h), 0);
    if (++next[static_cast<std::size_t>(h) - 1] > m)
      throw ParameterError("bucket " + std::to_string(h) + " over capacity");
  }
  return State(std::move(next), m);
}

/// Every edge from -> beta with h(beta) <= height_cap, sorted by beta.
/// Requires height_cap >= h(from) - 1.
inline std::vector<std::pair<State, ThrowSet>> successors(const State& from, int height_cap) {
  if (height_cap < from.height() - 1)
    throw ParameterError("height cap " + std::to_string(height_cap) + " below h(from) - 1");
  const int m = from.capacity();
  const std::size_t cap = static_cast<std::size_t>(std::max(height_cap, 0));
  std::vector<int> shifted(cap, 0);
  for (std::size_t j = 1; j <= cap; ++j) shifted[j - 1] = from.slot(j + 1);

  std::vector<std::pair<State, ThrowSet>> result;
  std::vector<int> landed(cap, 0);
  // Choose how many balls land at each height; one count vector per multiset.
  auto place = [&](auto&& self, std::size_t height, int remaining) -> void {
    if (remaining == 0) {
      std::vector<int> slots = shifted;
      std::vector<int> heights;
      for (std::size_t j = cap; j >= 1; --j) {
        slots[j - 1] += landed[j - 1];
        heights.insert(heights.end(), static_cast<std::size_t>(landed[j - 1]), static_cast<int>(j));
      }
      heights.resize(static_cast<std::size_t>(m), 0);
      result.emplace_back(State(std::move(slots), m), ThrowSet(std::move(heights)));
      return;
    }
    if (height > cap) return;
    const int room = std::min(remaining, m - shifted[height - 1]);
    for (int k = room; k >= 0; --k) {
      landed[height - 1] = k;
      self(self, height + 1, remaining - k);
    }
    landed[height - 1] = 0;
  };
  place(place, 1, from.slot(1));
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace juggle
