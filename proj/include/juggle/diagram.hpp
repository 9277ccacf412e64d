#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "juggle/big_int.hpp"
#include "juggle/errors.hpp"
#include "juggle/matrix.hpp"
#include "juggle/state.hpp"

namespace juggle {

/// The finite state diagram obtained by capping every landing time at H:
/// all states of b balls, capacity m and height <= H, with the 0/1
/// adjacency matrix of the edge relation.
class HeightCappedDiagram {
 public:
  HeightCappedDiagram(int balls, int capacity, int height_cap)
      : balls_(balls), capacity_(capacity), height_cap_(height_cap) {
    if (balls < 0) throw ParameterError("ball count must be nonnegative");
    if (capacity < 1) throw ParameterError("hand capacity must be positive");
    if (height_cap < 1) throw ParameterError("height cap must be positive");

    std::vector<int> slots(static_cast<std::size_t>(height_cap), 0);
    auto fill = [&](auto&& self, std::size_t i, int remaining) -> void {
      if (i == slots.size()) {
        if (remaining == 0) states_.emplace_back(slots, capacity_);
        return;
      }
      for (int a = 0; a <= std::min(remaining, capacity_); ++a) {
        slots[i] = a;
        self(self, i + 1, remaining - a);
      }
      slots[i] = 0;
    };
    fill(fill, 0, balls);
    std::sort(states_.begin(), states_.end());

    const std::size_t n = states_.size();
    adjacency_ = Matrix<int>(n, n, 0);
    out_edges_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (is_edge(states_[i], states_[j])) {
          adjacency_(i, j) = 1;
          out_edges_[i].push_back(j);
        }
      }
    }
  }

  int balls() const noexcept { return balls_; }
  int capacity() const noexcept { return capacity_; }
  int height_cap() const noexcept { return height_cap_; }
  std::size_t size() const noexcept { return states_.size(); }

  const std::vector<State>& states() const noexcept { return states_; }
  const Matrix<int>& adjacency() const noexcept { return adjacency_; }
  const std::vector<std::size_t>& out_edges(std::size_t i) const { return out_edges_.at(i); }

  std::optional<std::size_t> index_of(const State& state) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), state);
    if (it == states_.end() || *it != state) return std::nullopt;
    return static_cast<std::size_t>(it - states_.begin());
  }

  /// Index of a state that must belong to the diagram.
  std::size_t require(const State& state) const {
    if (state.capacity() != capacity_ || state.balls() != balls_)
      throw ParameterError("state " + state.display() + " does not match the diagram's b and m");
    if (state.height() > height_cap_)
      throw ParameterError("state " + state.display() + " exceeds height cap " +
                           std::to_string(height_cap_));
    return *index_of(state);
  }

 private:
  int balls_;
  int capacity_;
  int height_cap_;
  std::vector<State> states_;
  Matrix<int> adjacency_;
  std::vector<std::vector<std::size_t>> out_edges_;
};

/// adjacency^n over exact integers, by repeated squaring.
inline Matrix<BigInt> adjacency_power(const HeightCappedDiagram& diagram, unsigned long long n) {
  const std::size_t size = diagram.size();
  Matrix<BigInt> base(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) base(i, j) = diagram.adjacency()(i, j);
  return power(std::move(base), n);
}

/// Entry (from, to) of adjacency^n: the number of length-n walks that never
/// leave the capped diagram.
///
/// Propagates the unit row vector of `from` along the sparse edge lists,
/// which equals the adjacency_power entry and costs n * |E| instead of
/// log(n) * |V|^3 for a single entry.
inline BigInt count_walks_capped(const HeightCappedDiagram& diagram, const State& from,
                                 const State& to, unsigned long long n) {
  const std::size_t source = diagram.require(from);
  const std::size_t target = diagram.require(to);
  std::vector<BigInt> row(diagram.size(), BigInt(0));
  row[source] = 1;
  for (unsigned long long step = 0; step < n; ++step) {
    std::vector<BigInt> next(diagram.size(), BigInt(0));
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      for (std::size_t j : diagram.out_edges(i)) next[j] += row[i];
    }
    row = std::move(next);
  }
  return row[target];
}

/// n + max(h(from), h(to)). At or above this cap no length-n walk between
/// the two states is cut off, so count_walks_capped equals the unbounded
/// count.
inline int saturated_height(int from_height, int to_height, unsigned long long n) {
  return std::max(1, static_cast<int>(n) + std::max(from_height, to_height));
}

}  // namespace juggle
