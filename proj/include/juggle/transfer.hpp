#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "juggle/big_int.hpp"
#include "juggle/errors.hpp"
#include "juggle/matrix.hpp"
#include "juggle/state.hpp"
#include "juggle/walk_oracle.hpp"

namespace juggle {

/// A partition with parts <= m stored as multiplicities: count(i) is the
/// number of parts equal to i.
class PartCounts {
 public:
  PartCounts() = default;

  PartCounts(std::vector<int> counts, int capacity) : counts_(std::move(counts)), capacity_(capacity) {
    if (capacity_ < 1) throw ParameterError("maximum part must be positive");
    if (counts_.size() != static_cast<std::size_t>(capacity_))
      throw ParameterError("expected " + std::to_string(capacity_) + " part multiplicities");
    for (int c : counts_)
      if (c < 0) throw ParameterError("part multiplicities must be nonnegative");
  }

  /// Builds from a list of parts in any order; zero parts are ignored.
  static PartCounts from_parts(std::span<const int> parts, int capacity) {
    if (capacity < 1) throw ParameterError("maximum part must be positive");
    std::vector<int> counts(static_cast<std::size_t>(capacity), 0);
    for (int p : parts) {
      if (p < 0 || p > capacity)
        throw ParameterError("part " + std::to_string(p) + " outside [0, " + std::to_string(capacity) + "]");
      if (p > 0) ++counts[static_cast<std::size_t>(p) - 1];
    }
    return PartCounts(std::move(counts), capacity);
  }

  /// Parses "2,1" (parts need not be sorted); "" is the empty partition.
  static PartCounts parse(std::string_view text, int capacity) {
    const State as_slots = State::parse(text, std::max(capacity, 1));
    return from_parts(as_slots.slots(), capacity);
  }

  int capacity() const noexcept { return capacity_; }

  /// Number of parts equal to `size` (1-based); zero outside [1, m].
  int count(int size) const noexcept {
    return (size >= 1 && size <= capacity_) ? counts_[static_cast<std::size_t>(size) - 1] : 0;
  }

  /// Number of parts >= size.
  int count_at_least(int size) const noexcept {
    int total = 0;
    for (int i = std::max(size, 1); i <= capacity_; ++i) total += count(i);
    return total;
  }

  int total() const noexcept {
    int sum = 0;
    for (int i = 1; i <= capacity_; ++i) sum += i * count(i);
    return sum;
  }

  /// Parts in weakly decreasing order.
  std::vector<int> parts() const {
    std::vector<int> out;
    for (int i = capacity_; i >= 1; --i) out.insert(out.end(), static_cast<std::size_t>(count(i)), i);
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (int p : parts()) {
      if (!out.empty()) out += ',';
      out += std::to_string(p);
    }
    return out;
  }

  friend bool operator==(const PartCounts&, const PartCounts&) = default;

 private:
  std::vector<int> counts_;
  int capacity_ = 1;
};

/// The partition formed by the nonzero slots of a state.
inline PartCounts partition_of(const State& state) {
  return PartCounts::from_parts(state.slots(), state.capacity());
}

/// Partitions of b into parts <= m in reverse-lexicographic order of their
/// decreasing part lists: (3), (2,1), (1,1,1).
inline std::vector<PartCounts> partitions_of(int balls, int max_part) {
  if (balls < 0) throw ParameterError("cannot partition a negative number");
  if (max_part < 1) throw ParameterError("maximum part must be positive");
  std::vector<PartCounts> out;
  std::vector<int> parts;
  auto split = [&](auto&& self, int remaining, int largest) -> void {
    if (remaining == 0) {
      out.push_back(PartCounts::from_parts(parts, max_part));
      return;
    }
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  split(split, balls, max_part);
  return out;
}

/// Number of one-block fills turning terminal partition gamma into delta:
///   prod_i C(gamma_{>=i} + 1 - delta_{>i}, delta_i).
inline BigInt coefficient(const PartCounts& gamma, const PartCounts& delta) {
  if (gamma.capacity() != delta.capacity()) throw ParameterError("partitions use different maximum parts");
  if (gamma.total() != delta.total()) throw ParameterError("partitions of different totals");
  BigInt product = 1;
  for (int i = 1; i <= gamma.capacity() && product != 0; ++i) {
    const int slots = gamma.count_at_least(i) + 1 - delta.count_at_least(i + 1);
    product *= binomial(slots, delta.count(i));
  }
  return product;
}

/// The matrix A with A[gamma][delta] = coefficient(gamma, delta) over the
/// canonical partition order.
struct TransferMatrix {
  int balls = 0;
  int capacity = 1;
  std::vector<PartCounts> index;
  Matrix<BigInt> entries;

  std::size_t order() const noexcept { return index.size(); }

  std::size_t index_of(const PartCounts& gamma) const {
    auto it = std::find(index.begin(), index.end(), gamma);
    if (it == index.end())
      throw ParameterError("(" + gamma.to_string() + ") is not a partition of " + std::to_string(balls) +
                           " with parts <= " + std::to_string(capacity));
    return static_cast<std::size_t>(it - index.begin());
  }
};

inline TransferMatrix build_transfer_matrix(int balls, int capacity) {
  TransferMatrix result{balls, capacity, partitions_of(balls, capacity), {}};
  const std::size_t r = result.order();
  result.entries = Matrix<BigInt>(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) result.entries(i, j) = coefficient(result.index[i], result.index[j]);
  return result;
}

/// One way to fill the last block: the throws (row 0 = no-throw, row i =
/// the i-th part of gamma) and the terminal partition left behind.
struct BlockFill {
  ThrowSet throws;
  PartCounts result;
};

/// Every fill of a single block with row sums (m, gamma_parts...), by
/// direct enumeration of the selections.
inline std::vector<BlockFill> enumerate_block_fills(const PartCounts& gamma) {
  const int m = gamma.capacity();
  std::vector<int> rows{m};
  for (int p : gamma.parts()) rows.push_back(p);

  std::vector<BlockFill> out;
  std::vector<int> taken(rows.size(), 0);
  auto choose = [&](auto&& self, std::size_t row, int remaining) -> void {
    if (remaining == 0) {
      std::vector<int> heights;
      std::vector<int> left;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        heights.insert(heights.end(), static_cast<std::size_t>(taken[i]), static_cast<int>(i));
        left.push_back(rows[i] - taken[i]);
      }
      out.push_back(BlockFill{ThrowSet(std::move(heights)), PartCounts::from_parts(left, m)});
      return;
    }
    if (row >= rows.size()) return;
    for (int k = std::min(remaining, rows[row]); k >= 0; --k) {
      taken[row] = k;
      self(self, row + 1, remaining - k);
    }
    taken[row] = 0;
  };
  choose(choose, 0, m);
  return out;
}

/// Values x_gamma(k) for every partition gamma, in the transfer matrix's
/// index order.
struct PartitionVector {
  std::vector<PartCounts> index;
  std::vector<BigInt> values;

  const BigInt& at(const PartCounts& gamma) const {
    auto it = std::find(index.begin(), index.end(), gamma);
    if (it == index.end()) throw ParameterError("(" + gamma.to_string() + ") is not indexed");
    return values[static_cast<std::size_t>(it - index.begin())];
  }
};

/// x_gamma(0): fills of the matrix with rows m - a_1, ..., m - a_{h(alpha)}
/// followed by the parts of gamma, counted by the selection model.
inline std::vector<BigInt> x_base(const State& alpha, const TransferMatrix& transfer) {
  const int m = alpha.capacity();
  if (m != transfer.capacity || alpha.balls() != transfer.balls)
    throw ParameterError("state " + alpha.display() + " does not match the transfer matrix");
  if (alpha.height() == 1 && alpha.slot(1) == alpha.balls())
    return std::vector<BigInt>(transfer.order(), BigInt(1));

  std::vector<BigInt> base;
  base.reserve(transfer.order());
  for (const auto& gamma : transfer.index) {
    SelectionMatrix matrix{alpha.height(), m, {}};
    for (int i = 1; i <= alpha.height(); ++i) matrix.row_sums.push_back(m - alpha.slot(static_cast<std::size_t>(i)));
    for (int p : gamma.parts()) matrix.row_sums.push_back(p);
    base.push_back(count_selections(matrix));
  }
  return base;
}

inline PartitionVector x_values(const State& alpha, unsigned k, const TransferMatrix& transfer) {
  std::vector<BigInt> values = x_base(alpha, transfer);
  for (unsigned step = 0; step < k; ++step) values = transfer.entries * values;
  return PartitionVector{transfer.index, std::move(values)};
}

inline PartitionVector x_values(const State& alpha, unsigned k) {
  return x_values(alpha, k, build_transfer_matrix(alpha.balls(), alpha.capacity()));
}

/// Walk count via the transfer matrix: x_{part(to)}(n - h(from)).
/// Requires n >= h(from).
inline BigInt count_walks_transfer(const State& from, const State& to, int length) {
  detail::require_compatible(from, to);
  if (length < from.height())
    throw ParameterError("transfer counting needs length >= h(from) = " + std::to_string(from.height()));
  return x_values(from, static_cast<unsigned>(length - from.height())).at(partition_of(to));
}

}  // namespace juggle
