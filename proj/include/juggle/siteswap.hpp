#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "juggle/errors.hpp"
#include "juggle/state.hpp"
#include "juggle/walk_oracle.hpp"

namespace juggle {

/// A multiplex siteswap: one throw multiset of size m per beat.
class SiteswapPattern {
 public:
  SiteswapPattern(std::vector<ThrowSet> throws, int capacity) : throws_(std::move(throws)), capacity_(capacity) {
    if (capacity_ < 1) throw ParameterError("hand capacity must be positive");
    if (throws_.empty()) throw ParameterError("a pattern needs at least one beat");
    for (std::size_t i = 0; i < throws_.size(); ++i)
      if (throws_[i].capacity() != capacity_)
        throw ParameterError("beat " + std::to_string(i + 1) + " has " + std::to_string(throws_[i].capacity()) +
                             " throws, expected " + std::to_string(capacity_));
  }

  int period() const noexcept { return static_cast<int>(throws_.size()); }
  int capacity() const noexcept { return capacity_; }
  const std::vector<ThrowSet>& throws() const noexcept { return throws_; }

  long long height_sum() const noexcept {
    long long sum = 0;
    for (const auto& t : throws_) sum += t.height_sum();
    return sum;
  }

  /// Average throw height per beat, when it is an integer.
  std::optional<int> ball_count() const noexcept {
    if (height_sum() % period() != 0) return std::nullopt;
    return static_cast<int>(height_sum() / period());
  }

  friend bool operator==(const SiteswapPattern&, const SiteswapPattern&) = default;

 private:
  std::vector<ThrowSet> throws_;
  int capacity_;
};

/// Parses the bracket grammar
///   pattern := block+      block := '[' int (',' int)* ']'
/// Blank space between tokens is ignored. Without an explicit capacity, m
/// is the widest block; narrower blocks are padded with no-throws.
inline SiteswapPattern parse_pattern(std::string_view text, std::optional<int> capacity = std::nullopt) {
  std::size_t pos = 0;
  auto skip_blank = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  std::vector<std::vector<int>> blocks;
  skip_blank();
  if (pos == text.size()) throw ParseError("empty pattern", pos);
  while (pos < text.size()) {
    if (text[pos] != '[') throw ParseError("expected '['", pos);
    ++pos;
    std::vector<int> block;
    while (true) {
      skip_blank();
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc() || value < 0) throw ParseError("expected a throw height", pos);
      pos = static_cast<std::size_t>(ptr - text.data());
      block.push_back(value);
      skip_blank();
      if (pos == text.size()) throw ParseError("expected ',' or ']'", pos);
      if (text[pos] == ']') break;
      if (text[pos] != ',') throw ParseError("expected ',' or ']'", pos);
      ++pos;
    }
    ++pos;
    blocks.push_back(std::move(block));
    skip_blank();
  }

  std::size_t widest = 0;
  for (const auto& b : blocks) widest = std::max(widest, b.size());
  const int m = capacity.value_or(static_cast<int>(widest));
  if (m < 1) throw ParameterError("hand capacity must be positive");
  std::vector<ThrowSet> throws;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() > static_cast<std::size_t>(m))
      throw ParameterError("beat " + std::to_string(i + 1) + " has " + std::to_string(blocks[i].size()) +
                           " throws but the hand capacity is " + std::to_string(m));
    blocks[i].resize(static_cast<std::size_t>(m), 0);
    throws.emplace_back(std::move(blocks[i]));
  }
  return SiteswapPattern(std::move(throws), m);
}

/// Canonical text, e.g. "[2,0][3,1][3,3][0,0]".
inline std::string format_pattern(const SiteswapPattern& pattern) {
  std::string out;
  for (const auto& t : pattern.throws()) out += t.to_string();
  return out;
}

struct ValidityReport {
  int period = 0;
  int capacity = 0;
  /// residue_counts[r - 1] = how many i + x (mod n) fall on residue r in 1..n.
  std::vector<int> residue_counts;
  bool residues_ok = false;
  long long height_sum = 0;
  std::optional<int> balls;
  std::vector<std::string> problems;

  bool valid() const noexcept { return residues_ok && balls.has_value(); }
};

/// Checks that every residue 1..n receives exactly m landings and that the
/// average throw height is an integer.
inline ValidityReport validate(const SiteswapPattern& pattern) {
  ValidityReport report;
  const int n = pattern.period();
  const int m = pattern.capacity();
  report.period = n;
  report.capacity = m;
  report.residue_counts.assign(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int x : pattern.throws()[static_cast<std::size_t>(i - 1)].heights()) {
      int residue = (i + x) % n;
      if (residue == 0) residue = n;
      ++report.residue_counts[static_cast<std::size_t>(residue - 1)];
    }
  }
  report.residues_ok = true;
  for (int r = 1; r <= n; ++r) {
    const int got = report.residue_counts[static_cast<std::size_t>(r - 1)];
    if (got != m) {
      report.residues_ok = false;
      report.problems.push_back("residue " + std::to_string(r) + " receives " + std::to_string(got) +
                                " landings, expected " + std::to_string(m));
    }
  }
  report.height_sum = pattern.height_sum();
  report.balls = pattern.ball_count();
  if (!report.balls)
    report.problems.push_back("throw heights sum to " + std::to_string(report.height_sum) +
                              ", not a multiple of the period " + std::to_string(n));
  return report;
}

/// State trajectory of `pattern` run once from `start` (n + 1 states).
inline std::vector<State> simulate(const SiteswapPattern& pattern, const State& start) {
  if (start.capacity() != pattern.capacity())
    throw ParameterError("start state capacity " + std::to_string(start.capacity()) + " differs from pattern's " +
                         std::to_string(pattern.capacity()));
  const auto balls = pattern.ball_count();
  if (!balls || *balls != start.balls())
    throw ParameterError("start state holds " + std::to_string(start.balls()) +
                         " balls, which does not match the pattern");
  std::vector<State> trajectory{start};
  int step = 1;
  for (const auto& throws : pattern.throws()) {
    try {
      trajectory.push_back(apply_throws(trajectory.back(), throws));
    } catch (const ParameterError& e) {
      throw SimulationError(e.what(), step);
    }
    ++step;
  }
  return trajectory;
}

/// The throws along an edge-valid walk.
inline SiteswapPattern pattern_of_walk(const Walk& walk) {
  if (walk.steps.empty()) throw ParameterError("an empty walk has no pattern");
  std::vector<ThrowSet> throws;
  const State* previous = &walk.start;
  for (std::size_t i = 0; i < walk.steps.size(); ++i) {
    const Step& step = walk.steps[i];
    if (step.state.capacity() != previous->capacity() || step.state.balls() != previous->balls() ||
        !is_edge(*previous, step.state) || transition_label(*previous, step.state) != step.throws)
      throw ParameterError("step " + std::to_string(i + 1) + " is not a valid transition");
    throws.push_back(step.throws);
    previous = &step.state;
  }
  return SiteswapPattern(std::move(throws), walk.start.capacity());
}

/// The landing schedule at time 0 when `pattern` has been repeated forever
/// in the past, its last beat thrown at time 0. Requires a valid pattern.
inline State induced_state(const SiteswapPattern& pattern) {
  if (!validate(pattern).valid()) throw ParameterError("induced state of an invalid pattern");
  const int n = pattern.period();
  int highest = 0;
  for (const auto& t : pattern.throws())
    if (!t.heights().empty()) highest = std::max(highest, t.heights().front());
  std::vector<int> slots(static_cast<std::size_t>(std::max(highest, 1)), 0);
  // Beat i of the k-th previous period is thrown at time i - k*n <= 0.
  for (int k = 1; (k - 1) * n < highest; ++k) {
    for (int i = 1; i <= n; ++i) {
      for (int x : pattern.throws()[static_cast<std::size_t>(i - 1)].heights()) {
        const int lands = i - k * n + x;
        if (x > 0 && lands >= 1) ++slots[static_cast<std::size_t>(lands - 1)];
      }
    }
  }
  return State(std::move(slots), pattern.capacity());
}

}  // namespace juggle
