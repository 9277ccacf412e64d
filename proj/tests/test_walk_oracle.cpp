#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "juggle/diagram.hpp"
#include "juggle/walk_oracle.hpp"
#include "test_support.hpp"

using namespace juggle;

namespace {

State st(const char* text, int m) { return State::parse(text, m); }

Walk worked_example_walk() {
  const int m = 2;
  return Walk{st("1,2", m),
              {Step{ThrowSet({0, 2}), st("2,1", m)},
               Step{ThrowSet({1, 3}), st("2,0,1", m)},
               Step{ThrowSet({3, 3}), st("0,1,2", m)},
               Step{ThrowSet({0, 0}), st("1,2", m)}}};
}

}  // namespace

TEST(SelectionMatrix, WorkedExampleRowSums) {
  const State s = st("1,2", 2);
  const auto matrix = SelectionMatrix::for_walk(s, s, 4);
  EXPECT_EQ(matrix.row_sums, (std::vector<int>{1, 0, 2, 2, 1, 2}));
  EXPECT_EQ(matrix.period, 4);
  EXPECT_EQ(matrix.capacity, 2);
  EXPECT_TRUE(matrix.feasible());
}

TEST(CountSelections, WorkedExampleAgreesWithBruteForce) {
  const State s = st("1,2", 2);
  const BigInt selections = count_selections(SelectionMatrix::for_walk(s, s, 4));
  EXPECT_GE(selections, 1);
  EXPECT_EQ(selections, count_walks_brute(s, s, 4));
  EXPECT_EQ(selections, oracle::naive_walk_count(s, s, 4));
}

TEST(CountSelections, SingleBlockFullHand) {
  const State s = st("3", 3);
  EXPECT_EQ(count_selections(SelectionMatrix::for_walk(s, s, 1)), 1);
}

TEST(CountSelections, NegativeRowSumMeansNoWalk) {
  const State from = st("0,0,2", 2);
  const State to = st("2", 2);
  const auto matrix = SelectionMatrix::for_walk(from, to, 1);
  EXPECT_FALSE(matrix.feasible());
  EXPECT_EQ(count_selections(matrix), 0);
  EXPECT_EQ(count_walks_brute(from, to, 1), 0);
}

TEST(CountSelections, ZeroBlocks) {
  EXPECT_EQ(count_selections(SelectionMatrix{0, 2, {}}), 1);
  EXPECT_EQ(count_selections(SelectionMatrix{0, 2, {0, 0}}), 1);
  EXPECT_EQ(count_selections(SelectionMatrix{0, 2, {1}}), 0);
}

TEST(CountWalksBrute, TableRow) {
  const State s = st("2", 2);
  EXPECT_EQ(count_walks_brute(s, s, 3), 10);
}

TEST(CountWalksBrute, LengthZero) {
  EXPECT_EQ(count_walks_brute(st("2,1", 2), st("2,1", 2), 0), 1);
  EXPECT_EQ(count_walks_brute(st("2,1", 2), st("1,2", 2), 0), 0);
}

TEST(CountWalksBrute, PermutedStatesDiffer) {
  // <1,2> and <2,1> are different states; do not expect the <2,1> value.
  const State s = st("1,2", 2);
  const BigInt x = count_walks_brute(s, s, 4);
  EXPECT_EQ(x, count_selections(SelectionMatrix::for_walk(s, s, 4)));
  EXPECT_EQ(x, 62);
  EXPECT_NE(x, 124);
}

TEST(CountWalksBrute, MismatchedStates) {
  EXPECT_THROW(count_walks_brute(st("2", 2), st("1", 2), 1), ParameterError);
}

TEST(CountWalksBrute, SumOverTargetsIsOutDegree) {
  for (int m = 1; m <= 3; ++m) {
    for (int b = 0; b <= 3; ++b) {
      const int cap = 4;
      const auto targets = oracle::all_states(b, m, cap);
      for (const auto& from : oracle::all_states(b, m, 3)) {
        BigInt total = 0;
        for (const auto& to : targets) total += count_walks_brute(from, to, 1);
        EXPECT_EQ(total, successors(from, cap).size()) << from.display();
      }
    }
  }
}

TEST(CountSelections, TerminalRowsMayBePermuted) {
  // Holds with and without initial noise overlapping the tail.
  for (int m = 1; m <= 3; ++m) {
    for (int b = 1; b <= 3; ++b) {
      const auto states = oracle::all_states(b, m, 3);
      for (const auto& from : states) {
        for (const auto& to : states) {
          for (int n = 0; n <= 4; ++n) {
            auto matrix = SelectionMatrix::for_walk(from, to, n);
            const BigInt expected = count_walks_brute(from, to, n);
            ASSERT_EQ(count_selections(matrix), expected);
            auto tail_begin = matrix.row_sums.begin() + n;
            std::sort(tail_begin, matrix.row_sums.end());
            do {
              EXPECT_EQ(count_selections(matrix), expected)
                  << from.display() << " -> " << to.display() << " n=" << n << " m=" << m;
            } while (std::next_permutation(tail_begin, matrix.row_sums.end()));
          }
        }
      }
    }
  }
}

TEST(WalkOracles, RandomInstancesAgree) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 3);
    const int b = static_cast<int>(rng() % 4);
    const auto states = oracle::all_states(b, m, 3);
    const State& from = states[rng() % states.size()];
    const State& to = states[rng() % states.size()];
    const int n = static_cast<int>(rng() % 6);
    const BigInt naive = oracle::naive_walk_count(from, to, n);
    EXPECT_EQ(count_walks_brute(from, to, n), naive);
    EXPECT_EQ(count_selections(SelectionMatrix::for_walk(from, to, n)), naive);
  }
}

TEST(EnumerateWalks, ContainsWorkedExample) {
  const State s = st("1,2", 2);
  const auto walks = enumerate_walks(s, s, 4);
  EXPECT_EQ(walks.size(), 62u);
  EXPECT_NE(std::find(walks.begin(), walks.end(), worked_example_walk()), walks.end());
}

TEST(EnumerateWalks, EmptyWalk) {
  const State s = st("2,1", 2);
  const auto walks = enumerate_walks(s, s, 0);
  ASSERT_EQ(walks.size(), 1u);
  EXPECT_TRUE(walks[0].steps.empty());
  EXPECT_TRUE(enumerate_walks(s, st("1,2", 2), 0).empty());
}

TEST(EnumerateWalks, EdgeValidSortedDistinctAndComplete) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& from : oracle::all_states(3, m, 3)) {
      for (const auto& to : oracle::all_states(3, m, 2)) {
        const auto walks = enumerate_walks(from, to, 3, std::nullopt);
        EXPECT_EQ(walks.size(), count_walks_brute(from, to, 3));
        std::vector<std::vector<State>> paths;
        for (const auto& w : walks) {
          State here = w.start;
          std::vector<State> path{here};
          for (const auto& step : w.steps) {
            EXPECT_TRUE(is_edge(here, step.state));
            EXPECT_EQ(transition_label(here, step.state), step.throws);
            here = step.state;
            path.push_back(here);
          }
          EXPECT_EQ(here, to);
          paths.push_back(std::move(path));
        }
        EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end()));
        EXPECT_EQ(std::adjacent_find(paths.begin(), paths.end()), paths.end());
      }
    }
  }
}

TEST(EnumerateWalks, LimitTruncatesInOrder) {
  const State s = st("2,1", 2);
  const auto all = enumerate_walks(s, s, 4, std::nullopt);
  const auto first = enumerate_walks(s, s, 4, 10);
  ASSERT_EQ(all.size(), 124u);
  ASSERT_EQ(first.size(), 10u);
  EXPECT_TRUE(std::equal(first.begin(), first.end(), all.begin()));
  EXPECT_TRUE(enumerate_walks(s, s, 4, 0).empty());
}

TEST(EnumerateWalks, DefaultLimit) {
  const State s = st("3", 3);
  EXPECT_EQ(count_walks_brute(s, s, 6), 3976);
  EXPECT_EQ(enumerate_walks(s, s, 6).size(), 3976u);
  EXPECT_EQ(kDefaultWalkLimit, 10000u);
  EXPECT_EQ(enumerate_walks(s, s, 7).size(), kDefaultWalkLimit);
}

TEST(CountFirstReturn, TableRows) {
  EXPECT_EQ(count_first_return(st("2", 2), 3), 5);
  EXPECT_EQ(count_first_return(st("3", 3), 2), 3);
}

TEST(CountFirstReturn, LengthOneIsAnyClosedWalk) {
  for (int m = 1; m <= 3; ++m)
    for (const auto& s : oracle::all_states(2, m, 3))
      EXPECT_EQ(count_first_return(s, 1), count_walks_brute(s, s, 1));
  EXPECT_THROW(count_first_return(st("2", 2), 0), ParameterError);
}

TEST(CountFirstReturn, MatchesNaiveDefinition) {
  for (int m = 1; m <= 3; ++m)
    for (int b = 0; b <= 3; ++b)
      for (const auto& s : oracle::all_states(b, m, 2))
        for (int n = 1; n <= 4; ++n) EXPECT_EQ(count_first_return(s, n), oracle::naive_first_return(s, n));
}
