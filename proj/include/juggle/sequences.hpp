#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "juggle/big_int.hpp"
#include "juggle/errors.hpp"
#include "juggle/polynomial.hpp"
#include "juggle/state.hpp"
#include "juggle/transfer.hpp"
#include "juggle/walk_oracle.hpp"

namespace juggle {

enum class SequenceKind { periodic, primitive };

inline const char* to_string(SequenceKind kind) {
  return kind == SequenceKind::periodic ? "periodic" : "primitive";
}

/// Terms a(1), a(2), ... counting walks from `origin` to `terminal`.
struct CountSequence {
  State origin;
  State terminal;
  SequenceKind kind = SequenceKind::periodic;
  std::vector<BigInt> terms;

  int balls() const noexcept { return origin.balls(); }
  int capacity() const noexcept { return origin.capacity(); }
};

/// The recurrence of the transfer matrix for (b, m). It is shared by every
/// pair of states with b balls and capacity m.
inline LinearRecurrence universal_recurrence(int balls, int capacity) {
  return recurrence_from_charpoly(char_poly(build_transfer_matrix(balls, capacity).entries));
}

/// How many leading terms have to come from a direct count before the
/// recurrence takes over: h(alpha) + r - 1, with h taken as at least 1
/// since a(0) is not part of the sequence.
inline std::size_t initial_term_count(const State& origin, std::size_t order) {
  return static_cast<std::size_t>(std::max(origin.height(), 1)) + order - 1;
}

/// Closed walks of length 1..count at `origin`. The first
/// initial_term_count terms are brute-force counts, the rest come from the
/// recurrence.
inline CountSequence periodic_sequence(const State& origin, std::size_t count) {
  const LinearRecurrence rec = universal_recurrence(origin.balls(), origin.capacity());
  const std::size_t seeded = std::min(count, initial_term_count(origin, rec.order()));
  CountSequence seq{origin, origin, SequenceKind::periodic, {}};
  for (std::size_t n = 1; n <= seeded; ++n) seq.terms.push_back(count_walks_brute(origin, origin, static_cast<int>(n)));
  rec.extend(seq.terms, count);
  return seq;
}

/// Generating function sum_{n>=1} a(n) x^n of the periodic counts, with
/// the reversed characteristic polynomial as denominator. Not reduced.
inline RationalGF periodic_gf(const State& origin) {
  const IntPolynomial charpoly = char_poly(build_transfer_matrix(origin.balls(), origin.capacity()).entries);
  const std::size_t r = static_cast<std::size_t>(charpoly.degree());
  const IntPolynomial denominator = charpoly.reversed();
  const std::size_t top = initial_term_count(origin, r);  // numerator degree bound

  // Enough brute-force terms to also see r coefficients past the bound.
  std::vector<BigInt> series{BigInt(0)};
  for (std::size_t n = 1; n <= top + r; ++n) series.push_back(count_walks_brute(origin, origin, static_cast<int>(n)));
  const IntPolynomial product = denominator * IntPolynomial(std::move(series));
  for (std::size_t k = top + 1; k <= top + r; ++k)
    if (product[k] != 0)
      throw std::logic_error("generating function numerator exceeds degree " + std::to_string(top) + " for " +
                             origin.display());
  return RationalGF(product.truncated(top), denominator);
}

/// First-return counts b(1..count) via F / (1 + F).
inline CountSequence primitive_sequence(const State& origin, std::size_t count) {
  CountSequence seq{origin, origin, SequenceKind::primitive, {}};
  seq.terms = expand(primitive_transform(periodic_gf(origin)), count);
  return seq;
}

/// Re-derives every `every`-th term (1-based n = every, 2*every, ...) by
/// brute force and returns the indices n that disagree.
inline std::vector<std::size_t> spot_check(const CountSequence& seq, std::size_t every) {
  if (every == 0) throw ParameterError("spot-check stride must be positive");
  std::vector<std::size_t> mismatches;
  for (std::size_t n = every; n <= seq.terms.size(); n += every) {
    const int length = static_cast<int>(n);
    const BigInt expected = seq.kind == SequenceKind::periodic ? count_walks_brute(seq.origin, seq.terminal, length)
                                                               : count_first_return(seq.origin, length);
    if (expected != seq.terms[n - 1]) mismatches.push_back(n);
  }
  return mismatches;
}

}  // namespace juggle
