#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace juggle {

/// Arbitrary precision signed integer used for every count in the library.
using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient with the combinatorial convention: zero whenever
/// k < 0, top < 0 or k > top.
inline BigInt binomial(std::int64_t top, std::int64_t k) {
  if (k < 0 || top < 0 || k > top) return BigInt(0);
  if (k > top - k) k = top - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= top - k + i;
    result /= i;
  }
  return result;
}

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace juggle
