#pragma once

// JSON forms of the library types. Needs nlohmann/json on the include path.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "juggle/big_int.hpp"
#include "juggle/errors.hpp"
#include "juggle/polynomial.hpp"
#include "juggle/siteswap.hpp"
#include "juggle/state.hpp"
#include "juggle/walk_oracle.hpp"

namespace juggle::json_io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Counts are always decimal strings.
inline json count(const BigInt& value) { return value.str(); }

inline json counts(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

/// Coefficient as a JSON integer when it fits in 64 bits, else a string.
inline json coefficient(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
    return value.convert_to<std::int64_t>();
  return value.str();
}

inline BigInt big_int_from(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParameterError("expected an integer or a decimal string");
}

/// Constant term first.
inline json polynomial(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(coefficient(c));
  return out;
}

inline IntPolynomial polynomial_from(const json& j) {
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(big_int_from(x));
  return IntPolynomial(std::move(c));
}

inline json gf(const RationalGF& f) {
  return {{"numerator", polynomial(f.numerator)}, {"denominator", polynomial(f.denominator)}};
}

inline RationalGF gf_from(const json& j) {
  return RationalGF(polynomial_from(j.at("numerator")), polynomial_from(j.at("denominator")));
}

inline json throws(const ThrowSet& t) { return json(std::vector<int>(t.heights().begin(), t.heights().end())); }

/// Array of steps, each {"state": "2,1", "throws": [2,0]}.
inline json walk_steps(const Walk& walk) {
  json out = json::array();
  for (const auto& step : walk.steps) out.push_back({{"state", step.state.to_string()}, {"throws", throws(step.throws)}});
  return out;
}

inline Walk walk_from(const State& start, const json& steps) {
  Walk walk{start, {}};
  for (const auto& s : steps)
    walk.steps.push_back(Step{ThrowSet(s.at("throws").get<std::vector<int>>()),
                              State::parse(s.at("state").get<std::string>(), start.capacity())});
  return walk;
}

/// {"m": 2, "throws": [[2,0],[3,1],[3,3],[0,0]]}
inline json pattern(const SiteswapPattern& p) {
  json beats = json::array();
  for (const auto& t : p.throws()) beats.push_back(throws(t));
  return {{"m", p.capacity()}, {"throws", beats}};
}

inline SiteswapPattern pattern_from(const json& j) {
  const int m = j.at("m").get<int>();
  std::vector<ThrowSet> beats;
  for (const auto& t : j.at("throws")) {
    auto heights = t.get<std::vector<int>>();
    if (heights.size() > static_cast<std::size_t>(m)) throw ParameterError("beat wider than the hand capacity");
    heights.resize(static_cast<std::size_t>(m), 0);
    beats.emplace_back(std::move(heights));
  }
  return SiteswapPattern(std::move(beats), m);
}

}  // namespace juggle::json_io
