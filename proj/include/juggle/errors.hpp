#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace juggle {

/// Raised when arguments violate an operation's preconditions
/// (mismatched ball counts, capacities out of range, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input. `offset` is the 0-based character position at
/// which the parser gave up.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A siteswap pattern could not be executed from a given state.
/// `step` is 1-based.
class SimulationError : public std::runtime_error {
 public:
  SimulationError(const std::string& what, int step)
      : std::runtime_error("step " + std::to_string(step) + ": " + what),
        step_(step) {}

  int step() const noexcept { return step_; }

 private:
  int step_;
};

}  // namespace juggle
