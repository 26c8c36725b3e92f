#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elemgs {

/// Malformed or out-of-contract input (maps to CLI exit code 3).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error at a character offset of the parsed text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An internal identity that must hold by construction failed to verify.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A bounded search or a degree cap was exhausted before a decision.
class InconclusiveError : public std::runtime_error {
 public:
  InconclusiveError(const std::string& what, unsigned needed_cap = 0)
      : std::runtime_error(what), needed_cap_(needed_cap) {}
  unsigned needed_cap() const noexcept { return needed_cap_; }

 private:
  unsigned needed_cap_;
};

}  // namespace elemgs
