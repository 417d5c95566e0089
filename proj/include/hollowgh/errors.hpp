#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hollowgh {

// Operands live in polynomial rings with different numbers of variables.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size cap (n, basis size, ...) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violates the documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal identity that must hold did not (singular solve, non-integral
// coefficient, failed divisibility). Always a bug, never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Text input could not be parsed. `position` is a 0-based byte offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument("at position " + std::to_string(position) + ": " + what),
        position_(position),
        detail_(what) {}

  std::size_t position() const noexcept { return position_; }
  // The message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

}  // namespace hollowgh
