#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubecat {

/// Raised when a request would exceed an enumeration or search bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when morphisms do not chain or a dimension is out of range.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `position` is the 0-based offset of the offending
/// character, or npos when the whole token is at fault.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position = std::string::npos)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cubecat
