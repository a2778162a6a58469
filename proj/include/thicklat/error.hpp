#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thicklat {

// Raised for invalid input: bad ranks, mismatched shapes, unknown fields, etc.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an internal mathematical invariant fails. Seeing one of these
// means a bug in this library, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Enumeration size cap exceeded.
class SizeGuardError : public Error {
 public:
  SizeGuardError(std::string const& what, std::size_t count, std::size_t cap)
      : Error(what), count_(count), cap_(cap) {}

  std::size_t count() const noexcept { return count_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t count_;
  std::size_t cap_;
};

#define THICKLAT_ASSERT(cond, msg)                                   \
  do {                                                               \
    if (!(cond)) {                                                   \
      throw ::thicklat::InvariantViolation(std::string(msg) + " (" + \
                                           #cond + ")");             \
    }                                                                \
  } while (false)

}  // namespace thicklat
