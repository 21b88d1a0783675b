#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace genus_forge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition on a value was violated (bad leading term, zero denominator...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Operands live in incompatible structures (different variable lists, bases).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An internal identity that must hold by construction did not.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace genus_forge
