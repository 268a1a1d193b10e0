#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matclose {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring spec, element literal, module spec or expression.
/// `offset()` is the byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class NotEnumerable : public Error {
 public:
  using Error::Error;
};

class NotDecidable : public Error {
 public:
  using Error::Error;
};

/// A desk-scale bound (order, size, search budget) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Violated precondition: bad index, dimension mismatch, non-central element...
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace matclose
