#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace garside {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in braid groups with different strand counts.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A value violates the invariants of its type (bad generator index,
/// non-bijective permutation, malformed composition, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Integer overflow in a Delta exponent or a curve coordinate.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// detube() was handed a braid that does not preserve the tube system.
class NotTubular : public Error {
 public:
  using Error::Error;
};

/// A configurable resource bound was reached (BFS depth, enumeration cap).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class DepthLimitExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

class CapExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

/// Syntax error in a braid word or curve specification.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace garside
