#pragma once

#include <stdexcept>
#include <string>

namespace renner {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a precondition violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Request exceeds the enumeration bounds the library is willing to attempt.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace renner
