#pragma once

#include <stdexcept>
#include <string>

namespace entangle {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition (malformed file, improper cone, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An exact consistency check inside a construction failed. Always a bug.
class InternalCheckFailed : public Error {
 public:
  using Error::Error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidInput(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalCheckFailed(what);
}

}  // namespace entangle
