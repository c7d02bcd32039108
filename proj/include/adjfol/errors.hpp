#pragma once

#include <stdexcept>
#include <string>

namespace adjfol {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller handed in data that violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size ceiling (weight-system dimension, sample count) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An internal identity failed; always indicates a bug in weight or polynomial arithmetic.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (JSON weights, forms, polynomials).
class ParseError : public Error {
 public:
  using Error::Error;
};

namespace detail {

[[noreturn]] inline void fail_consistency(const std::string& what) { throw ConsistencyError(what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidArgument(what);
}

}  // namespace detail
}  // namespace adjfol
