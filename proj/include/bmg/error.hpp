#pragma once

#include <stdexcept>
#include <string>

namespace bmg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text, JSON, Newick or colour sidecar input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A graph or argument violates a structural invariant (loop, same-colour
/// edge, vertex out of range, bad partition, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation's domain precondition does not hold, e.g. the input is not a
/// 2-cBMG where one is required.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A property that must hold by construction was found violated.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bmg
