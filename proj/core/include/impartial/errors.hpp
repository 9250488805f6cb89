#pragma once

#include <stdexcept>
#include <string>

namespace impartial {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The successor relation reachable from a queried position contains a cycle.
class CycleError : public Error {
 public:
  CycleError() : Error("not an acyclic game") {}
};

// An operation was called outside its documented domain, e.g. the P-position
// remoteness formula applied to an N-position.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed arguments: wrong subset cardinality, k out of range, etc.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A configured size bound was exceeded (node budget, exponential tests).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Malformed JSON or other external input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace impartial
