#pragma once

#include <stdexcept>
#include <string>

namespace cqc {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input violates an operation's documented precondition.
struct PreconditionError : Error {
  using Error::Error;
};

// Failure while parsing one of the text formats; line is 1-based.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// An exact search refused to run: the instance exceeds its size guard.
struct SizeGuardError : Error {
  using Error::Error;
};

// Input lies outside the graph class an algorithm is defined for.
struct ClassViolationError : Error {
  using Error::Error;
};

// Input provably needs more colors (odd cycle of length >= 5).
struct ChromaticExceptionError : Error {
  using Error::Error;
};

// A step that must always succeed on in-class inputs failed.
struct InternalInconsistencyError : Error {
  using Error::Error;
};

}  // namespace cqc
