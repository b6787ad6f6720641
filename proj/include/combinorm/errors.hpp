#pragma once

#include <stdexcept>
#include <string>

namespace combinorm {

// Base of every error raised by the library. Input errors and internal
// invariant violations are kept apart so the CLI can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class Unbounded : public Error {
 public:
  Unbounded() : Error("linear program is unbounded") {}
  using Error::Error;
};

class Infeasible : public Error {
 public:
  Infeasible() : Error("linear program is infeasible") {}
  using Error::Error;
};

class DimensionLimitExceeded : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class LadderMissing : public Error {
 public:
  using Error::Error;
};

class HostExhausted : public Error {
 public:
  using Error::Error;
};

class NotOnSphere : public Error {
 public:
  using Error::Error;
};

class NotAnOddHole : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class SearchSpaceExceeded : public Error {
 public:
  using Error::Error;
};

// Raised when independent routes that must agree do not. Always a bug.
class EquivalenceViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace combinorm
