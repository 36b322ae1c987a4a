#pragma once

#include <stdexcept>
#include <string>

namespace congru {

// All library failures derive from Error. Property failures (a function that
// is not congruence preserving, an infeasible congruence system) are NOT
// errors: they are ordinary return values carrying a witness.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-side contract was violated (bad modulus, non-CP input where a CP
// function is required, mismatched shapes, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A size guard was exceeded (enumeration caps, window sizes).
class LimitError : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant. Seeing one of these is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace congru
