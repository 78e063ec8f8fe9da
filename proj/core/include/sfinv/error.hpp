#pragma once

#include <stdexcept>
#include <string>

namespace sfinv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (words, group descriptions, witness files, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration hit its configured budget where an exact answer
/// was required.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Two independent certificate sources contradicted each other. This always
/// indicates a bug or a corrupted witness, never a property of the input.
class SoundnessViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace sfinv
