#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieab {

/// Root of every error thrown by the library. The CLI maps subclasses onto
/// exit codes (see tools/lieab.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidScalar : public Error {
 public:
  using Error::Error;
};

/// A Groebner computation ran out of its reduction budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class NotSubalgebra : public Error {
 public:
  using Error::Error;
};

class SingularTransform : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// The caller's maximality assumption (alpha = n-1 or n-2) was false.
class MaximalityViolated : public Error {
 public:
  using Error::Error;
};

class UnknownType : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class UnknownFamily : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

/// A decision needed for the requested invariant came back undecided.
class Undecided : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed (e.g. beta > alpha). Always a bug.
class SoundnessViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace lieab
