#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ldc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or family document. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exact method was asked to work beyond its configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A verification routine refused to run because it would exceed its budget.
/// Distinct from a negative verification result.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Invalid solver or generator configuration (k < 2, c <= 0, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A precondition between internal components was violated. Signals a bug.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Randomized witness extraction kept getting inconsistent answers.
class ExtractionError : public Error {
 public:
  using Error::Error;
};

/// A produced witness failed validation. Never expected to be raised.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ldc
