#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wreath {

enum class ErrorKind {
  DegreeTooSmall,
  DegreeTooLarge,
  DegreeMismatch,
  LevelMismatch,
  OutOfRange,
  RepeatedEntry,
  InvalidParameter,
  Syntax,
  ArityMismatch,
  GuardExceeded,
  Precondition,
  BoundsViolation,
  SumViolation,
  ExceptionalType,
  SearchBoundExceeded,
  NoTriple,
  ZeroRational,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` is stable
// and is what tests and the CLI inspect.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Parse failure with the byte offset at which the grammar was violated.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::Syntax,
              "syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace wreath
