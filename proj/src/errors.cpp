#include "wreath/errors.hpp"

namespace wreath {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::DegreeTooSmall: return "degree-too-small";
  case ErrorKind::DegreeTooLarge: return "degree-too-large";
  case ErrorKind::DegreeMismatch: return "degree-mismatch";
  case ErrorKind::LevelMismatch: return "level-mismatch";
  case ErrorKind::OutOfRange: return "out-of-range";
  case ErrorKind::RepeatedEntry: return "repeated-entry";
  case ErrorKind::InvalidParameter: return "invalid-parameter";
  case ErrorKind::Syntax: return "syntax-error";
  case ErrorKind::ArityMismatch: return "arity-mismatch";
  case ErrorKind::GuardExceeded: return "guard-exceeded";
  case ErrorKind::Precondition: return "precondition-violation";
  case ErrorKind::BoundsViolation: return "bounds-violation";
  case ErrorKind::SumViolation: return "sum-violation";
  case ErrorKind::ExceptionalType: return "exceptional-type";
  case ErrorKind::SearchBoundExceeded: return "search-bound-exceeded";
  case ErrorKind::NoTriple: return "no-triple";
  case ErrorKind::ZeroRational: return "zero-rational";
  }
  return "unknown";
}

} // namespace wreath
