#pragma once

#include <stdexcept>
#include <string>

namespace wpl {

enum class ErrorKind {
  LengthMismatch,
  ParentMismatch,
  IndexOutOfRange,
  InvalidArgument,
  TorsionCapExceeded,
  InfiniteSubgroup,
  InfiniteKernel,
  NotWellDefined,
  DomainMismatch,
  UnsupportedKernel,
  NoSplit,
  DivisionByZero,
  TowerDepthExceeded,
  NotExact,
  ParseError,
  DegenerateParameter,
  UnsupportedCase,
  NonTubular,
  MalformedSubgroup,
  PreconditionViolation,
};

const char* error_name(ErrorKind kind);

// Every domain failure in the library is reported through this type so the
// CLI can map it to a named diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::TorsionCapExceeded: return "TorsionCapExceeded";
    case ErrorKind::InfiniteSubgroup: return "InfiniteSubgroup";
    case ErrorKind::InfiniteKernel: return "InfiniteKernel";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::UnsupportedKernel: return "UnsupportedKernel";
    case ErrorKind::NoSplit: return "NoSplit";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::TowerDepthExceeded: return "TowerDepthExceeded";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::NonTubular: return "NonTubular";
    case ErrorKind::MalformedSubgroup: return "MalformedSubgroup";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
  }
  return "Unknown";
}

}  // namespace wpl
