#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mildem {

/// Failure categories raised by the library. Every operation that can fail
/// throws mildem::Error carrying one of these.
enum class ErrorKind {
  MalformedLiteral,
  NotInjective,
  FiniteSet,
  NotCoinfinite,
  PreconditionFailed,
  SearchExhausted,
  IndexOutOfRange,
  TruncationExceeded,
  ArityMismatch,
  GroupTooLarge,
  UnsupportedFamily,
  NoMinimalSupport,
  WitnessInvalid,
  VerificationFailed,
  NotSummable,
  UnknownCheck,
  ParseError,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace mildem
