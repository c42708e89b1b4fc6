#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bratteli {

enum class ErrorKind {
  UnsupportedDegree,
  DivisionByZero,
  InvalidDiagram,
  InfiniteMeasureUnsupported,
  InternalConsistency,
  EnumerationTooLarge,
  FieldMismatch,
  Unsupported,
  Precondition,
  SearchFailed,
  TooLarge,
  OutOfRange,
  InvalidExpression,
  UnknownClass,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void check_consistency(bool condition, const char* what) {
  if (!condition) fail(ErrorKind::InternalConsistency, what);
}

}  // namespace bratteli
