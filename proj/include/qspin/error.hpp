#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qspin {

enum class ErrorKind {
  DivisionByZero,
  ClassicalSingular,
  ArgumentOutOfRange,
  InadmissibleTriple,
  InadmissibleLabel,
  UnsupportedSize,
  DivisorVanishes,
  CalibrationFailed,
  StateSpaceTooLarge,
  ConstraintViolated,
  ParseError,
  SchemaError,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library reports carries one of the kinds above so the
// CLI can emit a machine-readable error object.
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

}  // namespace qspin
