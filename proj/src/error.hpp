#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace equilib {

enum class ErrorCode {
  InvalidArgument,
  InvalidResolution,
  EmptyInput,
  DimensionMismatch,
  SyntaxError,
  UnknownVariable,
  DivisionByZero,
  DomainError,
  MissingVariable,
  NoViolation,
  EmptyConstraint,
  ParseError,
  SchemaError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a code so the C layer can map
// it onto a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Evaluation failures (expression arithmetic) are distinguished from
// usage/config failures by the CLI exit code.
inline bool is_evaluation_error(ErrorCode code) {
  return code == ErrorCode::DivisionByZero || code == ErrorCode::DomainError ||
         code == ErrorCode::MissingVariable;
}

}  // namespace equilib
