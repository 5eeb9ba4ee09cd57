#pragma once

#include <stdexcept>
#include <string>

namespace stabkit {

enum class ErrorKind {
  DivisionByZero,
  DimensionMismatch,
  AmbientMismatch,
  InvalidInput,
  InvariantViolation,
  Hypothesis,
  Cancelled,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stabkit
