#pragma once

#include <stdexcept>
#include <string>

namespace mgreen {

enum class ErrorKind {
  GraphDisconnected,
  NonpositiveLength,
  IndexOutOfRange,
  NotABridge,
  NotAdequate,
  SingularShift,
  BadDegree,
  ParseError,
  Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mgreen
