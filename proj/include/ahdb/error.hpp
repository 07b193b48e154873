#pragma once

#include <stdexcept>
#include <string>

namespace ahdb {

enum class ErrorKind {
  InvalidParameters,     // k < 1 or n < 1
  InfeasibleParameters,  // graph requested for k < 2 or n < 2
  NonexistentSequence,   // k == 1 and n > 1
  SizeLimit,
  CodeOutOfRange,
  InvalidLength,
  IntegralityViolation,
  DuplicateWindow,
  WindowNotFound,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ahdb
