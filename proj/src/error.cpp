#include "ahdb/error.hpp"

namespace ahdb {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorKind::NonexistentSequence: return "NonexistentSequence";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::CodeOutOfRange: return "CodeOutOfRange";
    case ErrorKind::InvalidLength: return "InvalidLength";
    case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    case ErrorKind::DuplicateWindow: return "DuplicateWindow";
    case ErrorKind::WindowNotFound: return "WindowNotFound";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ahdb
