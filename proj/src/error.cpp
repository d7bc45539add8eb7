#include "ppv/error.hpp"

namespace ppv {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::NonInvertible: return "non-invertible";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Verification: return "verification";
    case ErrorKind::InvalidInput: return "invalid-input";
  }
  return "unknown";
}

}  // namespace ppv
