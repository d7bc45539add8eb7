#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppv {

enum class ErrorKind {
  Parse,
  DivisionByZero,
  NonInvertible,
  Unsupported,
  Precondition,
  Verification,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::Parse, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

// Internal consistency check that stays on in release builds.
inline void verify(bool condition, const char* what) {
  if (!condition) throw Error(ErrorKind::Verification, std::string("verification failed: ") + what);
}

}  // namespace ppv
