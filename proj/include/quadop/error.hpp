#pragma once

#include <stdexcept>
#include <string>

namespace quadop {

// Every engine failure maps onto one process exit code of the CLI.
enum class ExitCode : int {
  ok = 0,
  not_koszul = 1,
  usage = 2,
  capacity = 3,
  cross_check = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

/// Malformed identity text or relations file. `position` is a 0-based byte
/// offset into the offending text, or npos when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = std::string::npos)
      : Error(ExitCode::usage, position == std::string::npos
                                   ? what
                                   : what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error(ExitCode::usage, what) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(ExitCode::capacity, what) {}
};

/// A prime field cannot represent some rational input (the prime divides a
/// denominator). Retry with another prime.
class FieldError : public Error {
 public:
  explicit FieldError(const std::string& what) : Error(ExitCode::usage, what) {}
};

/// Two independent computations that must agree did not.
class CrossCheckError : public Error {
 public:
  explicit CrossCheckError(const std::string& what) : Error(ExitCode::cross_check, what) {}
};

}  // namespace quadop
