#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace proxyalign {

enum class ErrorCode {
  Usage,
  Parse,
  InvalidArgument,
  Model,
  StateBound,
  Io,
};

/// Stable prefix printed by the CLI in front of every diagnostic.
constexpr std::string_view error_tag(ErrorCode code) {
  switch (code) {
    case ErrorCode::Usage: return "E-USAGE";
    case ErrorCode::Parse: return "E-PARSE";
    case ErrorCode::InvalidArgument: return "E-ARG";
    case ErrorCode::Model: return "E-MODEL";
    case ErrorCode::StateBound: return "E-STATE-BOUND";
    case ErrorCode::Io: return "E-IO";
  }
  return "E-UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(ErrorCode::Parse, line == 0 ? message
                                          : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message)
      : Error(ErrorCode::InvalidArgument, message) {}
};

class ModelError : public Error {
 public:
  explicit ModelError(const std::string& message) : Error(ErrorCode::Model, message) {}
};

/// A search or reachability exploration visited more states than allowed.
class StateBoundExceeded : public Error {
 public:
  StateBoundExceeded(std::size_t bound, const std::string& what)
      : Error(ErrorCode::StateBound,
              what + ": state bound of " + std::to_string(bound) + " exceeded"),
        bound_(bound) {}

  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

}  // namespace proxyalign
