#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace majority {

enum class ErrorCode {
  invalid_argument = 1,
  range = 2,
  parse = 3,
  io = 4,
  domain = 5,
  precondition = 6,
  truncation = 7,
  generation = 8,
};

/// Base of every exception thrown by the library. The code survives the
/// trip through the C API unchanged.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::invalid_argument, what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorCode::range, what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  /// Message without the "line N: " prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorCode::precondition, what) {}
};

/// A backward path or dependence cone reached the edge of a finite segment.
class TruncationError : public Error {
 public:
  explicit TruncationError(const std::string& what) : Error(ErrorCode::truncation, what) {}
};

class GenerationError : public Error {
 public:
  explicit GenerationError(const std::string& what) : Error(ErrorCode::generation, what) {}
};

}  // namespace majority
