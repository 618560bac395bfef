#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace simpair {

enum class ErrorCode {
  NotAPartition,
  NotNested,
  ElementOutOfRange,
  ParseError,
  ClassIndexOutOfRange,
  NotRealizable,
  NotInSc,
  CapExceeded,
  ShapeMismatch,
  RangeError,
  InfiniteShape,
  NotAPermutation,
  NotSubset,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `code()` is the machine-readable part.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the brute-force oracles when the search space is larger than the cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t space, std::uint64_t cap)
      : Error(ErrorCode::CapExceeded,
              "search space " + (space == UINT64_MAX ? std::string(">2^64") : std::to_string(space)) +
                  " exceeds cap " + std::to_string(cap)),
        space_(space) {}

  /// Saturates at UINT64_MAX.
  std::uint64_t space() const noexcept { return space_; }

 private:
  std::uint64_t space_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace simpair
