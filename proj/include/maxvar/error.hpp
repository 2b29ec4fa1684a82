#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxvar {

enum class ErrorCode {
  InvalidPrime,
  FieldTooSmall,
  DegreeZero,
  DegreeTooSmall,
  DegreeOverflow,
  DimensionMismatch,
  DegreeMismatch,
  SyntaxError,
  NotHomogeneous,
  VariableOutOfRange,
  SizeGuardExceeded,
  ResourceLimit,
  HilbertMismatch,
  CacheMismatch,
  FormatError,
  InvalidArgument,
  VerificationFailed,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the form parser. `position` is the 0-based byte offset into the
/// input where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& what)
      : Error(code, what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace maxvar
