#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace torusplit {

enum class ErrorCode {
  DimensionMismatch,
  InvalidArgument,
  NotSaturated,
  SyntaxError,
  UnknownVariable,
  NegativeExponentOnNonInvertible,
  ZeroAtInvertibleVariable,
  NotHomogeneous,
  NotFaithful,
  AlreadyFaithful,
  AssumptionMissing,
  NoLinearVariable,
  DegenerateDenominator,
  SearchSpaceTooLarge,
  NotASolution,
  Overflow,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Parser failure with the byte offset of the offending token.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              "syntax error at position " + std::to_string(position) + ": " +
                  message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace torusplit
