#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rctrs {

enum class Errc {
  NotPrime,
  Reducible,
  DegreeMismatch,
  InvalidArgument,
  DivisionByZero,
  FieldMismatch,
  UnboundElement,
  NotADivisor,
  OrderDoesNotDivide,
  IndexOutOfRange,
  NotSquare,
  HookOutOfRange,
  InvalidSpec,
  LengthMismatch,
  WrongHookTwist,
  SizeMismatch,
  DegenerateBC,
  MembershipViolation,
  UnsupportedExtendedGeneralH,
  ParseError,
  ValidationError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rctrs
