#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xihd {

enum class ErrorCode {
  TiesPresent,
  NonFiniteValue,
  NonNumericCell,
  LengthMismatch,
  DomainTooSmall,
  DomainError,
  TooLarge,
  BadShape,
  NotPositiveDefinite,
  IoError,
  ParseError,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception type. The code
// lets callers (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace xihd
