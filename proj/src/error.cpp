#include "xihd/error.hpp"

namespace xihd {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::TiesPresent: return "TiesPresent";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::NonNumericCell: return "NonNumericCell";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DomainTooSmall: return "DomainTooSmall";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace xihd
