#ifndef XCOMPLEX_ERROR_HPP
#define XCOMPLEX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace xcomplex {

enum class ErrorCode {
  NotAssociative,
  NoIdentityAtZero,
  MissingInverse,
  DimensionMismatch,
  NotSubgroup,
  NotNormal,
  IndexOutOfRange,
  ValidationFailed,
  ResultTooLarge,
  InstanceTooLarge,
  TargetNotMorphism,
  ParseError,
  InternalAssertion,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorCode::MissingInverse: return "MissingInverse";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::ResultTooLarge: return "ResultTooLarge";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::TargetNotMorphism: return "TargetNotMorphism";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace xcomplex

#endif
