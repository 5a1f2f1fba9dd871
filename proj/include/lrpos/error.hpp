#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrpos {

enum class ErrorCode {
  MalformedInput,
  NotWeaklyDecreasing,
  NegativePart,
  NonpositiveScale,
  HeightExceedsRank,
  DimensionMismatch,
  BudgetExceeded,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorCode::NegativePart: return "NegativePart";
    case ErrorCode::NonpositiveScale: return "NonpositiveScale";
    case ErrorCode::HeightExceedsRank: return "HeightExceedsRank";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lrpos
