#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace centropy {

enum class ErrorCode {
  NotHermitian,
  NotUnitTrace,
  NotPSD,
  NotUnitary,
  NoConvergence,
  OutOfRange,
  DegenerateSpectrum,
  TargetInsideClass,
  Parse,
  Io,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitTrace: return "NotUnitTrace";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::TargetInsideClass: return "TargetInsideClass";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace centropy
