#pragma once

#include <stdexcept>
#include <string>

namespace rescue_ipw {

enum class ErrorCode {
  IoFailure,
  BadArgument,
  MissingColumn,
  BadValue,
  EmptyArm,
  NonConvergence,
  RankDeficientDesign,
  DimensionMismatch,
  DegenerateArm,
  MissingL,
  AllSwitchers,
  TruncationUnsupported,
  TooManyFailures,
  EmptyStratum,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::BadValue: return "BadValue";
    case ErrorCode::EmptyArm: return "EmptyArm";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::RankDeficientDesign: return "RankDeficientDesign";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateArm: return "DegenerateArm";
    case ErrorCode::MissingL: return "MissingL";
    case ErrorCode::AllSwitchers: return "AllSwitchers";
    case ErrorCode::TruncationUnsupported: return "TruncationUnsupported";
    case ErrorCode::TooManyFailures: return "TooManyFailures";
    case ErrorCode::EmptyStratum: return "EmptyStratum";
  }
  return "UnknownError";
}

}  // namespace rescue_ipw
