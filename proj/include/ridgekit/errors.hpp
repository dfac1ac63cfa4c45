#pragma once

#include <stdexcept>
#include <string>

namespace ridgekit {

enum class ErrorCode {
  InvalidSpec,
  DegenerateBoundary,
  QueryOutsideClipBox,
  NotInteriorPoint,
  GridTooCoarse,
  EnvelopeRadiusBelowSampling,
  NotC2At,
  InvalidRequest,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::DegenerateBoundary: return "DegenerateBoundary";
    case ErrorCode::QueryOutsideClipBox: return "QueryOutsideClipBox";
    case ErrorCode::NotInteriorPoint: return "NotInteriorPoint";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::EnvelopeRadiusBelowSampling: return "EnvelopeRadiusBelowSampling";
    case ErrorCode::NotC2At: return "NotC2At";
    case ErrorCode::InvalidRequest: return "InvalidRequest";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ridgekit
