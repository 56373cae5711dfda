#pragma once

#include <stdexcept>
#include <string>

namespace dough {

enum class ErrorCode {
  EmptyDough,
  EmptyCloud,
  OriginOutside,
  NoIntersection,
  ZeroUnion,
  ZeroForce,
  AllDirectionsExcluded,
  WorkspaceExceeded,
  InvalidConfig,
  InvalidArgument,
  IoError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyDough: return "EmptyDough";
    case ErrorCode::EmptyCloud: return "EmptyCloud";
    case ErrorCode::OriginOutside: return "OriginOutside";
    case ErrorCode::NoIntersection: return "NoIntersection";
    case ErrorCode::ZeroUnion: return "ZeroUnion";
    case ErrorCode::ZeroForce: return "ZeroForce";
    case ErrorCode::AllDirectionsExcluded: return "AllDirectionsExcluded";
    case ErrorCode::WorkspaceExceeded: return "WorkspaceExceeded";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

// All library failures funnel through this type; `code` tells callers which
// contract was violated without matching on message text.
class DoughError : public std::runtime_error {
 public:
  DoughError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
  throw DoughError(code, msg);
}

}  // namespace dough
