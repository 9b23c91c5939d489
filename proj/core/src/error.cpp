#include "tlfc/error.hpp"

namespace tlfc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotStandard: return "NotStandard";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::NotThick: return "NotThick";
    case ErrorCode::IdentityHasNoDescents: return "IdentityHasNoDescents";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotMatching: return "NotMatching";
    case ErrorCode::Crossing: return "Crossing";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::StringMismatch: return "StringMismatch";
    case ErrorCode::UnexpectedLoop: return "UnexpectedLoop";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::InvalidBallot: return "InvalidBallot";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace tlfc
