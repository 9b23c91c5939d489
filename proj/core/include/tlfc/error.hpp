#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tlfc {

enum class ErrorCode {
  NotStandard,
  RankOutOfRange,
  NotThick,
  IdentityHasNoDescents,
  IndexOutOfRange,
  NotMatching,
  Crossing,
  ParityViolation,
  StringMismatch,
  UnexpectedLoop,
  RankMismatch,
  InvalidBallot,
  InvalidPath,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every domain failure in the library is reported through this type; the
// code names the violated invariant, the message carries the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace tlfc
