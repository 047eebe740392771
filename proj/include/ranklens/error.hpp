#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ranklens {

enum class ErrorCode {
  InvalidSize,
  IndexOutOfRange,
  EmptySubgame,
  ChoiceOutsideSubgame,
  ProfileOutsideSubgame,
  SizeMismatch,
  NotLaminar,
  UniquenessViolated,
  NotDeduped,
  CyclicGraph,
  SubgameNotFull,
  NotRationalizable,
  NotTwoRegular,
  ZeroSignEntry,
  SizeLimitExceeded,
  NotPowerOfTwo,
  BudgetExceeded,
  ParseError,
  InternalError,
};

std::string_view error_name(ErrorCode code);

// All library failures are reported through this exception; `code()` is the
// machine-readable tag surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace ranklens
