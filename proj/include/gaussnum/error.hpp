#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaussnum {

enum class ErrorCode {
  DivisionByZero,
  NotDivisible,
  BothZero,
  ZeroInput,
  BaseIsUnitOrZero,
  UnitOrZeroInput,
  BaseTooSmall,
  BaseMismatch,
  BaseNotRealOdd,
  InvalidDigitSet,
  ForeignDigit,
  InvalidWord,
  EmptyWord,
  NonTermination,
  AlphabetMismatch,
  BudgetExceeded,
  NotIndependent,
  InvalidDfa,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library carries one of the codes above so
// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gaussnum
