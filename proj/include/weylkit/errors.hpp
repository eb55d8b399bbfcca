#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace weylkit {

// Every failure mode surfaces as an Error with a stable machine-readable
// code(); what() carries the human detail. The CLI maps Error to exit 1 and
// a JSON error object, usage problems to exit 2.
class Error : public std::runtime_error {
 public:
  Error(const char* code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  const char* code() const noexcept { return code_; }

 private:
  const char* code_;
};

#define WEYLKIT_ERROR(NAME)                                          \
  class NAME : public Error {                                        \
   public:                                                           \
    explicit NAME(const std::string& msg) : Error(#NAME, msg) {}     \
  }

WEYLKIT_ERROR(BadDiagonal);
WEYLKIT_ERROR(BadSign);
WEYLKIT_ERROR(AsymmetricZero);
WEYLKIT_ERROR(Decomposable);
WEYLKIT_ERROR(BadGenerator);
WEYLKIT_ERROR(SearchBudgetExceeded);
WEYLKIT_ERROR(SameWall);
WEYLKIT_ERROR(NotCrystallographic);
WEYLKIT_ERROR(WrongType);
WEYLKIT_ERROR(BadSyllable);
WEYLKIT_ERROR(InfiniteVertexGroup);
WEYLKIT_ERROR(WordNotReduced);
WEYLKIT_ERROR(HypothesesFailed);
WEYLKIT_ERROR(FingerprintMismatch);
WEYLKIT_ERROR(InvalidDocument);
WEYLKIT_ERROR(ArithmeticOverflow);
WEYLKIT_ERROR(PrecisionExceeded);
WEYLKIT_ERROR(UsageError);
WEYLKIT_ERROR(IoError);

#undef WEYLKIT_ERROR

}  // namespace weylkit
