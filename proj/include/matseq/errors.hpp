#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matseq {

enum class ErrorCode {
  InvalidInput,
  UnsupportedRing,
  RingMismatch,
  NotPrime,
  DivisionByZero,
  NotDivisible,
  NotUnit,
  ZeroVector,
  BadIndex,
  EmptySequence,
  LengthMismatch,
  LengthTooShort,
  Char2Unsupported,
  NotTriangularizable,
  CommutativeInput,
  NotCommutative,
  NotCanonical1a,
  NotApplicable,
  DegenerateDiscriminant,
  ZeroC2,
  TowerTooDeep,
  TooLarge,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this exception; `code()` is
/// what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace matseq
