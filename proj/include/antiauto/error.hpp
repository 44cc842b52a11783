#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace antiauto {

enum class ErrorKind {
  EmptyModuli,
  ModulusTooSmall,
  DimensionMismatch,
  IndexOutOfRange,
  Overflow,
  InvalidArgument,
  NotBijective,
  NonHomogeneousGroup,
  NotCyclic,
  NotIrreducible,
  BudgetExceeded,
  RankTooSmall,
  NotOdd,
  EvenInput,
  NotPrime,
  UnknownProposition,
  ParseError,
  MethodInapplicable,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All library failures are reported as `Error`; `kind()` identifies the
/// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace antiauto
