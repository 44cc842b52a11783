#include "antiauto/number_theory.hpp"

#include "antiauto/error.hpp"

namespace antiauto {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyModuli: return "EmptyModuli";
    case ErrorKind::ModulusTooSmall: return "ModulusTooSmall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::NonHomogeneousGroup: return "NonHomogeneousGroup";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::EvenInput: return "EvenInput";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::UnknownProposition: return "UnknownProposition";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MethodInapplicable: return "MethodInapplicable";
  }
  return "Unknown";
}

Factorization factorize(std::uint64_t n) {
  Factorization out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r = checked_mul(r, base);
  return r;
}

}  // namespace antiauto
