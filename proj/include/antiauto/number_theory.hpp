#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace antiauto {

/// (prime, exponent) pairs, primes ascending.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

Factorization factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Multiplication that throws Error(Overflow) instead of wrapping.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

}  // namespace antiauto
