#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "antiauto/table_map.hpp"

namespace antiauto {

// Every factory here checks is_antiautomorphism on its output before
// returning it and throws std::logic_error if the check fails.

/// The explicit four-element antiautomorphism of Z_2 + Z_2:
/// (1,1)->(0,0), (0,1)->(0,1), (0,0)->(1,0), (1,0)->(1,1).
TableMap klein_antiauto();

/// The explicit eight-element antiautomorphism of Z_2^3.
TableMap z2cubed_antiauto();

/// The explicit (non-linear) antiautomorphism of Z_2 + Z_4.
TableMap z2_z4_antiauto();

/// Z_2^r for r >= 2: Klein blocks, with one Z_2^3 block when r is odd.
/// Throws RankTooSmall.
TableMap elementary2_antiauto(unsigned r);

/// Companion matrix of the smallest irreducible degree-n polynomial over
/// Z_2, acting on (Z_{2^m})^n. Needs m >= 1, n >= 2. Throws BudgetExceeded
/// if 2^{mn} is beyond `max_order`.
TableMap homogeneous2_antiauto(unsigned m, unsigned n,
                               std::uint64_t max_order = kDefaultEnumerationCap);

/// Negation on a group without involutions. Throws MethodInapplicable otherwise.
TableMap negation_antiauto(const AbelianGroup& g);

/// psi_{a,b}(t) = a t + b on Z_n. Throws MethodInapplicable unless
/// gcd(a, n) = gcd(a - 1, n) = 1.
TableMap affine_antiauto(std::uint64_t n, std::uint64_t a, std::uint64_t b);

/// Multipliers a in [2, n) with gcd(a, n) = gcd(a - 1, n) = 1, ascending.
std::vector<std::uint64_t> valid_multipliers(std::uint64_t n);

/// All psi_{a,b} on Z_n (n odd, n >= 3), a ascending then b ascending.
/// The visitor returns false to stop. Throws NotOdd.
void for_each_odd_cyclic_antiauto(std::uint64_t n,
                                  const std::function<bool(const TableMap&)>& visit);
std::vector<TableMap> odd_cyclic_antiautos(std::uint64_t n);

}  // namespace antiauto
