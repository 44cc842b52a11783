#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "antiauto/linear.hpp"
#include "antiauto/table_map.hpp"

namespace antiauto {

struct SearchBudget {
  /// Largest group for exact counting and enumeration.
  std::uint64_t max_group_order = 16;
  /// Largest group for the early-exit existence search.
  std::uint64_t max_existence_order = 64;
  /// Enumeration stops after this many solutions (0 = no cap).
  std::uint64_t max_solutions = 0;
  /// Existence search gives up after visiting this many nodes (0 = no cap).
  std::uint64_t max_nodes = 200'000'000;
  /// Root branches are spread over this many workers; the result does not
  /// depend on it.
  unsigned jobs = 1;
  /// Largest group for which a witness table is materialized.
  std::uint64_t max_table_order = std::uint64_t{1} << 20;
  /// Limits for automorphism enumeration (biantiautomorphism counting).
  EnumerationBudget enumeration{};
};

/// Number of bijections f with id - f also a bijection.
///
/// Counts the solutions with f(0) = 0 and multiplies by |G|: translating by
/// -f(0) is a bijection between solutions with f(0) = c and those with
/// f(0) = 0. Throws BudgetExceeded.
std::uint64_t count_antiautomorphisms(const AbelianGroup& g, const SearchBudget& budget = {});

/// Same count without the translation reduction; a slower second route used
/// to cross-check the fast one.
std::uint64_t count_antiautomorphisms_unreduced(const AbelianGroup& g,
                                                const SearchBudget& budget = {});

/// Emits all antiautomorphisms in lexicographic table order (up to
/// budget.max_solutions). The visitor returns false to stop early.
void for_each_antiautomorphism(const AbelianGroup& g,
                               const std::function<bool(const TableMap&)>& visit,
                               const SearchBudget& budget = {});
std::vector<TableMap> enumerate_antiautomorphisms(const AbelianGroup& g,
                                                  const SearchBudget& budget = {});

/// The lexicographically first antiautomorphism, or nullopt once the space is
/// exhausted. Throws BudgetExceeded if the group is too large or the node
/// budget runs out before a decision.
std::optional<TableMap> exists_antiautomorphism_search(const AbelianGroup& g,
                                                       const SearchBudget& budget = {});

/// Automorphisms f with id - f bijective, by filtering the automorphism
/// enumeration.
std::uint64_t count_biantiautomorphisms_bruteforce(const AbelianGroup& g,
                                                   const EnumerationBudget& budget = {});

/// prod over p^alpha || n of p^{alpha-1}(p-2). Throws EvenInput.
std::uint64_t biantiauto_count_formula(std::uint64_t n);

/// prod over p^alpha || n of (p^{2 alpha} - 2 p^{2 alpha - 1}). Throws EvenInput.
std::uint64_t antiauto_lower_bound(std::uint64_t n);

/// Derangement numbers: !0 = 1, !1 = 0, !k = (k-1)(!(k-1) + !(k-2)).
std::uint64_t subfactorial(unsigned k);

/// !(p-1) * p for an odd prime p. Throws NotPrime.
std::uint64_t antiauto_upper_bound_prime(std::uint64_t p);

std::uint64_t euler_phi(std::uint64_t n);

/// |{a in [2, p^alpha - 1] : gcd(a, p^alpha) = gcd(a - 1, p^alpha) = 1}|.
/// Evaluated by the closed form and by a direct scan; throws logic_error if
/// they disagree. Throws NotPrime for p not an odd prime.
std::uint64_t count_valid_multipliers(std::uint64_t p, unsigned alpha);
std::uint64_t count_valid_multipliers_closed_form(std::uint64_t p, unsigned alpha);
std::uint64_t count_valid_multipliers_scan(std::uint64_t p, unsigned alpha);

/// True iff no automorphism is both fixed-point-free and of prime order.
bool verify_no_prime_order_fpf_automorphism(const AbelianGroup& g,
                                            const EnumerationBudget& budget = {});

}  // namespace antiauto
