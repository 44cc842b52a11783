#include "antiauto/constructions.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "antiauto/error.hpp"
#include "antiauto/linear.hpp"
#include "antiauto/number_theory.hpp"

namespace antiauto {

namespace {

TableMap verified(TableMap f, const char* what) {
  if (!is_antiautomorphism(f))
    throw std::logic_error(std::string("construction produced a non-antiautomorphism: ") + what);
  return f;
}

using Pair = std::pair<GroupElement, GroupElement>;

}  // namespace

TableMap klein_antiauto() {
  const AbelianGroup g{2, 2};
  const std::vector<Pair> pairs{
      {{1, 1}, {0, 0}},
      {{0, 1}, {0, 1}},
      {{0, 0}, {1, 0}},
      {{1, 0}, {1, 1}},
  };
  return verified(map_from_pairs(g, pairs), "klein");
}

TableMap z2cubed_antiauto() {
  const AbelianGroup g{2, 2, 2};
  const std::vector<Pair> pairs{
      {{1, 1, 1}, {0, 0, 0}},
      {{1, 0, 1}, {0, 0, 1}},
      {{0, 1, 1}, {0, 1, 0}},
      {{0, 0, 1}, {0, 1, 1}},
      {{0, 1, 0}, {1, 0, 0}},
      {{0, 0, 0}, {1, 0, 1}},
      {{1, 1, 0}, {1, 1, 0}},
      {{1, 0, 0}, {1, 1, 1}},
  };
  return verified(map_from_pairs(g, pairs), "z2^3");
}

TableMap z2_z4_antiauto() {
  const AbelianGroup g{2, 4};
  const std::vector<Pair> pairs{
      {{1, 3}, {0, 0}},
      {{1, 2}, {0, 1}},
      {{0, 3}, {0, 2}},
      {{0, 2}, {0, 3}},
      {{1, 0}, {1, 0}},
      {{0, 1}, {1, 1}},
      {{0, 0}, {1, 2}},
      {{1, 1}, {1, 3}},
  };
  return verified(map_from_pairs(g, pairs), "z2+z4");
}

TableMap elementary2_antiauto(unsigned r) {
  if (r < 2) throw Error(ErrorKind::RankTooSmall, "Z_2^r has antiautomorphisms only for r >= 2");
  if (r == 2) return klein_antiauto();
  if (r == 3) return z2cubed_antiauto();
  require_table_size(AbelianGroup(std::vector<std::uint64_t>(r, 2)));
  std::vector<TableMap> blocks(r / 2 - (r % 2), klein_antiauto());
  if (r % 2 == 1) blocks.push_back(z2cubed_antiauto());
  return verified(direct_sum_map(blocks), "elementary 2-group");
}

TableMap homogeneous2_antiauto(unsigned m, unsigned n, std::uint64_t max_order) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "exponent m must be at least 1");
  if (n < 2) throw Error(ErrorKind::RankTooSmall, "rank n must be at least 2");
  if (static_cast<std::uint64_t>(m) * n >= 63 ||
      (std::uint64_t{1} << (static_cast<std::uint64_t>(m) * n)) > max_order)
    throw Error(ErrorKind::BudgetExceeded, "(Z_2^" + std::to_string(m) + ")^" +
                                               std::to_string(n) + " exceeds the table budget");
  const auto c = companion_matrix(irreducible_poly_z2(n), std::uint64_t{1} << m);
  return verified(matrix_to_map(c), "companion");
}

TableMap negation_antiauto(const AbelianGroup& g) {
  if (count_involutions(g) != 0)
    throw Error(ErrorKind::MethodInapplicable, "negation is not an antiautomorphism when the "
                                               "group has elements of order 2");
  return verified(negation_map(g), "negation");
}

TableMap affine_antiauto(std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  if (n < 2) throw Error(ErrorKind::ModulusTooSmall, "modulus below 2");
  a %= n;
  b %= n;
  if (std::gcd(a, n) != 1 || std::gcd((a + n - 1) % n, n) != 1)
    throw Error(ErrorKind::MethodInapplicable,
                "multiplier " + std::to_string(a) + " needs gcd(a, n) = gcd(a - 1, n) = 1");
  const AbelianGroup g{n};
  auto f = multiplication_map(g, a);
  return verified(translate_map(f, GroupElement{static_cast<std::int64_t>(b)}), "affine");
}

std::vector<std::uint64_t> valid_multipliers(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 2; a < n; ++a)
    if (std::gcd(a, n) == 1 && std::gcd(a - 1, n) == 1) out.push_back(a);
  return out;
}

void for_each_odd_cyclic_antiauto(std::uint64_t n,
                                  const std::function<bool(const TableMap&)>& visit) {
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorKind::NotOdd, "odd cyclic family needs an odd modulus >= 3");
  const AbelianGroup g{n};
  require_table_size(g);
  for (auto a : valid_multipliers(n)) {
    const auto base = multiplication_map(g, a);
    for (std::uint64_t b = 0; b < n; ++b)
      if (!visit(verified(translate_map(base, GroupElement{static_cast<std::int64_t>(b)}),
                          "affine")))
        return;
  }
}

std::vector<TableMap> odd_cyclic_antiautos(std::uint64_t n) {
  std::vector<TableMap> out;
  for_each_odd_cyclic_antiauto(n, [&](const TableMap& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace antiauto
