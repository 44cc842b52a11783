#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "antiauto/constructions.hpp"
#include "antiauto/error.hpp"
#include "antiauto/search.hpp"

using namespace antiauto;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an antiauto::Error");
  return ErrorKind::InvalidArgument;
}

// Every permutation, filtered by the predicate; independent of the search.
std::vector<std::vector<Index>> brute_force(const AbelianGroup& g) {
  std::vector<Index> p(g.order());
  std::iota(p.begin(), p.end(), Index{0});
  std::vector<std::vector<Index>> out;
  do {
    if (is_antimorphism(TableMap(g, p))) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<Index>> tables(const std::vector<TableMap>& maps) {
  std::vector<std::vector<Index>> out;
  for (const auto& f : maps) out.emplace_back(f.table().begin(), f.table().end());
  return out;
}

}  // namespace

TEST_CASE("count_antiautomorphisms on small groups") {
  CHECK(count_antiautomorphisms(AbelianGroup{2, 2}) == 8);
  CHECK(count_antiautomorphisms(AbelianGroup{2, 2, 2}) == 384);
  CHECK(count_antiautomorphisms(AbelianGroup{3}) == 3);
  CHECK(count_antiautomorphisms(AbelianGroup{4}) == 0);
  CHECK(count_antiautomorphisms(AbelianGroup{2}) == 0);
}

TEST_CASE("search agrees with permutation brute force") {
  // Lexicographic permutation order equals lexicographic table order.
  for (const auto& g : {AbelianGroup{2, 2}, AbelianGroup{3}, AbelianGroup{4}, AbelianGroup{5},
                        AbelianGroup{6}, AbelianGroup{7}, AbelianGroup{2, 4}, AbelianGroup{4, 2},
                        AbelianGroup{2, 2, 2}, AbelianGroup{8}, AbelianGroup{9}, AbelianGroup{3, 3}}) {
    CAPTURE(g.order());
    const auto expected = brute_force(g);
    CHECK(count_antiautomorphisms(g) == expected.size());
    CHECK(count_antiautomorphisms_unreduced(g) == expected.size());
    CHECK(tables(enumerate_antiautomorphisms(g)) == expected);
    const auto first = exists_antiautomorphism_search(g);
    CHECK(first.has_value() == !expected.empty());
    if (first) CHECK(std::vector<Index>(first->table().begin(), first->table().end()) == expected.front());
  }
}

TEST_CASE("translation-reduced count equals the unreduced count") {
  for (const auto& g : {AbelianGroup{11}, AbelianGroup{3, 5}, AbelianGroup{2, 2, 3}, AbelianGroup{2, 6},
                        AbelianGroup{10}, AbelianGroup{13}})
    CHECK(count_antiautomorphisms(g) == count_antiautomorphisms_unreduced(g));
}

TEST_CASE("enumerate_antiautomorphisms") {
  SearchBudget limited;
  limited.max_solutions = 8;
  const auto k = enumerate_antiautomorphisms(AbelianGroup{2, 2}, limited);
  CHECK(k.size() == 8);
  CHECK(std::find(k.begin(), k.end(), klein_antiauto()) != k.end());

  CHECK(enumerate_antiautomorphisms(AbelianGroup{6}).empty());

  limited.max_solutions = 3;
  CHECK(enumerate_antiautomorphisms(AbelianGroup{2, 2, 2}, limited).size() == 3);

  // For Z5 the search finds exactly the affine family.
  const auto z5 = enumerate_antiautomorphisms(AbelianGroup{5});
  CHECK(z5.size() == 15);
  std::set<std::vector<Index>> found, affine;
  for (const auto& f : z5) {
    CHECK(is_antiautomorphism(f));
    found.emplace(f.table().begin(), f.table().end());
  }
  for (const auto& f : odd_cyclic_antiautos(5)) affine.emplace(f.table().begin(), f.table().end());
  CHECK(found == affine);
}

TEST_CASE("exists_antiautomorphism_search") {
  const auto w = exists_antiautomorphism_search(AbelianGroup{2, 4});
  REQUIRE(w.has_value());
  CHECK(is_antiautomorphism(*w));
  CHECK_FALSE(exists_antiautomorphism_search(AbelianGroup{8}).has_value());
  CHECK_FALSE(exists_antiautomorphism_search(AbelianGroup{2}).has_value());
  for (const auto& g : {AbelianGroup{3, 3, 3}, AbelianGroup{5, 5}, AbelianGroup{2, 2, 2, 2, 2, 2}}) {
    const auto big = exists_antiautomorphism_search(g);
    REQUIRE(big.has_value());
    CHECK(is_antiautomorphism(*big));
  }
}

TEST_CASE("search budgets") {
  CHECK(kind_of([] { count_antiautomorphisms(AbelianGroup{17}); }) == ErrorKind::BudgetExceeded);
  CHECK(kind_of([] { exists_antiautomorphism_search(AbelianGroup{65}); }) == ErrorKind::BudgetExceeded);
  SearchBudget tiny;
  tiny.max_nodes = 10;
  CHECK(kind_of([&] { exists_antiautomorphism_search(AbelianGroup{14}, tiny); }) ==
        ErrorKind::BudgetExceeded);
}

TEST_CASE("wide masks above 64 elements") {
  SearchBudget b;
  b.max_existence_order = 256;
  const auto w = exists_antiautomorphism_search(AbelianGroup(std::vector<std::uint64_t>(8, 2)), b);
  REQUIRE(w.has_value());
  CHECK(is_antiautomorphism(*w));
  const auto odd = exists_antiautomorphism_search(AbelianGroup{3, 3, 3, 3}, b);
  REQUIRE(odd.has_value());
  CHECK(is_antiautomorphism(*odd));
}

TEST_CASE("counts do not depend on the worker count") {
  for (const auto& g : {AbelianGroup{2, 2, 2}, AbelianGroup{9}, AbelianGroup{11}}) {
    SearchBudget b;
    const auto base = count_antiautomorphisms(g, b);
    for (unsigned jobs : {2u, 3u, 8u}) {
      b.jobs = jobs;
      CHECK(count_antiautomorphisms(g, b) == base);
      CHECK(count_antiautomorphisms_unreduced(g, b) == base);
    }
  }
}

TEST_CASE("biantiautomorphism brute force") {
  CHECK(count_biantiautomorphisms_bruteforce(AbelianGroup{2, 4}) == 0);
  CHECK(count_biantiautomorphisms_bruteforce(AbelianGroup{9}) == 3);
  CHECK(count_biantiautomorphisms_bruteforce(AbelianGroup{3}) == 1);
  CHECK(count_biantiautomorphisms_bruteforce(AbelianGroup{2, 2}) == 2);
  CHECK(count_biantiautomorphisms_bruteforce(AbelianGroup{2, 2, 2}) == 48);
}

TEST_CASE("biantiautomorphisms are a subset of antiautomorphisms") {
  for (std::uint64_t n = 2; n <= 12; ++n)
    for (const auto& g : abelian_groups_of_order(n))
      CHECK(count_biantiautomorphisms_bruteforce(g) <= count_antiautomorphisms(g));
}

TEST_CASE("closed-form counts") {
  CHECK(biantiauto_count_formula(9) == 3);
  CHECK(biantiauto_count_formula(15) == 3);
  CHECK(biantiauto_count_formula(7) == 5);
  CHECK(kind_of([] { biantiauto_count_formula(8); }) == ErrorKind::EvenInput);

  CHECK(antiauto_lower_bound(9) == 27);
  CHECK(antiauto_lower_bound(15) == 45);
  CHECK(antiauto_lower_bound(3) == 3);
  CHECK(antiauto_lower_bound(5) == 15);
  CHECK(antiauto_lower_bound(7) == 35);
  CHECK(kind_of([] { antiauto_lower_bound(10); }) == ErrorKind::EvenInput);

  CHECK(subfactorial(0) == 1);
  CHECK(subfactorial(1) == 0);
  CHECK(subfactorial(2) == 1);
  CHECK(subfactorial(4) == 9);
  CHECK(subfactorial(6) == 265);
  CHECK(antiauto_upper_bound_prime(5) == 45);
  CHECK(antiauto_upper_bound_prime(3) == 3);
  CHECK(kind_of([] { antiauto_upper_bound_prime(9); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { antiauto_upper_bound_prime(2); }) == ErrorKind::NotPrime);

  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(15) == 8);
}

TEST_CASE("subfactorial counts derangements") {
  for (unsigned k = 0; k <= 8; ++k) {
    std::vector<unsigned> p(k);
    std::iota(p.begin(), p.end(), 0u);
    std::uint64_t derangements = 0;
    do {
      bool fixed = false;
      for (unsigned i = 0; i < k; ++i) fixed = fixed || p[i] == i;
      if (!fixed) ++derangements;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(subfactorial(k) == derangements);
  }
}

TEST_CASE("count_valid_multipliers") {
  CHECK(count_valid_multipliers(3, 2) == 3);
  CHECK(count_valid_multipliers(5, 1) == 3);
  CHECK(count_valid_multipliers(7, 1) == 5);
  CHECK(kind_of([] { count_valid_multipliers(4, 1); }) == ErrorKind::NotPrime);
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
    for (unsigned a = 1;; ++a) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < a; ++i) q *= p;
      if (q > 2187) break;
      CHECK(count_valid_multipliers_closed_form(p, a) == count_valid_multipliers_scan(p, a));
    }
  }
}

TEST_CASE("verify_no_prime_order_fpf_automorphism") {
  CHECK(verify_no_prime_order_fpf_automorphism(AbelianGroup{2, 4}));
  CHECK(verify_no_prime_order_fpf_automorphism(AbelianGroup{2, 8}));
  CHECK_FALSE(verify_no_prime_order_fpf_automorphism(AbelianGroup{3}));
  // Z2^2 has the order-3 map (x, y) -> (y, x + y).
  CHECK_FALSE(verify_no_prime_order_fpf_automorphism(AbelianGroup{2, 2}));
}
