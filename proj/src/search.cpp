#include "antiauto/search.hpp"

#include <atomic>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "antiauto/error.hpp"
#include "antiauto/number_theory.hpp"

namespace antiauto {

namespace {

// Single-word mask for groups of order <= 64.
struct WordMask {
  std::uint64_t bits = 0;

  explicit WordMask(std::size_t) {}
  void set(Index i) { bits |= std::uint64_t{1} << i; }
  void reset(Index i) { bits &= ~(std::uint64_t{1} << i); }
  bool test(Index i) const { return (bits >> i) & 1u; }

  template <typename Fn>
  bool for_each_clear(std::size_t n, Fn&& fn) const {
    std::uint64_t free = ~bits & (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    while (free != 0) {
      const auto i = static_cast<Index>(std::countr_zero(free));
      free &= free - 1;
      if (!fn(i)) return false;
    }
    return true;
  }
};

struct WideMask {
  std::vector<std::uint64_t> words;

  explicit WideMask(std::size_t n) : words((n + 63) / 64, 0) {}
  void set(Index i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(Index i) { words[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(Index i) const { return (words[i / 64] >> (i % 64)) & 1u; }

  template <typename Fn>
  bool for_each_clear(std::size_t n, Fn&& fn) const {
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::uint64_t free = ~words[w];
      if (w + 1 == words.size() && n % 64 != 0) free &= (std::uint64_t{1} << (n % 64)) - 1;
      while (free != 0) {
        const auto i = static_cast<Index>(w * 64 + std::countr_zero(free));
        free &= free - 1;
        if (!fn(i)) return false;
      }
    }
    return true;
  }
};

// x - y for all index pairs, row-major by x.
std::vector<Index> difference_table(const AbelianGroup& g) {
  const std::size_t n = g.order();
  std::vector<Index> sub(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) sub[x * n + y] = g.sub_index(x, y);
  return sub;
}

struct NodeBudgetExhausted {};

// Assigns f(x) for x = start, start + 1, ... in index order, keeping the
// used images and the used differences x - f(x) in two masks.
template <typename Mask>
class Backtracker {
 public:
  Backtracker(const std::vector<Index>& sub, std::size_t n, std::uint64_t max_nodes = 0)
      : sub_(sub), n_(n), images_(n), diffs_(n), assignment_(n, 0), max_nodes_(max_nodes) {}

  bool place(Index x, Index y) {
    const Index d = sub_[x * n_ + y];
    if (images_.test(y) || diffs_.test(d)) return false;
    images_.set(y);
    diffs_.set(d);
    assignment_[x] = y;
    return true;
  }

  void unplace(Index x) {
    const Index y = assignment_[x];
    images_.reset(y);
    diffs_.reset(sub_[x * n_ + y]);
  }

  /// Calls on_leaf(assignment) for each completion; stops when it returns false.
  template <typename OnLeaf>
  bool extend(Index x, OnLeaf& on_leaf) {
    if (max_nodes_ != 0 && ++nodes_ > max_nodes_) throw NodeBudgetExhausted{};
    if (x == n_) return on_leaf(assignment_);
    const Index* row = &sub_[x * n_];
    return images_.for_each_clear(n_, [&](Index y) {
      const Index d = row[y];
      if (diffs_.test(d)) return true;
      images_.set(y);
      diffs_.set(d);
      assignment_[x] = y;
      const bool keep_going = extend(x + 1, on_leaf);
      images_.reset(y);
      diffs_.reset(d);
      return keep_going;
    });
  }

  std::uint64_t count_from(Index x) {
    std::uint64_t total = 0;
    auto leaf = [&](const std::vector<Index>&) {
      ++total;
      return true;
    };
    extend(x, leaf);
    return total;
  }

 private:
  const std::vector<Index>& sub_;
  std::size_t n_;
  Mask images_;
  Mask diffs_;
  std::vector<Index> assignment_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
};

void require_order(const AbelianGroup& g, std::uint64_t cap, const char* what) {
  if (g.order() > cap)
    throw Error(ErrorKind::BudgetExceeded, std::string(what) + ": group order " +
                                               std::to_string(g.order()) + " exceeds budget " +
                                               std::to_string(cap));
}

// Counts completions after fixing `prefix` (f(i) = prefix[i]), fanning out
// over the choices for the next element. Branch results are summed in
// branch order, so the total does not depend on the worker count.
template <typename Mask>
std::uint64_t count_with_prefix(const AbelianGroup& g, const std::vector<Index>& prefix,
                                unsigned jobs) {
  const std::size_t n = g.order();
  const auto sub = difference_table(g);

  Backtracker<Mask> root(sub, n);
  for (Index x = 0; x < prefix.size(); ++x)
    if (!root.place(x, prefix[x])) return 0;
  const auto branch_x = static_cast<Index>(prefix.size());
  if (branch_x == n) return 1;

  std::vector<Index> branches;
  for (Index y = 0; y < n; ++y) {
    if (root.place(branch_x, y)) {
      branches.push_back(y);
      root.unplace(branch_x);
    }
  }

  std::vector<std::uint64_t> results(branches.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b = next++; b < branches.size(); b = next++) {
      Backtracker<Mask> bt(sub, n);
      for (Index x = 0; x < prefix.size(); ++x) bt.place(x, prefix[x]);
      bt.place(branch_x, branches[b]);
      results[b] = bt.count_from(branch_x + 1);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, branches.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::uint64_t total = 0;
  for (auto r : results) total = checked_add(total, r);
  return total;
}

std::uint64_t count_prefix_dispatch(const AbelianGroup& g, const std::vector<Index>& prefix,
                                    unsigned jobs) {
  if (g.order() <= 64) return count_with_prefix<WordMask>(g, prefix, jobs);
  return count_with_prefix<WideMask>(g, prefix, jobs);
}

template <typename Mask>
void enumerate_impl(const AbelianGroup& g, const std::function<bool(const TableMap&)>& visit,
                    std::uint64_t max_solutions) {
  const auto sub = difference_table(g);
  Backtracker<Mask> bt(sub, g.order());
  std::uint64_t emitted = 0;
  auto leaf = [&](const std::vector<Index>& assignment) {
    ++emitted;
    if (!visit(TableMap(g, assignment))) return false;
    return max_solutions == 0 || emitted < max_solutions;
  };
  bt.extend(0, leaf);
}

template <typename Mask>
std::optional<TableMap> first_solution(const AbelianGroup& g, std::uint64_t max_nodes) {
  const auto sub = difference_table(g);
  Backtracker<Mask> bt(sub, g.order(), max_nodes);
  std::optional<TableMap> found;
  auto leaf = [&](const std::vector<Index>& assignment) {
    found.emplace(g, assignment);
    return false;
  };
  // A solution exists iff one with f(0) = 0 exists (translate by -f(0)),
  // and the lexicographically first solution overall starts with f(0) = 0.
  bt.place(0, 0);
  try {
    bt.extend(1, leaf);
  } catch (const NodeBudgetExhausted&) {
    throw Error(ErrorKind::BudgetExceeded, "existence search exceeded its node budget");
  }
  return found;
}

}  // namespace

std::uint64_t count_antiautomorphisms(const AbelianGroup& g, const SearchBudget& budget) {
  require_order(g, budget.max_group_order, "count");
  const std::uint64_t normalized = count_prefix_dispatch(g, {0}, budget.jobs);
  return checked_mul(normalized, g.order());
}

std::uint64_t count_antiautomorphisms_unreduced(const AbelianGroup& g,
                                                const SearchBudget& budget) {
  require_order(g, budget.max_group_order, "count");
  return count_prefix_dispatch(g, {}, budget.jobs);
}

void for_each_antiautomorphism(const AbelianGroup& g,
                               const std::function<bool(const TableMap&)>& visit,
                               const SearchBudget& budget) {
  require_order(g, budget.max_group_order, "enumerate");
  if (g.order() <= 64)
    enumerate_impl<WordMask>(g, visit, budget.max_solutions);
  else
    enumerate_impl<WideMask>(g, visit, budget.max_solutions);
}

std::vector<TableMap> enumerate_antiautomorphisms(const AbelianGroup& g,
                                                  const SearchBudget& budget) {
  std::vector<TableMap> out;
  for_each_antiautomorphism(g, [&](const TableMap& f) { out.push_back(f); return true; }, budget);
  return out;
}

std::optional<TableMap> exists_antiautomorphism_search(const AbelianGroup& g,
                                                       const SearchBudget& budget) {
  require_order(g, budget.max_existence_order, "existence search");
  if (g.order() <= 64) return first_solution<WordMask>(g, budget.max_nodes);
  return first_solution<WideMask>(g, budget.max_nodes);
}

std::uint64_t count_biantiautomorphisms_bruteforce(const AbelianGroup& g,
                                                   const EnumerationBudget& budget) {
  std::uint64_t count = 0;
  for_each_automorphism(
      g,
      [&](const TableMap& f) {
        if (is_antimorphism(f)) ++count;
        return true;
      },
      budget);
  return count;
}

namespace {

void require_odd(std::uint64_t n) {
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorKind::EvenInput, "expected an odd integer >= 3, got " + std::to_string(n));
}

void require_odd_prime(std::uint64_t p) {
  if (p == 2 || !is_prime(p))
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not an odd prime");
}

}  // namespace

std::uint64_t biantiauto_count_formula(std::uint64_t n) {
  require_odd(n);
  std::uint64_t result = 1;
  for (const auto& [p, alpha] : factorize(n))
    result = checked_mul(result, checked_mul(ipow(p, alpha - 1), p - 2));
  return result;
}

std::uint64_t antiauto_lower_bound(std::uint64_t n) {
  require_odd(n);
  std::uint64_t result = 1;
  for (const auto& [p, alpha] : factorize(n)) {
    const std::uint64_t q = ipow(p, 2 * alpha - 1);
    result = checked_mul(result, checked_mul(q, p) - 2 * q);
  }
  return result;
}

std::uint64_t subfactorial(unsigned k) {
  std::uint64_t prev2 = 1, prev1 = 0;  // !0, !1
  if (k == 0) return prev2;
  for (unsigned i = 2; i <= k; ++i) {
    const std::uint64_t next = checked_mul(i - 1, checked_add(prev1, prev2));
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

std::uint64_t antiauto_upper_bound_prime(std::uint64_t p) {
  require_odd_prime(p);
  return checked_mul(subfactorial(static_cast<unsigned>(p - 1)), p);
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "euler_phi needs n >= 1");
  std::uint64_t result = n;
  for (const auto& [p, alpha] : factorize(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t count_valid_multipliers_closed_form(std::uint64_t p, unsigned alpha) {
  require_odd_prime(p);
  if (alpha < 1) throw Error(ErrorKind::InvalidArgument, "exponent must be at least 1");
  const std::uint64_t lower = ipow(p, alpha - 1);
  return checked_mul(lower, p) - 2 * lower;
}

std::uint64_t count_valid_multipliers_scan(std::uint64_t p, unsigned alpha) {
  require_odd_prime(p);
  if (alpha < 1) throw Error(ErrorKind::InvalidArgument, "exponent must be at least 1");
  const std::uint64_t q = ipow(p, alpha);
  std::uint64_t count = 0;
  for (std::uint64_t a = 2; a < q; ++a)
    if (std::gcd(a, q) == 1 && std::gcd(a - 1, q) == 1) ++count;
  return count;
}

std::uint64_t count_valid_multipliers(std::uint64_t p, unsigned alpha) {
  const auto closed = count_valid_multipliers_closed_form(p, alpha);
  const auto scanned = count_valid_multipliers_scan(p, alpha);
  if (closed != scanned)
    throw std::logic_error("valid multiplier count: closed form " + std::to_string(closed) +
                           " differs from scan " + std::to_string(scanned));
  return closed;
}

bool verify_no_prime_order_fpf_automorphism(const AbelianGroup& g,
                                            const EnumerationBudget& budget) {
  bool none = true;
  for_each_automorphism(
      g,
      [&](const TableMap& f) {
        if (is_fixed_point_free(f) && is_prime(map_order(f))) none = false;
        return none;
      },
      budget);
  return none;
}

}  // namespace antiauto
