#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "antiauto/group.hpp"

namespace antiauto {

/// A total function G -> G stored densely: entry i is the index of the image
/// of index_element(i). Bijectivity is not required; the predicates below
/// test for it.
class TableMap {
 public:
  /// Throws InvalidArgument when the table length or any entry is out of range.
  TableMap(AbelianGroup group, std::vector<Index> table);

  const AbelianGroup& group() const noexcept { return group_; }
  std::span<const Index> table() const noexcept { return table_; }
  std::uint64_t size() const noexcept { return table_.size(); }
  Index operator[](Index i) const { return table_[i]; }

  GroupElement apply(const GroupElement& x) const;

  friend bool operator==(const TableMap&, const TableMap&) = default;

 private:
  AbelianGroup group_;
  std::vector<Index> table_;
};

/// Tabulates `fn` (GroupElement -> GroupElement) over the whole group.
template <typename Fn>
TableMap tabulate_map(const AbelianGroup& g, Fn&& fn);

TableMap identity_map(const AbelianGroup& g);
TableMap negation_map(const AbelianGroup& g);
TableMap constant_map(const AbelianGroup& g, const GroupElement& value);

/// Builds a map from explicit (x, f(x)) pairs; every element must appear once.
TableMap map_from_pairs(const AbelianGroup& g,
                        std::span<const std::pair<GroupElement, GroupElement>> pairs);

bool is_bijection(const TableMap& f);

/// x -> x - f(x)
TableMap difference_map(const TableMap& f);

/// id - f is injective.
bool is_antimorphism(const TableMap& f);
/// f is a bijection and an antimorphism.
bool is_antiautomorphism(const TableMap& f);

/// f(0) = 0 and f(x + y) = f(x) + f(y) for all x, y.
///
/// Checked as f(x + e_i) = f(x) + f(e_i) for every x and every standard
/// generator e_i, which together with f(0) = 0 is equivalent to additivity
/// on all pairs and costs O(n * rank) instead of O(n^2).
bool is_linear(const TableMap& f);

/// No nonzero fixed point; the value at 0 is ignored.
bool is_fixed_point_free(const TableMap& f);

/// Block-wise map on the direct sum of the component groups.
TableMap direct_sum_map(std::span<const TableMap> fs);

/// x -> f(x) + b
TableMap translate_map(const TableMap& f, const GroupElement& b);

/// x -> f(g(x))
TableMap compose(const TableMap& f, const TableMap& g);

/// Least m >= 1 with f^m = id; throws NotBijective.
std::uint64_t map_order(const TableMap& f);

/// Carries a map on iso.target back to iso.source: x -> iso^{-1}(f(iso(x))).
TableMap transport(const TableMap& f_on_target, const GroupIsomorphism& iso);

/// Throws BudgetExceeded when G is too large for a dense table.
void require_table_size(const AbelianGroup& g, std::uint64_t cap = kMaxTableOrder);

// ---------------------------------------------------------------------------

template <typename Fn>
TableMap tabulate_map(const AbelianGroup& g, Fn&& fn) {
  require_table_size(g);
  std::vector<Index> table(g.order());
  for (std::uint64_t i = 0; i < g.order(); ++i)
    table[i] = static_cast<Index>(element_index(g, fn(index_element(g, i))));
  return TableMap(g, std::move(table));
}

}  // namespace antiauto
