#include "antiauto/table_map.hpp"

#include <numeric>
#include <string>

#include "antiauto/error.hpp"
#include "antiauto/number_theory.hpp"

namespace antiauto {

namespace {

bool all_distinct(std::span<const Index> values, std::uint64_t n) {
  std::vector<bool> seen(n, false);
  for (Index v : values) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void require_same_group(const TableMap& f, const TableMap& g) {
  if (!(f.group() == g.group()))
    throw Error(ErrorKind::DimensionMismatch, "maps live on different groups");
}

}  // namespace

void require_table_size(const AbelianGroup& g, std::uint64_t cap) {
  if (g.order() > cap)
    throw Error(ErrorKind::BudgetExceeded, "group order " + std::to_string(g.order()) +
                                               " exceeds table cap " + std::to_string(cap));
}

TableMap::TableMap(AbelianGroup group, std::vector<Index> table)
    : group_(std::move(group)), table_(std::move(table)) {
  if (table_.size() != group_.order())
    throw Error(ErrorKind::InvalidArgument,
                "table length " + std::to_string(table_.size()) + " differs from group order " +
                    std::to_string(group_.order()));
  for (Index v : table_)
    if (v >= group_.order())
      throw Error(ErrorKind::InvalidArgument, "table entry " + std::to_string(v) + " out of range");
}

GroupElement TableMap::apply(const GroupElement& x) const {
  return index_element(group_, table_[element_index(group_, x)]);
}

TableMap identity_map(const AbelianGroup& g) {
  require_table_size(g);
  std::vector<Index> t(g.order());
  std::iota(t.begin(), t.end(), Index{0});
  return TableMap(g, std::move(t));
}

TableMap negation_map(const AbelianGroup& g) {
  require_table_size(g);
  std::vector<Index> t(g.order());
  for (std::uint64_t i = 0; i < g.order(); ++i) t[i] = g.neg_index(static_cast<Index>(i));
  return TableMap(g, std::move(t));
}

TableMap constant_map(const AbelianGroup& g, const GroupElement& value) {
  require_table_size(g);
  return TableMap(g, std::vector<Index>(g.order(), static_cast<Index>(element_index(g, value))));
}

TableMap map_from_pairs(const AbelianGroup& g,
                        std::span<const std::pair<GroupElement, GroupElement>> pairs) {
  require_table_size(g);
  if (pairs.size() != g.order())
    throw Error(ErrorKind::InvalidArgument, "pair listing must cover every element exactly once");
  std::vector<Index> t(g.order());
  std::vector<bool> seen(g.order(), false);
  for (const auto& [x, y] : pairs) {
    const auto i = element_index(g, x);
    if (seen[i]) throw Error(ErrorKind::InvalidArgument, "element listed twice");
    seen[i] = true;
    t[i] = static_cast<Index>(element_index(g, y));
  }
  return TableMap(g, std::move(t));
}

bool is_bijection(const TableMap& f) { return all_distinct(f.table(), f.size()); }

TableMap difference_map(const TableMap& f) {
  const auto& g = f.group();
  std::vector<Index> t(f.size());
  for (Index x = 0; x < f.size(); ++x) t[x] = g.sub_index(x, f[x]);
  return TableMap(g, std::move(t));
}

bool is_antimorphism(const TableMap& f) {
  const auto& g = f.group();
  std::vector<bool> seen(f.size(), false);
  for (Index x = 0; x < f.size(); ++x) {
    const Index d = g.sub_index(x, f[x]);
    if (seen[d]) return false;
    seen[d] = true;
  }
  return true;
}

bool is_antiautomorphism(const TableMap& f) { return is_bijection(f) && is_antimorphism(f); }

bool is_linear(const TableMap& f) {
  const auto& g = f.group();
  if (f[0] != 0) return false;
  std::vector<Index> generators;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::vector<std::int64_t> e(g.rank(), 0);
    e[i] = 1;
    generators.push_back(static_cast<Index>(element_index(g, GroupElement(std::move(e)))));
  }
  for (Index x = 0; x < f.size(); ++x)
    for (Index e : generators)
      if (f[g.add_index(x, e)] != g.add_index(f[x], f[e])) return false;
  return true;
}

bool is_fixed_point_free(const TableMap& f) {
  for (Index x = 1; x < f.size(); ++x)
    if (f[x] == x) return false;
  return true;
}

TableMap direct_sum_map(std::span<const TableMap> fs) {
  if (fs.empty()) throw Error(ErrorKind::InvalidArgument, "direct sum of no maps");
  std::vector<std::uint64_t> moduli;
  for (const auto& f : fs)
    moduli.insert(moduli.end(), f.group().moduli().begin(), f.group().moduli().end());
  AbelianGroup sum(moduli);
  require_table_size(sum);

  // With the last coordinate fastest, the index of a tuple of blocks is the
  // mixed-radix number whose digits are the block indices.
  std::vector<Index> t(sum.order());
  std::vector<Index> digits(fs.size(), 0);
  for (std::uint64_t i = 0; i < sum.order(); ++i) {
    std::uint64_t img = 0;
    for (std::size_t k = 0; k < fs.size(); ++k) img = img * fs[k].size() + fs[k][digits[k]];
    t[i] = static_cast<Index>(img);
    for (std::size_t k = fs.size(); k-- > 0;) {
      if (++digits[k] < fs[k].size()) break;
      digits[k] = 0;
    }
  }
  return TableMap(std::move(sum), std::move(t));
}

TableMap translate_map(const TableMap& f, const GroupElement& b) {
  const auto& g = f.group();
  const auto bi = static_cast<Index>(element_index(g, b));
  std::vector<Index> t(f.size());
  for (Index x = 0; x < f.size(); ++x) t[x] = g.add_index(f[x], bi);
  return TableMap(g, std::move(t));
}

TableMap compose(const TableMap& f, const TableMap& g) {
  require_same_group(f, g);
  std::vector<Index> t(f.size());
  for (Index x = 0; x < f.size(); ++x) t[x] = f[g[x]];
  return TableMap(f.group(), std::move(t));
}

std::uint64_t map_order(const TableMap& f) {
  if (!is_bijection(f)) throw Error(ErrorKind::NotBijective, "map_order needs a bijection");
  std::vector<bool> visited(f.size(), false);
  std::uint64_t order = 1;
  for (Index start = 0; start < f.size(); ++start) {
    if (visited[start]) continue;
    std::uint64_t len = 0;
    for (Index x = start; !visited[x]; x = f[x]) {
      visited[x] = true;
      ++len;
    }
    const std::uint64_t g = std::gcd(order, len);
    order = checked_mul(order / g, len);
  }
  return order;
}

TableMap transport(const TableMap& f_on_target, const GroupIsomorphism& iso) {
  if (!(f_on_target.group() == iso.target))
    throw Error(ErrorKind::DimensionMismatch, "map does not live on the isomorphism's target");
  std::vector<Index> t(iso.forward.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = iso.backward[f_on_target[iso.forward[x]]];
  return TableMap(iso.source, std::move(t));
}

}  // namespace antiauto
