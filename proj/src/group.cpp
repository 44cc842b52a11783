#include "antiauto/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "antiauto/error.hpp"
#include "antiauto/number_theory.hpp"

namespace antiauto {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;

void require_member(const AbelianGroup& g, const GroupElement& x) {
  if (x.size() != g.rank())
    throw Error(ErrorKind::DimensionMismatch,
                "element has " + std::to_string(x.size()) + " coordinates, group has rank " +
                    std::to_string(g.rank()));
  if (!contains(g, x))
    throw Error(ErrorKind::InvalidArgument, "element coordinates are not reduced");
}

void require_enumerable(const AbelianGroup& g, std::uint64_t cap) {
  if (g.order() > cap)
    throw Error(ErrorKind::BudgetExceeded, "group order " + std::to_string(g.order()) +
                                               " exceeds enumeration cap " + std::to_string(cap));
}

std::int64_t reduce(std::int64_t v, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  std::int64_t r = v % sm;
  return r < 0 ? r + sm : r;
}

// Partitions of e as descending part lists, reverse lexicographic order.
void partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw Error(ErrorKind::EmptyModuli, "group needs at least one modulus");
  for (auto d : moduli_) {
    if (d < 2)
      throw Error(ErrorKind::ModulusTooSmall, "modulus " + std::to_string(d) + " is below 2");
    order_ = checked_mul(order_, d);
    if (order_ > kMaxOrder) throw Error(ErrorKind::Overflow, "group order too large");
  }
}

bool AbelianGroup::is_homogeneous() const noexcept {
  return std::all_of(moduli_.begin(), moduli_.end(),
                     [&](std::uint64_t d) { return d == moduli_.front(); });
}

Index AbelianGroup::add_index(Index a, Index b) const {
  std::uint64_t r = 0, mul = 1;
  std::uint64_t x = a, y = b;
  for (auto it = moduli_.rbegin(); it != moduli_.rend(); ++it) {
    const std::uint64_t d = *it;
    std::uint64_t s = x % d + y % d;
    if (s >= d) s -= d;
    r += s * mul;
    mul *= d;
    x /= d;
    y /= d;
  }
  return static_cast<Index>(r);
}

Index AbelianGroup::sub_index(Index a, Index b) const {
  std::uint64_t r = 0, mul = 1;
  std::uint64_t x = a, y = b;
  for (auto it = moduli_.rbegin(); it != moduli_.rend(); ++it) {
    const std::uint64_t d = *it;
    const std::uint64_t s = (x % d + d - y % d) % d;
    r += s * mul;
    mul *= d;
    x /= d;
    y /= d;
  }
  return static_cast<Index>(r);
}

Index AbelianGroup::neg_index(Index a) const { return sub_index(0, a); }

AbelianGroup make_group(std::vector<std::uint64_t> moduli) {
  return AbelianGroup(std::move(moduli));
}

GroupElement make_element(const AbelianGroup& g, std::vector<std::int64_t> coords) {
  if (coords.size() != g.rank())
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(g.rank()) + " coordinates, got " +
                    std::to_string(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = reduce(coords[i], g.modulus(i));
  return GroupElement(std::move(coords));
}

bool contains(const AbelianGroup& g, const GroupElement& x) noexcept {
  if (x.size() != g.rank()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || static_cast<std::uint64_t>(x[i]) >= g.modulus(i)) return false;
  return true;
}

GroupElement zero(const AbelianGroup& g) {
  return GroupElement(std::vector<std::int64_t>(g.rank(), 0));
}

GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
  require_member(g, a);
  require_member(g, b);
  std::vector<std::int64_t> out(g.rank());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = reduce(a[i] + b[i], g.modulus(i));
  return GroupElement(std::move(out));
}

GroupElement sub(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
  require_member(g, a);
  require_member(g, b);
  std::vector<std::int64_t> out(g.rank());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = reduce(a[i] - b[i], g.modulus(i));
  return GroupElement(std::move(out));
}

GroupElement neg(const AbelianGroup& g, const GroupElement& a) { return sub(g, zero(g), a); }

GroupElement scale(const AbelianGroup& g, std::int64_t k, const GroupElement& a) {
  require_member(g, a);
  std::vector<std::int64_t> out(g.rank());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto m = static_cast<std::int64_t>(g.modulus(i));
    out[i] = reduce(static_cast<std::int64_t>((static_cast<__int128>(reduce(k, g.modulus(i))) * a[i]) % m),
                    g.modulus(i));
  }
  return GroupElement(std::move(out));
}

std::uint64_t element_order(const AbelianGroup& g, const GroupElement& x) {
  require_member(g, x);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::uint64_t d = g.modulus(i);
    const std::uint64_t o = d / std::gcd(static_cast<std::uint64_t>(x[i]), d);
    result = std::lcm(result, o);
  }
  return result;
}

std::uint64_t count_involutions(const AbelianGroup& g) {
  std::uint64_t two_torsion = 1;
  for (auto d : g.moduli()) two_torsion *= std::gcd(d, std::uint64_t{2});
  return two_torsion - 1;
}

std::uint64_t count_involutions_exhaustive(const AbelianGroup& g, std::uint64_t cap) {
  require_enumerable(g, cap);
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < g.order(); ++i)
    if (element_order(g, index_element(g, i)) == 2) ++n;
  return n;
}

GroupElement group_sum(const AbelianGroup& g, std::uint64_t cap) {
  require_enumerable(g, cap);
  Index acc = 0;
  for (std::uint64_t i = 0; i < g.order(); ++i) acc = g.add_index(acc, static_cast<Index>(i));
  return index_element(g, acc);
}

std::uint64_t element_index(const AbelianGroup& g, const GroupElement& x) {
  require_member(g, x);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    idx = idx * g.modulus(i) + static_cast<std::uint64_t>(x[i]);
  return idx;
}

GroupElement index_element(const AbelianGroup& g, std::uint64_t i) {
  if (i >= g.order())
    throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) +
                                                " out of range for order " +
                                                std::to_string(g.order()));
  std::vector<std::int64_t> coords(g.rank());
  for (std::size_t k = g.rank(); k-- > 0;) {
    coords[k] = static_cast<std::int64_t>(i % g.modulus(k));
    i /= g.modulus(k);
  }
  return GroupElement(std::move(coords));
}

bool GroupIsomorphism::is_valid(std::uint64_t cap) const {
  const std::uint64_t n = source.order();
  if (target.order() != n || forward.size() != n || backward.size() != n) return false;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (forward[i] >= n || backward[i] >= n) return false;
    if (backward[forward[i]] != i || forward[backward[i]] != i) return false;
  }
  require_enumerable(source, cap);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (forward[source.add_index(a, b)] != target.add_index(forward[a], forward[b]))
        return false;
  return true;
}

namespace {

GroupIsomorphism tabulate(const AbelianGroup& source, AbelianGroup target,
                          std::uint64_t cap, auto&& image_of) {
  if (source.order() > cap)
    throw Error(ErrorKind::BudgetExceeded, "isomorphism table exceeds cap");
  GroupIsomorphism iso{source, std::move(target), {}, {}};
  const std::uint64_t n = source.order();
  iso.forward.resize(n);
  iso.backward.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto img = static_cast<Index>(element_index(iso.target, image_of(index_element(source, i))));
    iso.forward[i] = img;
    iso.backward[img] = static_cast<Index>(i);
  }
  return iso;
}

}  // namespace

GroupIsomorphism crt_decompose(const AbelianGroup& g, std::uint64_t cap) {
  std::vector<std::uint64_t> parts;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    for (const auto& [p, e] : factorize(g.modulus(i))) {
      parts.push_back(ipow(p, e));
      owner.push_back(i);
    }
  }
  AbelianGroup target(parts);
  return tabulate(g, std::move(target), cap, [&](const GroupElement& x) {
    std::vector<std::int64_t> y(parts.size());
    for (std::size_t j = 0; j < parts.size(); ++j)
      y[j] = x[owner[j]] % static_cast<std::int64_t>(parts[j]);
    return GroupElement(std::move(y));
  });
}

GroupIsomorphism permute_coordinates(const AbelianGroup& g, std::span<const std::size_t> perm,
                                     std::uint64_t cap) {
  if (perm.size() != g.rank())
    throw Error(ErrorKind::DimensionMismatch, "permutation length differs from group rank");
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::uint64_t> moduli(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (perm[j] >= perm.size() || seen[perm[j]])
      throw Error(ErrorKind::InvalidArgument, "not a permutation of the coordinates");
    seen[perm[j]] = true;
    moduli[j] = g.modulus(perm[j]);
  }
  return tabulate(g, AbelianGroup(moduli), cap, [&](const GroupElement& x) {
    std::vector<std::int64_t> y(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) y[j] = x[perm[j]];
    return GroupElement(std::move(y));
  });
}

GroupIsomorphism compose(const GroupIsomorphism& first, const GroupIsomorphism& second) {
  if (!(first.target == second.source))
    throw Error(ErrorKind::DimensionMismatch, "isomorphisms do not compose");
  GroupIsomorphism out{first.source, second.target, {}, {}};
  out.forward.resize(first.forward.size());
  out.backward.resize(first.forward.size());
  for (std::size_t i = 0; i < first.forward.size(); ++i) {
    out.forward[i] = second.forward[first.forward[i]];
    out.backward[out.forward[i]] = static_cast<Index>(i);
  }
  return out;
}

std::vector<AbelianGroup> abelian_groups_of_order(std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "order must be at least 2");
  // Per prime: list of modulus lists (ascending prime powers).
  std::vector<std::vector<std::vector<std::uint64_t>>> per_prime;
  for (const auto& [p, e] : factorize(n)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    auto& choices = per_prime.emplace_back();
    for (auto& part : parts) {
      std::vector<std::uint64_t> mods;
      for (auto it = part.rbegin(); it != part.rend(); ++it) mods.push_back(ipow(p, *it));
      choices.push_back(std::move(mods));
    }
  }
  std::vector<AbelianGroup> out;
  std::vector<std::size_t> pick(per_prime.size(), 0);
  while (true) {
    std::vector<std::uint64_t> moduli;
    for (std::size_t k = 0; k < per_prime.size(); ++k)
      moduli.insert(moduli.end(), per_prime[k][pick[k]].begin(), per_prime[k][pick[k]].end());
    out.emplace_back(std::move(moduli));
    std::size_t k = per_prime.size();
    while (k > 0) {
      --k;
      if (++pick[k] < per_prime[k].size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
    if (per_prime.empty()) return out;
  }
}

}  // namespace antiauto
