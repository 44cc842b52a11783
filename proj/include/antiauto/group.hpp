#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace antiauto {

/// Element index under the mixed-radix convention (last coordinate fastest).
using Index = std::uint32_t;

/// Operations that walk the whole group (pairwise checks, sums over G,
/// isomorphism tables) refuse groups larger than this unless told otherwise.
inline constexpr std::uint64_t kDefaultEnumerationCap = 4096;

/// Largest group for which a dense map table is ever materialized.
inline constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 26;

class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> coords)
      : coords_(std::move(coords)) {}
  GroupElement(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::span<const std::int64_t> coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// The finite abelian group Z_{d1} + ... + Z_{dk}. The order of the summands
/// is part of the representation and is never normalized.
class AbelianGroup {
 public:
  /// Throws EmptyModuli, ModulusTooSmall, or Overflow.
  explicit AbelianGroup(std::vector<std::uint64_t> moduli);
  AbelianGroup(std::initializer_list<std::uint64_t> moduli)
      : AbelianGroup(std::vector<std::uint64_t>(moduli)) {}

  std::span<const std::uint64_t> moduli() const noexcept { return moduli_; }
  std::uint64_t modulus(std::size_t i) const { return moduli_[i]; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  std::uint64_t order() const noexcept { return order_; }

  bool is_cyclic_form() const noexcept { return moduli_.size() == 1; }
  /// True when every modulus is equal (Z_m^n).
  bool is_homogeneous() const noexcept;

  /// Index-level arithmetic, without building GroupElement objects.
  Index add_index(Index a, Index b) const;
  Index sub_index(Index a, Index b) const;
  Index neg_index(Index a) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.moduli_ == b.moduli_;
  }

 private:
  std::vector<std::uint64_t> moduli_;
  std::uint64_t order_ = 1;
};

AbelianGroup make_group(std::vector<std::uint64_t> moduli);

/// Brings arbitrary integers into range; throws DimensionMismatch.
GroupElement make_element(const AbelianGroup& g, std::vector<std::int64_t> coords);

GroupElement zero(const AbelianGroup& g);
GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement sub(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement neg(const AbelianGroup& g, const GroupElement& a);
GroupElement scale(const AbelianGroup& g, std::int64_t k, const GroupElement& a);
bool contains(const AbelianGroup& g, const GroupElement& x) noexcept;

/// lcm over coordinates of d_i / gcd(x_i, d_i).
std::uint64_t element_order(const AbelianGroup& g, const GroupElement& x);

/// Closed form prod(gcd(d_i, 2)) - 1.
std::uint64_t count_involutions(const AbelianGroup& g);
/// Exhaustive count; only used as a cross-check.
std::uint64_t count_involutions_exhaustive(const AbelianGroup& g,
                                           std::uint64_t cap = kDefaultEnumerationCap);

/// Sum of all group elements, computed by direct summation.
GroupElement group_sum(const AbelianGroup& g, std::uint64_t cap = kDefaultEnumerationCap);

std::uint64_t element_index(const AbelianGroup& g, const GroupElement& x);
GroupElement index_element(const AbelianGroup& g, std::uint64_t i);

/// Isomorphism between two groups, stored as a pair of index tables.
struct GroupIsomorphism {
  AbelianGroup source;
  AbelianGroup target;
  std::vector<Index> forward;
  std::vector<Index> backward;

  bool is_valid(std::uint64_t cap = kDefaultEnumerationCap) const;
};

/// Splits each modulus into prime-power parts (factor order, then primes
/// ascending) and tabulates the CRT isomorphism onto the split group.
GroupIsomorphism crt_decompose(const AbelianGroup& g,
                               std::uint64_t cap = kMaxTableOrder);

/// Isomorphism G -> H where H's j-th modulus is G's perm[j]-th.
GroupIsomorphism permute_coordinates(const AbelianGroup& g,
                                     std::span<const std::size_t> perm,
                                     std::uint64_t cap = kMaxTableOrder);

/// first: A -> B, second: B -> C; result A -> C.
GroupIsomorphism compose(const GroupIsomorphism& first, const GroupIsomorphism& second);

/// One representative per isomorphism class of abelian groups of order n,
/// in primary form: primes ascending, and for each prime the partitions of
/// its exponent in reverse lexicographic order (fewest parts first).
std::vector<AbelianGroup> abelian_groups_of_order(std::uint64_t n);

}  // namespace antiauto
