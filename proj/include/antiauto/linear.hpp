#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "antiauto/group.hpp"
#include "antiauto/table_map.hpp"

namespace antiauto {

/// Square matrix over Z_m acting on the homogeneous group Z_m^n by x -> Ax.
class ResidueMatrix {
 public:
  /// Entries are reduced into [0, m). Throws DimensionMismatch for non-square
  /// input and ModulusTooSmall for m < 2.
  ResidueMatrix(std::uint64_t modulus, std::vector<std::vector<std::int64_t>> rows);

  static ResidueMatrix identity(std::uint64_t modulus, std::size_t n);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  std::int64_t at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }

  /// The group Z_m^n this matrix acts on.
  AbelianGroup group() const;

  /// A - I
  ResidueMatrix minus_identity() const;
  /// Entrywise reduction to a smaller modulus that divides m.
  ResidueMatrix reduce_mod(std::uint64_t m) const;

  friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;

 private:
  std::uint64_t modulus_;
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Monic polynomial over Z_2, bit i holding the coefficient of t^i.
class BinaryPolynomial {
 public:
  /// Throws InvalidArgument when the coefficient list is not monic of degree >= 1
  /// (or exceeds degree 63).
  explicit BinaryPolynomial(std::vector<int> coefficients_constant_first);
  static BinaryPolynomial from_bits(std::uint64_t bits);

  unsigned degree() const noexcept;
  std::uint64_t bits() const noexcept { return bits_; }
  int coefficient(unsigned i) const noexcept { return static_cast<int>((bits_ >> i) & 1u); }
  std::vector<int> coefficients() const;

  friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

 private:
  struct FromBits {};
  BinaryPolynomial(FromBits, std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_;
};

/// Trial division by every polynomial of degree 1..deg/2.
bool is_irreducible(const BinaryPolynomial& f);

/// The irreducible monic polynomial of degree n whose coefficient vector is
/// smallest when read from the leading term down (equivalently, the smallest
/// bit encoding). Gives t^2+t+1, t^3+t+1, t^4+t+1, ...
BinaryPolynomial irreducible_poly_z2(unsigned n);

/// Frobenius companion matrix of f with 0/1 entries: ones on the
/// subdiagonal, coefficients c_0..c_{n-1} in the last column. Interpreted
/// modulo m, which must be a power of two. Throws NotIrreducible.
ResidueMatrix companion_matrix(const BinaryPolynomial& f, std::uint64_t m);

/// x -> Ax on Z_m^n, the group the matrix acts on.
TableMap matrix_to_map(const ResidueMatrix& a);
/// Same, on a caller-supplied group. Throws NonHomogeneousGroup if g is not
/// Z_m^n for the matrix's m and n.
TableMap matrix_to_map(const AbelianGroup& g, const ResidueMatrix& a);

/// t -> a t on a single-modulus group. Throws NotCyclic.
TableMap multiplication_map(const AbelianGroup& g, std::uint64_t a);

/// Determinant via fraction-free (Bareiss) elimination over the integers,
/// then reduced mod m.
std::uint64_t det_mod(const ResidueMatrix& a);
bool is_invertible(const ResidueMatrix& a);
/// det(A - I) is a unit mod m.
bool has_no_eigenvalue_one(const ResidueMatrix& a);

/// Limits for the endomorphism enumerations.
struct EnumerationBudget {
  std::uint64_t max_group_order = kDefaultEnumerationCap;
  std::uint64_t max_maps = std::uint64_t{1} << 20;
};

/// Number of endomorphisms, i.e. the product over generators of the number
/// of elements whose order divides that generator's modulus.
std::uint64_t count_endomorphisms(const AbelianGroup& g);

/// Visits every endomorphism in lexicographic order of generator image
/// indices. The visitor returns false to stop. Throws BudgetExceeded.
void for_each_endomorphism(const AbelianGroup& g, const std::function<bool(const TableMap&)>& visit,
                           const EnumerationBudget& budget = {});
/// Same, restricted to bijective endomorphisms.
void for_each_automorphism(const AbelianGroup& g, const std::function<bool(const TableMap&)>& visit,
                           const EnumerationBudget& budget = {});

std::vector<TableMap> enumerate_endomorphisms(const AbelianGroup& g,
                                              const EnumerationBudget& budget = {});
std::vector<TableMap> enumerate_automorphisms(const AbelianGroup& g,
                                              const EnumerationBudget& budget = {});

}  // namespace antiauto
