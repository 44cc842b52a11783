#include "antiauto/linear.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "antiauto/error.hpp"
#include "antiauto/number_theory.hpp"

namespace antiauto {

namespace {

using Wide = __int128;

std::int64_t reduce(std::int64_t v, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  std::int64_t r = v % sm;
  return r < 0 ? r + sm : r;
}

Wide wide_mul(Wide a, Wide b) {
  Wide r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "determinant exceeds 128-bit range");
  return r;
}

Wide wide_sub(Wide a, Wide b) {
  Wide r = 0;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "determinant exceeds 128-bit range");
  return r;
}

Wide bareiss_determinant(std::vector<std::vector<Wide>> m) {
  const std::size_t n = m.size();
  Wide prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = wide_sub(wide_mul(m[k][k], m[i][j]), wide_mul(m[i][k], m[k][j])) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_unit(std::uint64_t r, std::uint64_t m) { return std::gcd(r, m) == 1; }

// Remainder of a modulo b over Z_2[t].
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = 63 - std::countl_zero(b);
  while (a != 0) {
    const int da = 63 - std::countl_zero(a);
    if (da < db) break;
    a ^= b << (da - db);
  }
  return a;
}

}  // namespace

ResidueMatrix::ResidueMatrix(std::uint64_t modulus, std::vector<std::vector<std::int64_t>> rows)
    : modulus_(modulus), rows_(std::move(rows)) {
  if (modulus_ < 2) throw Error(ErrorKind::ModulusTooSmall, "matrix modulus below 2");
  if (rows_.empty()) throw Error(ErrorKind::DimensionMismatch, "empty matrix");
  for (auto& row : rows_) {
    if (row.size() != rows_.size())
      throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
    for (auto& v : row) v = reduce(v, modulus_);
  }
}

ResidueMatrix ResidueMatrix::identity(std::uint64_t modulus, std::size_t n) {
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return ResidueMatrix(modulus, std::move(rows));
}

AbelianGroup ResidueMatrix::group() const {
  return AbelianGroup(std::vector<std::uint64_t>(dim(), modulus_));
}

ResidueMatrix ResidueMatrix::minus_identity() const {
  auto rows = rows_;
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i][i] -= 1;
  return ResidueMatrix(modulus_, std::move(rows));
}

ResidueMatrix ResidueMatrix::reduce_mod(std::uint64_t m) const {
  if (m < 2 || modulus_ % m != 0)
    throw Error(ErrorKind::InvalidArgument, "reduction modulus must divide the matrix modulus");
  return ResidueMatrix(m, rows_);
}

BinaryPolynomial::BinaryPolynomial(std::vector<int> coefficients_constant_first) : bits_(0) {
  if (coefficients_constant_first.size() < 2 || coefficients_constant_first.size() > 64)
    throw Error(ErrorKind::InvalidArgument, "polynomial degree must be between 1 and 63");
  for (std::size_t i = 0; i < coefficients_constant_first.size(); ++i) {
    const int c = coefficients_constant_first[i];
    if (c != 0 && c != 1)
      throw Error(ErrorKind::InvalidArgument, "coefficients over Z_2 must be 0 or 1");
    if (c == 1) bits_ |= std::uint64_t{1} << i;
  }
  if (coefficients_constant_first.back() != 1)
    throw Error(ErrorKind::InvalidArgument, "polynomial must be monic");
}

BinaryPolynomial BinaryPolynomial::from_bits(std::uint64_t bits) {
  if (bits < 2) throw Error(ErrorKind::InvalidArgument, "polynomial degree must be at least 1");
  return BinaryPolynomial(FromBits{}, bits);
}

unsigned BinaryPolynomial::degree() const noexcept {
  return static_cast<unsigned>(63 - std::countl_zero(bits_));
}

std::vector<int> BinaryPolynomial::coefficients() const {
  std::vector<int> out(degree() + 1);
  for (unsigned i = 0; i <= degree(); ++i) out[i] = coefficient(i);
  return out;
}

bool is_irreducible(const BinaryPolynomial& f) {
  const unsigned n = f.degree();
  for (unsigned d = 1; d <= n / 2; ++d) {
    const std::uint64_t lo = std::uint64_t{1} << d;
    for (std::uint64_t g = lo; g < (lo << 1); ++g)
      if (poly_mod(f.bits(), g) == 0) return false;
  }
  return true;
}

BinaryPolynomial irreducible_poly_z2(unsigned n) {
  if (n < 1 || n > 63) throw Error(ErrorKind::InvalidArgument, "degree must be between 1 and 63");
  const std::uint64_t lead = std::uint64_t{1} << n;
  for (std::uint64_t low = 0; low < lead; ++low) {
    auto f = BinaryPolynomial::from_bits(lead | low);
    if (is_irreducible(f)) return f;
  }
  throw Error(ErrorKind::NotIrreducible, "no irreducible polynomial found");  // unreachable
}

ResidueMatrix companion_matrix(const BinaryPolynomial& f, std::uint64_t m) {
  if (m < 2 || !std::has_single_bit(m))
    throw Error(ErrorKind::InvalidArgument, "companion modulus must be a power of two");
  if (!is_irreducible(f))
    throw Error(ErrorKind::NotIrreducible, "polynomial is reducible over Z_2");
  const std::size_t n = f.degree();
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 1; i < n; ++i) rows[i][i - 1] = 1;
  for (std::size_t i = 0; i < n; ++i) rows[i][n - 1] = f.coefficient(static_cast<unsigned>(i));
  return ResidueMatrix(m, std::move(rows));
}

TableMap matrix_to_map(const ResidueMatrix& a) {
  const AbelianGroup g = a.group();
  require_table_size(g);
  const std::size_t n = a.dim();
  const auto m = static_cast<std::int64_t>(a.modulus());
  return tabulate_map(g, [&](const GroupElement& x) {
    std::vector<std::int64_t> y(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      Wide acc = 0;
      for (std::size_t c = 0; c < n; ++c) acc += static_cast<Wide>(a.at(r, c)) * x[c];
      y[r] = static_cast<std::int64_t>(acc % m);
    }
    return GroupElement(std::move(y));
  });
}

TableMap matrix_to_map(const AbelianGroup& g, const ResidueMatrix& a) {
  if (!g.is_homogeneous() || g.rank() != a.dim() || g.modulus(0) != a.modulus())
    throw Error(ErrorKind::NonHomogeneousGroup,
                "matrix over Z_" + std::to_string(a.modulus()) + " of size " +
                    std::to_string(a.dim()) + " does not act on this group");
  return matrix_to_map(a);
}

TableMap multiplication_map(const AbelianGroup& g, std::uint64_t a) {
  if (!g.is_cyclic_form())
    throw Error(ErrorKind::NotCyclic, "multiplication maps need a single-modulus group");
  const std::uint64_t n = g.order();
  if (a >= n) throw Error(ErrorKind::InvalidArgument, "multiplier must lie in [0, n)");
  require_table_size(g);
  std::vector<Index> t(n);
  for (std::uint64_t x = 0; x < n; ++x)
    t[x] = static_cast<Index>(static_cast<unsigned __int128>(a) * x % n);
  return TableMap(g, std::move(t));
}

std::uint64_t det_mod(const ResidueMatrix& a) {
  std::vector<std::vector<Wide>> m(a.dim(), std::vector<Wide>(a.dim()));
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) m[r][c] = a.at(r, c);
  const Wide det = bareiss_determinant(std::move(m));
  const auto mod = static_cast<Wide>(a.modulus());
  Wide r = det % mod;
  if (r < 0) r += mod;
  return static_cast<std::uint64_t>(r);
}

bool is_invertible(const ResidueMatrix& a) { return is_unit(det_mod(a), a.modulus()); }

bool has_no_eigenvalue_one(const ResidueMatrix& a) {
  return is_unit(det_mod(a.minus_identity()), a.modulus());
}

namespace {

// Elements y with d * y = 0, ascending by index.
std::vector<Index> elements_killed_by(const AbelianGroup& g, std::uint64_t d) {
  std::vector<Index> out;
  for (std::uint64_t i = 0; i < g.order(); ++i)
    if (d % element_order(g, index_element(g, i)) == 0) out.push_back(static_cast<Index>(i));
  return out;
}

}  // namespace

std::uint64_t count_endomorphisms(const AbelianGroup& g) {
  // |{y : d*y = 0}| = prod_j gcd(d, d_j)
  std::uint64_t total = 1;
  for (auto d : g.moduli())
    for (auto dj : g.moduli()) total = checked_mul(total, std::gcd(d, dj));
  return total;
}

void for_each_endomorphism(const AbelianGroup& g, const std::function<bool(const TableMap&)>& visit,
                           const EnumerationBudget& budget) {
  if (g.order() > budget.max_group_order)
    throw Error(ErrorKind::BudgetExceeded, "group order " + std::to_string(g.order()) +
                                               " exceeds enumeration budget");
  const std::uint64_t total = count_endomorphisms(g);
  if (total > budget.max_maps)
    throw Error(ErrorKind::BudgetExceeded, std::to_string(total) +
                                               " endomorphisms exceed enumeration budget");
  const std::size_t k = g.rank();
  std::vector<std::vector<Index>> choices(k);
  for (std::size_t i = 0; i < k; ++i) choices[i] = elements_killed_by(g, g.modulus(i));

  std::vector<std::vector<std::int64_t>> coords(g.order());
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    auto e = index_element(g, i);
    coords[i].assign(e.coords().begin(), e.coords().end());
  }

  std::vector<std::size_t> pick(k, 0);
  std::vector<std::vector<Index>> multiples(k);
  std::vector<Index> table(g.order());
  while (true) {
    for (std::size_t i = 0; i < k; ++i) {
      const Index y = choices[i][pick[i]];
      auto& mult = multiples[i];
      mult.assign(g.modulus(i), 0);
      for (std::size_t c = 1; c < mult.size(); ++c) mult[c] = g.add_index(mult[c - 1], y);
    }
    for (std::uint64_t x = 0; x < g.order(); ++x) {
      Index acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc = g.add_index(acc, multiples[i][coords[x][i]]);
      table[x] = acc;
    }
    if (!visit(TableMap(g, table))) return;

    std::size_t i = k;
    while (true) {
      if (i == 0) return;
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
  }
}

void for_each_automorphism(const AbelianGroup& g, const std::function<bool(const TableMap&)>& visit,
                           const EnumerationBudget& budget) {
  for_each_endomorphism(
      g, [&](const TableMap& f) { return is_bijection(f) ? visit(f) : true; }, budget);
}

std::vector<TableMap> enumerate_endomorphisms(const AbelianGroup& g,
                                              const EnumerationBudget& budget) {
  std::vector<TableMap> out;
  for_each_endomorphism(g, [&](const TableMap& f) { out.push_back(f); return true; }, budget);
  return out;
}

std::vector<TableMap> enumerate_automorphisms(const AbelianGroup& g,
                                              const EnumerationBudget& budget) {
  std::vector<TableMap> out;
  for_each_automorphism(g, [&](const TableMap& f) { out.push_back(f); return true; }, budget);
  return out;
}

}  // namespace antiauto
