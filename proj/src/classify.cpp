#include "antiauto/classify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "antiauto/constructions.hpp"
#include "antiauto/error.hpp"
#include "antiauto/io.hpp"
#include "antiauto/linear.hpp"
#include "antiauto/number_theory.hpp"

namespace antiauto {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Exists: return "exists";
    case Status::NotExists: return "not-exists";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Negation: return "negation";
    case Method::Elementary2: return "elementary2";
    case Method::Companion2: return "companion2";
    case Method::ExplicitTableZ2Z4: return "explicit-table-Z2Z4";
    case Method::DirectSum: return "direct-sum";
    case Method::Search: return "search";
  }
  return "search";
}

std::string_view to_string(Reason r) noexcept {
  switch (r) {
    case Reason::UniqueInvolution: return "unique-involution";
    case Reason::SearchExhausted: return "search-exhausted";
  }
  return "search-exhausted";
}

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skip: return "skip";
  }
  return "fail";
}

std::size_t VerificationReport::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [&](const auto& l) { return l.outcome == o; }));
}

namespace {

ClassificationVerdict exists(TableMap witness, Method method, std::vector<Method> components = {}) {
  if (!is_antiautomorphism(witness))
    throw std::logic_error("classifier produced a witness that is not an antiautomorphism");
  ClassificationVerdict v;
  v.status = Status::Exists;
  v.witness = std::move(witness);
  v.method = method;
  v.components = std::move(components);
  return v;
}

ClassificationVerdict not_exists(Reason reason) {
  ClassificationVerdict v;
  v.status = Status::NotExists;
  v.reason = reason;
  return v;
}

ClassificationVerdict unknown(std::string note) {
  ClassificationVerdict v;
  v.status = Status::Unknown;
  v.budget_note = std::move(note);
  return v;
}

// G rearranged as (odd part) + (2-part), the 2-part's moduli ascending.
struct Split {
  GroupIsomorphism iso;  // G -> odd + two
  std::optional<AbelianGroup> odd;
  AbelianGroup two;
};

Split split_two_part(const AbelianGroup& g, std::uint64_t cap) {
  auto crt = crt_decompose(g, cap);
  const auto& h = crt.target;
  std::vector<std::size_t> odd_idx, two_idx;
  for (std::size_t i = 0; i < h.rank(); ++i) (h.modulus(i) % 2 == 0 ? two_idx : odd_idx).push_back(i);
  std::stable_sort(two_idx.begin(), two_idx.end(),
                   [&](std::size_t a, std::size_t b) { return h.modulus(a) < h.modulus(b); });

  std::vector<std::size_t> perm = odd_idx;
  perm.insert(perm.end(), two_idx.begin(), two_idx.end());
  auto iso = compose(crt, permute_coordinates(h, perm, cap));

  std::vector<std::uint64_t> odd_moduli, two_moduli;
  for (auto i : odd_idx) odd_moduli.push_back(h.modulus(i));
  for (auto i : two_idx) two_moduli.push_back(h.modulus(i));
  std::optional<AbelianGroup> odd;
  if (!odd_moduli.empty()) odd.emplace(odd_moduli);
  return Split{std::move(iso), std::move(odd), AbelianGroup(two_moduli)};
}

}  // namespace

ClassificationVerdict decide_antiautomorphism(const AbelianGroup& g, const SearchBudget& budget) {
  const auto involutions = count_involutions(g);
  if (involutions == 1) return not_exists(Reason::UniqueInvolution);
  if (g.order() > budget.max_table_order)
    return unknown("group order " + std::to_string(g.order()) + " exceeds the witness table cap " +
                   std::to_string(budget.max_table_order));
  if (involutions == 0) return exists(negation_map(g), Method::Negation);

  const auto split = split_two_part(g, budget.max_table_order);
  const auto& two = split.two;

  std::optional<TableMap> two_witness;
  Method two_method = Method::Search;
  if (two.is_homogeneous() && two.rank() >= 2) {
    const auto m = static_cast<unsigned>(std::countr_zero(two.modulus(0)));
    if (m == 1) {
      two_witness = elementary2_antiauto(static_cast<unsigned>(two.rank()));
      two_method = Method::Elementary2;
    } else {
      two_witness = homogeneous2_antiauto(m, static_cast<unsigned>(two.rank()),
                                          budget.max_table_order);
      two_method = Method::Companion2;
    }
  } else if (two == AbelianGroup{2, 4}) {
    two_witness = z2_z4_antiauto();
    two_method = Method::ExplicitTableZ2Z4;
  } else {
    try {
      two_witness = exists_antiautomorphism_search(two, budget);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      return unknown("2-part " + format_group(two) + ": " + e.what());
    }
    if (!two_witness) {
      if (!split.odd) return not_exists(Reason::SearchExhausted);
      // Absence on the 2-part alone does not settle G; search G directly.
      try {
        auto direct = exists_antiautomorphism_search(g, budget);
        if (!direct) return not_exists(Reason::SearchExhausted);
        return exists(std::move(*direct), Method::Search);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        return unknown(std::string("2-part has no antiautomorphism; ") + e.what());
      }
    }
  }

  if (!split.odd) return exists(transport(*two_witness, split.iso), two_method);
  const std::vector<TableMap> blocks{negation_map(*split.odd), *two_witness};
  return exists(transport(direct_sum_map(blocks), split.iso), Method::DirectSum,
                {two_method, Method::Negation});
}

ClassificationVerdict decide_biantiautomorphism(const AbelianGroup& g, const SearchBudget& budget) {
  const auto involutions = count_involutions(g);
  if (involutions == 1) return not_exists(Reason::UniqueInvolution);
  if (g.order() > budget.max_table_order)
    return unknown("group order " + std::to_string(g.order()) + " exceeds the witness table cap " +
                   std::to_string(budget.max_table_order));
  if (involutions == 0) return exists(negation_map(g), Method::Negation);

  std::optional<TableMap> hit;
  try {
    for_each_automorphism(
        g,
        [&](const TableMap& f) {
          if (!is_antimorphism(f)) return true;
          hit = f;
          return false;
        },
        budget.enumeration);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    return unknown(e.what());
  }
  if (!hit) return not_exists(Reason::SearchExhausted);
  return exists(std::move(*hit), Method::Search);
}

// ---------------------------------------------------------------------------
// Desk-scale verification of individual statements.

namespace {

using Lines = std::vector<VerificationLine>;

void add(Lines& lines, std::string subject, bool ok, std::string detail) {
  lines.push_back({std::move(subject), ok ? Outcome::Pass : Outcome::Fail, std::move(detail)});
}

void skip(Lines& lines, std::string subject, std::string detail) {
  lines.push_back({std::move(subject), Outcome::Skip, std::move(detail)});
}

std::vector<AbelianGroup> all_groups_up_to(std::uint64_t max_order) {
  std::vector<AbelianGroup> out;
  for (std::uint64_t n = 2; n <= max_order; ++n)
    for (auto& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
  return out;
}

std::string group_label(const AbelianGroup& g) { return "Z(" + format_group(g) + ")"; }

// The element of order 2 when it is unique.
std::optional<GroupElement> unique_involution(const AbelianGroup& g) {
  if (count_involutions(g) != 1) return std::nullopt;
  std::vector<std::int64_t> c(g.rank(), 0);
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (g.modulus(i) % 2 == 0) c[i] = static_cast<std::int64_t>(g.modulus(i) / 2);
  return GroupElement(std::move(c));
}

// Zero antiautomorphisms when a search is affordable, else the sum of all
// elements is checked to be the (nonzero) involution, which is what rules
// them out.
void check_no_antiautomorphism(Lines& lines, const AbelianGroup& g, const SearchBudget& budget) {
  const auto label = group_label(g);
  const auto inv = unique_involution(g);
  const auto sum = group_sum(g);
  const bool sum_ok = inv && sum == *inv;
  if (g.order() <= budget.max_group_order) {
    const auto count = count_antiautomorphisms(g, budget);
    add(lines, label, count == 0 && sum_ok,
        "count=" + std::to_string(count) + ", sum=" + format_element(sum));
  } else {
    add(lines, label, sum_ok,
        "sum=" + format_element(sum) + " equals the unique involution; count skipped (order above "
        "search budget " + std::to_string(budget.max_group_order) + ")");
  }
}

Lines verify_p2(std::uint64_t max_order, const SearchBudget& budget) {
  Lines lines;
  for (std::uint64_t n = 2; n <= max_order; n += 2) check_no_antiautomorphism(lines, AbelianGroup{n}, budget);
  return lines;
}

Lines verify_p5(std::uint64_t max_order) {
  Lines lines;
  for (const auto& g : all_groups_up_to(max_order)) {
    const bool neg_ok = is_antiautomorphism(negation_map(g));
    const auto inv = count_involutions(g);
    add(lines, group_label(g), neg_ok == (inv == 0),
        std::string("negation ") + (neg_ok ? "is" : "is not") + " an antiautomorphism, involutions=" +
            std::to_string(inv));
  }
  return lines;
}

Lines verify_p6(std::uint64_t max_order, const SearchBudget& budget) {
  Lines lines;
  for (const auto& g : all_groups_up_to(max_order))
    if (count_involutions(g) == 1) check_no_antiautomorphism(lines, g, budget);
  return lines;
}

Lines verify_l7(std::uint64_t max_order, const SearchBudget& budget) {
  Lines lines;
  std::vector<std::pair<AbelianGroup, TableMap>> witnesses;
  for (const auto& g : all_groups_up_to(max_order / 2)) {
    auto v = decide_antiautomorphism(g, budget);
    if (v.status == Status::Exists) witnesses.emplace_back(g, *v.witness);
  }
  for (const auto& [g1, f1] : witnesses)
    for (const auto& [g2, f2] : witnesses) {
      if (g1.order() * g2.order() > max_order) continue;
      const std::vector<TableMap> blocks{f1, f2};
      const auto sum = direct_sum_map(blocks);
      add(lines, group_label(g1) + " + " + group_label(g2), is_antiautomorphism(sum),
          "direct sum of two verified witnesses");
    }
  return lines;
}

Lines verify_p9(std::uint64_t max_order, const SearchBudget& budget) {
  Lines lines;
  for (unsigned r = 2; r < 63 && (std::uint64_t{1} << r) <= max_order; ++r) {
    const AbelianGroup g(std::vector<std::uint64_t>(r, 2));
    const auto f = elementary2_antiauto(r);
    add(lines, group_label(g), is_antiautomorphism(f), "elementary2 construction");
    if ((r == 2 || r == 3) && g.order() <= budget.max_group_order) {
      const std::uint64_t expected = r == 2 ? 8 : 384;
      const auto count = count_antiautomorphisms(g, budget);
      add(lines, group_label(g) + " count", count == expected,
          "count=" + std::to_string(count) + ", expected " + std::to_string(expected));
    }
  }
  return lines;
}

Lines verify_p10(std::uint64_t max_order) {
  Lines lines;
  for (unsigned m = 1; m < 62; ++m) {
    if ((std::uint64_t{1} << (2 * m)) > max_order) break;
    for (unsigned n = 2; static_cast<std::uint64_t>(m) * n < 63; ++n) {
      if ((std::uint64_t{1} << (m * n)) > max_order) break;
      const auto f = homogeneous2_antiauto(m, n, max_order);
      const auto c = companion_matrix(irreducible_poly_z2(n), std::uint64_t{1} << m);
      const bool lifts = c.reduce_mod(2) == companion_matrix(irreducible_poly_z2(n), 2);
      add(lines, group_label(f.group()), is_antiautomorphism(f) && is_linear(f) && lifts,
          "companion matrix of " + format_polynomial(irreducible_poly_z2(n)) +
              (lifts ? "; reduces to its Z_2 companion" : "; reduction mismatch"));
    }
  }
  return lines;
}

Lines verify_p11(std::uint64_t max_order, const SearchBudget& budget) {
  Lines lines;
  const AbelianGroup g{2, 4};
  if (g.order() > max_order) {
    skip(lines, group_label(g), "order 8 above max_order");
    return lines;
  }
  const auto f = z2_z4_antiauto();
  add(lines, "explicit table", is_antiautomorphism(f) && !is_linear(f),
      "antiautomorphism, not linear");
  const auto auts = enumerate_automorphisms(g, budget.enumeration).size();
  add(lines, "automorphisms", auts == 8, "|Aut| = " + std::to_string(auts));
  const auto biantis = count_biantiautomorphisms_bruteforce(g, budget.enumeration);
  add(lines, "biantiautomorphisms", biantis == 0, "count=" + std::to_string(biantis));
  const auto found = exists_antiautomorphism_search(g, budget);
  add(lines, "search", found.has_value(), found ? "witness found" : "no witness");
  return lines;
}

// Distinct exponent sets {d_1 < ... < d_m} with sum <= max_exp.
void distinct_exponents(unsigned min_next, unsigned remaining, std::vector<unsigned>& cur,
                        std::vector<std::vector<unsigned>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (unsigned d = min_next; d <= remaining; ++d) {
    cur.push_back(d);
    distinct_exponents(d + 1, remaining - d, cur, out);
    cur.pop_back();
  }
}

Lines verify_p12(std::uint64_t max_order, const SearchBudget& budget) {
  Lines lines;
  const auto max_exp = static_cast<unsigned>(std::bit_width(max_order) - 1);
  std::vector<std::vector<unsigned>> sets;
  std::vector<unsigned> cur;
  distinct_exponents(1, max_exp, cur, sets);
  for (const auto& ds : sets) {
    std::vector<std::uint64_t> moduli;
    for (auto d : ds) moduli.push_back(std::uint64_t{1} << d);
    const AbelianGroup g(moduli);
    try {
      const bool ok = verify_no_prime_order_fpf_automorphism(g, budget.enumeration);
      add(lines, group_label(g), ok,
          ok ? "no fixed-point-free automorphism of prime order"
             : "found a fixed-point-free automorphism of prime order");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      skip(lines, group_label(g), e.what());
    }
  }
  return lines;
}

Lines verify_t_formula(std::uint64_t max_order, const SearchBudget& budget) {
  Lines lines;
  for (std::uint64_t n = 3; n <= max_order; n += 2) {
    const auto brute = count_biantiautomorphisms_bruteforce(AbelianGroup{n}, budget.enumeration);
    const auto formula = biantiauto_count_formula(n);
    add(lines, group_label(AbelianGroup{n}), brute == formula,
        "brute force " + std::to_string(brute) + ", formula " + std::to_string(formula));
  }
  return lines;
}

bool is_homogeneous_two_group(const AbelianGroup& g) {
  return g.rank() >= 2 && g.is_homogeneous() && std::has_single_bit(g.modulus(0));
}

Lines verify_t_classification(std::uint64_t max_order, const SearchBudget& budget) {
  Lines lines;
  for (const auto& g : all_groups_up_to(max_order)) {
    const auto v = decide_antiautomorphism(g, budget);
    const auto label = group_label(g);
    if (v.status == Status::Unknown) {
      skip(lines, label, v.budget_note);
      continue;
    }
    const auto inv = count_involutions(g);
    const bool has = v.status == Status::Exists;
    if (inv == 0 || is_homogeneous_two_group(g)) {
      add(lines, label, has, std::string("verdict ") + std::string(to_string(v.status)));
    } else if (inv == 1) {
      add(lines, label, !has, std::string("verdict ") + std::string(to_string(v.status)));
    } else if (g.order() <= budget.max_existence_order) {
      std::optional<TableMap> found;
      try {
        found = exists_antiautomorphism_search(g, budget);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        skip(lines, label, e.what());
        continue;
      }
      add(lines, label, has == found.has_value(),
          std::string("verdict ") + std::string(to_string(v.status)) + ", direct search " +
              (found ? "found a witness" : "exhausted"));
    } else {
      skip(lines, label, "not covered by the classification; above existence budget");
    }
  }
  return lines;
}

}  // namespace

const std::vector<std::string>& supported_propositions() {
  static const std::vector<std::string> ids{"P2",  "P5",  "P6",  "L7",        "P9",
                                            "P10", "P11", "P12", "T-formula", "T-classification"};
  return ids;
}

VerificationReport verify_paper(std::string_view id, std::uint64_t max_order,
                                const SearchBudget& budget) {
  VerificationReport report{std::string(id), max_order, {}};
  if (id == "P2") report.lines = verify_p2(max_order, budget);
  else if (id == "P5") report.lines = verify_p5(max_order);
  else if (id == "P6") report.lines = verify_p6(max_order, budget);
  else if (id == "L7") report.lines = verify_l7(max_order, budget);
  else if (id == "P9") report.lines = verify_p9(max_order, budget);
  else if (id == "P10") report.lines = verify_p10(max_order);
  else if (id == "P11") report.lines = verify_p11(max_order, budget);
  else if (id == "P12") report.lines = verify_p12(max_order, budget);
  else if (id == "T-formula") report.lines = verify_t_formula(max_order, budget);
  else if (id == "T-classification") report.lines = verify_t_classification(max_order, budget);
  else throw Error(ErrorKind::UnknownProposition, "unknown proposition '" + std::string(id) + "'");
  if (report.lines.empty())
    report.lines.push_back({"-", Outcome::Skip, "no applicable group of order <= " + std::to_string(max_order)});
  return report;
}

}  // namespace antiauto
