// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "antiauto/classify.hpp"
#include "antiauto/constructions.hpp"
#include "antiauto/search.hpp"

using namespace antiauto;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s  criterion %2d  %s  [%s]\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void run_guarded(int id, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, what, std::string("exception: ") + e.what());
  }
}

std::string label(const AbelianGroup& g) {
  std::string s = "Z";
  for (std::size_t i = 0; i < g.rank(); ++i) s += (i ? "+Z" : "") + std::to_string(g.modulus(i));
  return s;
}

std::vector<AbelianGroup> groups_up_to(std::uint64_t max_order) {
  std::vector<AbelianGroup> out;
  for (std::uint64_t n = 2; n <= max_order; ++n)
    for (auto& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
  return out;
}

// Exact counts are expensive at order 16, so each group is counted once.
std::map<std::vector<std::uint64_t>, std::uint64_t> count_cache;

std::uint64_t cached_count(const AbelianGroup& g) {
  const std::vector<std::uint64_t> key(g.moduli().begin(), g.moduli().end());
  const auto it = count_cache.find(key);
  if (it != count_cache.end()) return it->second;
  const auto c = count_antiautomorphisms(g);
  count_cache.emplace(key, c);
  return c;
}

// Involutions by scanning every element.
std::uint64_t involutions_by_scan(const AbelianGroup& g) {
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    const auto x = index_element(g, i);
    if (x != zero(g) && add(g, x, x) == zero(g)) ++n;
  }
  return n;
}

std::uint64_t power(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// prod over p^a || n of (p^{2a} - 2 p^{2a-1}), by trial division.
std::uint64_t lower_bound_oracle(std::uint64_t n) {
  std::uint64_t result = 1;
  for (std::uint64_t p = 3; n > 1; p += 2) {
    unsigned a = 0;
    while (n % p == 0) n /= p, ++a;
    if (a) result *= power(p, 2 * a) - 2 * power(p, 2 * a - 1);
  }
  return result;
}

// Multipliers a in [1, n) with a and a - 1 both units: the fixed-point-free
// automorphisms of Z_n whose difference with the identity is bijective.
std::uint64_t linear_antiautos_oracle(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1 && std::gcd(a - 1, n) == 1) ++count;
  return count;
}

void criterion_1() {
  const AbelianGroup g{2, 2};
  double worst = 0;
  std::uint64_t count = 0;
  for (int rep = 0; rep < 5; ++rep) {
    const auto t = Clock::now();
    count = count_antiautomorphisms(g);
    worst = std::max(worst, seconds_since(t));
  }
  std::ostringstream d;
  d << "count=" << count << " expected 8, worst of 5 runs " << worst * 1e3 << " ms (limit 1 ms)";
  report(1, count == 8 && worst < 1e-3, "count(Z2+Z2) = 8 in < 1 ms", d.str());
}

void criterion_2() {
  const auto t = Clock::now();
  const auto count = count_antiautomorphisms(AbelianGroup{2, 2, 2});
  const double s = seconds_since(t);
  std::ostringstream d;
  d << "count=" << count << " expected 384, " << s << " s (limit 1 s)";
  report(2, count == 384 && s < 1.0, "count(Z2^3) = 384 in < 1 s", d.str());
}

void criterion_3() {
  bool ok = true;
  std::ostringstream d;
  int cyclic = 0, unique = 0;
  for (std::uint64_t n = 2; n <= 16; n += 2) {
    const auto c = cached_count(AbelianGroup{n});
    ++cyclic;
    if (c != 0) ok = false, d << "Z" << n << " count=" << c << "; ";
  }
  for (const auto& g : groups_up_to(16)) {
    if (involutions_by_scan(g) != 1) continue;
    ++unique;
    const auto c = cached_count(g);
    if (c != 0) ok = false, d << label(g) << " count=" << c << "; ";
  }
  d << cyclic << " even cyclic groups, " << unique << " unique-involution groups, all counts 0";
  report(3, ok, "no antiautomorphisms of even cyclic or unique-involution groups (order <= 16)", d.str());
}

void criterion_4() {
  bool ok = true;
  std::ostringstream d;
  const std::map<std::uint64_t, std::uint64_t> stated_bounds{{3, 3}, {5, 15}, {7, 35}, {9, 27}, {15, 45}};
  for (const auto& [n, stated] : stated_bounds) {
    const auto count = cached_count(AbelianGroup{n});
    const auto bound = antiauto_lower_bound(n);
    const bool this_ok = bound == stated && bound == lower_bound_oracle(n) && count >= bound;
    ok = ok && this_ok;
    d << "Z" << n << ": " << count << " >= " << bound << "; ";
  }
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const auto count = cached_count(AbelianGroup{p});
    const auto upper = antiauto_upper_bound_prime(p);
    ok = ok && count <= upper;
    d << "Z" << p << " <= " << upper << "; ";
  }
  ok = ok && antiauto_upper_bound_prime(5) == 45;
  report(4, ok, "odd cyclic counts within the lower and prime upper bounds", d.str());
}

void criterion_5() {
  bool ok = true;
  std::ostringstream d;
  const auto t = Clock::now();
  int checked = 0;
  for (std::uint64_t n = 3; n <= 45; n += 2) {
    const auto brute = count_biantiautomorphisms_bruteforce(AbelianGroup{n});
    const auto formula = biantiauto_count_formula(n);
    const auto oracle = linear_antiautos_oracle(n);
    ++checked;
    if (brute != formula || formula != oracle) {
      ok = false;
      d << "Z" << n << " brute=" << brute << " formula=" << formula << " oracle=" << oracle << "; ";
    }
  }
  const double s = seconds_since(t);
  d << checked << " odd n <= 45 exact, " << s << " s (limit 10 s)";
  report(5, ok && s < 10.0, "biantiautomorphism brute force equals the product formula", d.str());
}

void criterion_6() {
  const AbelianGroup g{2, 4};
  const auto bi = count_biantiautomorphisms_bruteforce(g);
  const auto found = exists_antiautomorphism_search(g);
  const auto table = z2_z4_antiauto();
  const bool table_anti = is_antiautomorphism(table);
  const bool table_linear = is_linear(table);
  const bool ok = bi == 0 && found && is_antiautomorphism(*found) && table_anti && !table_linear;
  std::ostringstream d;
  d << "biantiautomorphisms=" << bi << ", search " << (found ? "found a witness" : "found nothing")
    << ", explicit table antiautomorphism=" << table_anti << " linear=" << table_linear;
  report(6, ok, "Z2+Z4 has an antiautomorphism but no linear one", d.str());
}

void criterion_7() {
  bool ok = true;
  std::ostringstream d;
  for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 2}, {3, 2}, {2, 3}}) {
    const auto f = homogeneous2_antiauto(m, n);
    const bool this_ok = f.size() == power(2, m * n) && is_antiautomorphism(f);
    ok = ok && this_ok;
    d << "(" << m << "," << n << ")=" << (this_ok ? "ok" : "bad") << " ";
  }
  report(7, ok, "homogeneous 2-group constructions verify on full tables", d.str());
}

void criterion_8() {
  bool ok = true;
  int groups = 0;
  std::ostringstream d;
  for (const auto& g : groups_up_to(64)) {
    ++groups;
    // Reference sum accumulated element by element.
    GroupElement acc = zero(g);
    std::vector<GroupElement> involutions;
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      const auto x = index_element(g, i);
      acc = add(g, acc, x);
      if (x != zero(g) && add(g, x, x) == zero(g)) involutions.push_back(x);
    }
    const auto expected = involutions.size() == 1 ? involutions.front() : zero(g);
    const auto sum = group_sum(g);
    if (sum != expected || acc != expected) ok = false, d << label(g) << " mismatch; ";
  }
  d << groups << " groups of order <= 64";
  report(8, ok, "group sum is the unique involution or zero", d.str());
}

void criterion_9() {
  bool ok = true;
  int groups = 0;
  std::ostringstream d;
  for (const auto& g : groups_up_to(32)) {
    ++groups;
    const bool anti = is_antiautomorphism(negation_map(g));
    const bool none = involutions_by_scan(g) == 0 && count_involutions(g) == 0;
    if (anti != none) ok = false, d << label(g) << " mismatch; ";
  }
  d << groups << " groups of order <= 32";
  report(9, ok, "negation is an antiautomorphism iff there are no involutions", d.str());
}

void criterion_10() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& g : {AbelianGroup{2, 4}, AbelianGroup{2, 8}, AbelianGroup{4, 8}, AbelianGroup{2, 4, 8}}) {
    const bool holds = verify_no_prime_order_fpf_automorphism(g);
    ok = ok && holds;
    d << label(g) << "=" << (holds ? "none" : "FOUND") << " ";
  }
  report(10, ok, "distinct-exponent 2-groups have no prime-order fixed-point-free automorphism", d.str());
}

void criterion_11() {
  bool ok = true;
  int groups = 0, exists = 0, unknown = 0;
  std::ostringstream d;
  const auto t = Clock::now();
  for (const auto& g : groups_up_to(16)) {
    ++groups;
    const auto v = decide_antiautomorphism(g);
    const bool truth = cached_count(g) > 0;
    if (v.status == Status::Unknown) ++unknown;
    if (truth) ++exists;
    const bool agrees = v.status == (truth ? Status::Exists : Status::NotExists);
    const bool witness_ok = !v.witness || (v.witness->group() == g && is_antiautomorphism(*v.witness));
    if (!agrees || !witness_ok) ok = false, d << label(g) << " disagrees; ";
  }
  d << groups << " groups, " << exists << " admit one, " << unknown << " unknown, " << seconds_since(t)
    << " s including counts";
  report(11, ok && unknown == 0, "classifier agrees with exact counts for order <= 16", d.str());
}

void criterion_12() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& g : {AbelianGroup{2, 2, 2}, AbelianGroup{9}}) {
    std::vector<std::uint64_t> counts;
    for (unsigned jobs : {1u, 2u, 8u}) {
      SearchBudget b;
      b.jobs = jobs;
      counts.push_back(count_antiautomorphisms(g, b));
    }
    const bool same = counts[0] == counts[1] && counts[1] == counts[2];
    ok = ok && same;
    d << label(g) << ": " << counts[0] << "/" << counts[1] << "/" << counts[2] << " ";
  }
  report(12, ok, "counts identical for 1, 2 and 8 workers", d.str());
}

}  // namespace

int main() {
  run_guarded(1, "count(Z2+Z2) = 8 in < 1 ms", criterion_1);
  run_guarded(2, "count(Z2^3) = 384 in < 1 s", criterion_2);
  run_guarded(3, "no antiautomorphisms of even cyclic or unique-involution groups", criterion_3);
  run_guarded(4, "odd cyclic counts within bounds", criterion_4);
  run_guarded(5, "biantiautomorphism formula", criterion_5);
  run_guarded(6, "Z2+Z4 antiautomorphism but no linear one", criterion_6);
  run_guarded(7, "homogeneous 2-group constructions", criterion_7);
  run_guarded(8, "group sum", criterion_8);
  run_guarded(9, "negation characterization", criterion_9);
  run_guarded(10, "distinct-exponent 2-groups", criterion_10);
  run_guarded(11, "classifier ground truth", criterion_11);
  run_guarded(12, "determinism under parallelism", criterion_12);
  std::printf("%s: %d of 12 criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
