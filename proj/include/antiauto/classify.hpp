#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antiauto/search.hpp"
#include "antiauto/table_map.hpp"

namespace antiauto {

enum class Status { Exists, NotExists, Unknown };

/// Which construction produced a witness.
enum class Method { Negation, Elementary2, Companion2, ExplicitTableZ2Z4, DirectSum, Search };

enum class Reason { UniqueInvolution, SearchExhausted };

std::string_view to_string(Status s) noexcept;
std::string_view to_string(Method m) noexcept;
std::string_view to_string(Reason r) noexcept;

/// Outcome of a decision procedure.
///
/// Exists always carries a witness that has been re-checked on the input
/// group. When the witness is the direct sum of negation on the odd part and
/// a 2-part construction, `method` is DirectSum and `components` lists the
/// summands' methods (2-part first).
struct ClassificationVerdict {
  Status status = Status::Unknown;
  std::optional<TableMap> witness;
  std::optional<Method> method;
  std::vector<Method> components;
  std::optional<Reason> reason;
  std::string budget_note;
};

ClassificationVerdict decide_antiautomorphism(const AbelianGroup& g,
                                              const SearchBudget& budget = {});

/// Same pipeline shape for linear antiautomorphisms: no involutions gives
/// negation, one involution rules them out, otherwise the automorphisms are
/// searched.
ClassificationVerdict decide_biantiautomorphism(const AbelianGroup& g,
                                                const SearchBudget& budget = {});

enum class Outcome { Pass, Fail, Skip };
std::string_view to_string(Outcome o) noexcept;

struct VerificationLine {
  std::string subject;
  Outcome outcome = Outcome::Pass;
  std::string detail;
};

struct VerificationReport {
  std::string proposition;
  std::uint64_t max_order = 0;
  std::vector<VerificationLine> lines;

  std::size_t count(Outcome o) const;
  /// No line failed (skipped lines do not count as failures).
  bool passed() const { return count(Outcome::Fail) == 0; }
};

/// Identifiers accepted by verify_paper.
const std::vector<std::string>& supported_propositions();

/// Runs the desk-scale check for one statement over every applicable group
/// of order <= max_order. Throws UnknownProposition.
VerificationReport verify_paper(std::string_view proposition_id, std::uint64_t max_order,
                                const SearchBudget& budget = {});

}  // namespace antiauto
