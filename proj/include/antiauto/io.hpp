#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "antiauto/classify.hpp"
#include "antiauto/group.hpp"
#include "antiauto/linear.hpp"
#include "antiauto/table_map.hpp"

namespace antiauto {

using Json = nlohmann::ordered_json;

// Text formats. All throw Error(ParseError) on malformed input.

/// "2,4" -> Z_2 + Z_4
AbelianGroup parse_group(std::string_view spec);
std::string format_group(const AbelianGroup& g);

/// "1,3" -> (1, 3); residues must already be reduced.
GroupElement parse_element(const AbelianGroup& g, std::string_view spec);
std::string format_element(const GroupElement& x);

/// Coefficients constant term first: "1,1,0,1" = 1 + t + t^3.
BinaryPolynomial parse_polynomial(std::string_view spec);
std::string format_polynomial(const BinaryPolynomial& f);

/// Row-major JSON array of arrays, e.g. "[[1,1],[0,1]]".
ResidueMatrix parse_matrix(std::uint64_t modulus, std::string_view json_text);

// Map serialization.

/// {"group": "d1,...,dk", "table": [i0, i1, ...]}
Json map_to_json(const TableMap& f);
TableMap map_from_json(const Json& j);
TableMap map_from_json_text(std::string_view text);

/// One "x -> f(x)" line per element, in index order.
std::string map_to_pairs_text(const TableMap& f);

/// {"status", "method", "components", "reason", "budget_note", "witness"};
/// absent fields are omitted.
Json verdict_to_json(const ClassificationVerdict& v);

Json report_to_json(const VerificationReport& r);

}  // namespace antiauto
