#include "antiauto/io.hpp"

#include <charconv>
#include <sstream>

#include "antiauto/error.hpp"

namespace antiauto {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <typename Int>
std::vector<Int> parse_list(std::string_view spec, const char* what) {
  std::vector<Int> out;
  if (trim(spec).empty()) throw Error(ErrorKind::ParseError, std::string("empty ") + what);
  while (true) {
    const auto comma = spec.find(',');
    const auto field = trim(spec.substr(0, comma));
    Int value{};
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc{} || ptr != end)
      throw Error(ErrorKind::ParseError,
                  std::string("bad ") + what + " entry '" + std::string(field) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  return out;
}

template <typename Seq>
std::string join(const Seq& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os.str();
}

}  // namespace

AbelianGroup parse_group(std::string_view spec) {
  return AbelianGroup(parse_list<std::uint64_t>(spec, "group"));
}

std::string format_group(const AbelianGroup& g) { return join(g.moduli()); }

GroupElement parse_element(const AbelianGroup& g, std::string_view spec) {
  GroupElement x(parse_list<std::int64_t>(spec, "element"));
  if (x.size() != g.rank())
    throw Error(ErrorKind::DimensionMismatch, "element '" + std::string(spec) +
                                                  "' does not match group " + format_group(g));
  if (!contains(g, x))
    throw Error(ErrorKind::ParseError, "element '" + std::string(spec) + "' is not reduced");
  return x;
}

std::string format_element(const GroupElement& x) { return join(x.coords()); }

BinaryPolynomial parse_polynomial(std::string_view spec) {
  const auto raw = parse_list<int>(spec, "polynomial");
  try {
    return BinaryPolynomial(raw);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string format_polynomial(const BinaryPolynomial& f) { return join(f.coefficients()); }

ResidueMatrix parse_matrix(std::uint64_t modulus, std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("matrix JSON: ") + e.what());
  }
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "matrix must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorKind::ParseError, "matrix row must be an array");
    auto& out = rows.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, "matrix entries must be integers");
      out.push_back(v.get<std::int64_t>());
    }
  }
  return ResidueMatrix(modulus, std::move(rows));
}

Json map_to_json(const TableMap& f) {
  Json j;
  j["group"] = format_group(f.group());
  j["table"] = std::vector<Index>(f.table().begin(), f.table().end());
  return j;
}

TableMap map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("table"))
    throw Error(ErrorKind::ParseError, "map JSON needs \"group\" and \"table\"");
  if (!j["group"].is_string() || !j["table"].is_array())
    throw Error(ErrorKind::ParseError, "map JSON has wrong field types");
  auto g = parse_group(j["group"].get<std::string>());
  std::vector<Index> table;
  table.reserve(j["table"].size());
  for (const auto& v : j["table"]) {
    if (!v.is_number_unsigned()) throw Error(ErrorKind::ParseError, "table entries must be indices");
    table.push_back(v.get<Index>());
  }
  try {
    return TableMap(std::move(g), std::move(table));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

TableMap map_from_json_text(std::string_view text) {
  try {
    return map_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("map JSON: ") + e.what());
  }
}

std::string map_to_pairs_text(const TableMap& f) {
  std::ostringstream os;
  for (std::uint64_t i = 0; i < f.size(); ++i)
    os << format_element(index_element(f.group(), i)) << " -> "
       << format_element(index_element(f.group(), f[static_cast<Index>(i)])) << '\n';
  return os.str();
}

Json verdict_to_json(const ClassificationVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  if (v.method) j["method"] = to_string(*v.method);
  if (!v.components.empty()) {
    Json parts = Json::array();
    for (auto m : v.components) parts.push_back(to_string(m));
    j["components"] = parts;
  }
  if (v.reason) j["reason"] = to_string(*v.reason);
  if (!v.budget_note.empty()) j["budget_note"] = v.budget_note;
  if (v.witness) j["witness"] = map_to_json(*v.witness);
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["proposition"] = r.proposition;
  j["max_order"] = r.max_order;
  j["passed"] = r.passed();
  j["pass"] = r.count(Outcome::Pass);
  j["fail"] = r.count(Outcome::Fail);
  j["skip"] = r.count(Outcome::Skip);
  Json lines = Json::array();
  for (const auto& line : r.lines)
    lines.push_back({{"subject", line.subject},
                     {"outcome", to_string(line.outcome)},
                     {"detail", line.detail}});
  j["lines"] = lines;
  return j;
}

}  // namespace antiauto
