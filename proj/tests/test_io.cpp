#include <doctest.h>

#include "antiauto/constructions.hpp"
#include "antiauto/error.hpp"
#include "antiauto/io.hpp"

using namespace antiauto;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an antiauto::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("group specs") {
  CHECK(parse_group("2,4") == AbelianGroup{2, 4});
  CHECK(parse_group(" 3 , 5 ") == AbelianGroup{3, 5});
  CHECK(parse_group("12") == AbelianGroup{12});
  CHECK(format_group(AbelianGroup{4, 4, 3}) == "4,4,3");
  CHECK(kind_of([] { parse_group(""); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_group("2,,4"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_group("2,x"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_group("-2"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_group("2,1"); }) == ErrorKind::ModulusTooSmall);
}

TEST_CASE("element specs") {
  const AbelianGroup g{2, 4};
  CHECK(parse_element(g, "1,3") == GroupElement{1, 3});
  CHECK(format_element(GroupElement{1, 3}) == "1,3");
  CHECK(kind_of([&] { parse_element(g, "1"); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { parse_element(g, "1,4"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_element(g, "1,-1"); }) == ErrorKind::ParseError);
}

TEST_CASE("polynomial specs") {
  const auto f = parse_polynomial("1,1,0,1");
  CHECK(f.degree() == 3);
  CHECK(f.bits() == 0b1011);
  CHECK(format_polynomial(f) == "1,1,0,1");
  CHECK(kind_of([] { parse_polynomial("1,1,0"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_polynomial("1,2,1"); }) == ErrorKind::ParseError);
}

TEST_CASE("matrix specs") {
  const auto a = parse_matrix(4, "[[1,5],[0,-1]]");
  CHECK(a == ResidueMatrix(4, {{1, 1}, {0, 3}}));
  CHECK(kind_of([] { parse_matrix(4, "[[1,2],[3]]"); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { parse_matrix(4, "[[1,2],"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_matrix(4, "[[1,2.5],[0,1]]"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_matrix(4, "{}"); }) == ErrorKind::ParseError);
}

TEST_CASE("map JSON") {
  const auto f = z2_z4_antiauto();
  const auto j = map_to_json(f);
  CHECK(j.dump() == R"({"group":"2,4","table":[6,5,3,2,4,7,1,0]})");
  CHECK(map_from_json(j) == f);
  CHECK(map_from_json_text(j.dump()) == f);

  CHECK(kind_of([] { map_from_json_text("{"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { map_from_json_text(R"({"group":"2,2"})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { map_from_json_text(R"({"group":"2,2","table":[0,1,2]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { map_from_json_text(R"({"group":"2,2","table":[0,1,2,4]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { map_from_json_text(R"({"group":"2,2","table":[0,1,2,-3]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { map_from_json_text(R"({"group":4,"table":[0,1,2,3]})"); }) == ErrorKind::ParseError);
}

TEST_CASE("pairs text") {
  CHECK(map_to_pairs_text(klein_antiauto()) == "0,0 -> 1,0\n0,1 -> 0,1\n1,0 -> 1,1\n1,1 -> 0,0\n");
}

TEST_CASE("verdict JSON omits absent fields") {
  ClassificationVerdict none;
  none.status = Status::NotExists;
  none.reason = Reason::UniqueInvolution;
  CHECK(verdict_to_json(none).dump() == R"({"status":"not-exists","reason":"unique-involution"})");

  const auto v = decide_antiautomorphism(AbelianGroup{4, 4, 3});
  const auto j = verdict_to_json(v);
  CHECK(j["status"] == "exists");
  CHECK(j["method"] == "direct-sum");
  CHECK(j["components"] == Json::array({"companion2", "negation"}));
  CHECK_FALSE(j.contains("reason"));
  CHECK(map_from_json(j["witness"]) == *v.witness);
}

TEST_CASE("report JSON") {
  VerificationReport r{"P5", 4, {{"Z3", Outcome::Pass, "ok"}, {"Z2", Outcome::Skip, ""}}};
  const auto j = report_to_json(r);
  CHECK(j["passed"] == true);
  CHECK(j["pass"] == 1);
  CHECK(j["skip"] == 1);
  CHECK(j["lines"].size() == 2);
  CHECK(j["lines"][1]["outcome"] == "skip");
}
