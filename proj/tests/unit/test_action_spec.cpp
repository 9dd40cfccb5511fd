#include <doctest.h>

#include "vgit/action_spec.hpp"

using namespace vgit;

namespace {

ActionSpec parse(const char* text) { return parse_action_spec(std::string_view(text)); }

}  // namespace

TEST_CASE("cstar input") {
  const auto spec = parse(R"({"cstar": {"blocks": [{"d": 2, "dim": 1}, {"d": -1, "dim": 3}]}, "support": [2]})");
  REQUIRE(spec.cstar());
  CHECK(spec.cstar()->decomp.weight(0) == -1);
  REQUIRE(spec.support);
  CHECK(spec.support->indices() == std::vector<std::size_t>{1});
}

TEST_CASE("torus input") {
  const auto spec = parse(R"({"torus": {"rank": 2, "coordinates": [[1, 0], [0, -1]], "slope": ["1/2", -3]}})");
  REQUIRE(spec.torus());
  CHECK(spec.torus()->slope == CharacterSlope{make_rational(1, 2), make_rational(-3)});
  const auto zero = parse(R"({"torus": {"rank": 1, "coordinates": [[4]]}})");
  CHECK(zero.torus()->slope == CharacterSlope{make_rational(0)});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("{"), ParseError);
  CHECK_THROWS_AS(parse("[]"), ParseError);
  CHECK_THROWS_AS(parse("{}"), ParseError);
  CHECK_THROWS_AS(parse(R"({"cstar": {"blocks": []}, "torus": {}})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"cstar": {}})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"cstar": {"blocks": [{"d": "x", "dim": 1}]}})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"cstar": {"blocks": [{"d": 1.5, "dim": 1}]}})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"torus": {"rank": 1, "coordinates": [[1]], "slope": ["1/0"]}})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"torus": {"rank": 1, "coordinates": [[1]], "slope": ["a"]}})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"cstar": {"blocks": [{"d": 1, "dim": 1}]}, "support": "1"})"), ParseError);
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(parse(R"({"cstar": {"blocks": []}})"), InvalidInput);
  CHECK_THROWS_AS(parse(R"({"cstar": {"blocks": [{"d": 1, "dim": 0}]}})"), InvalidInput);
  CHECK_THROWS_AS(parse(R"({"cstar": {"blocks": [{"d": 1, "dim": 1}]}, "support": [2]})"), InvalidInput);
  CHECK_THROWS_AS(parse(R"({"cstar": {"blocks": [{"d": 1, "dim": 1}]}, "support": []})"), InvalidInput);
  CHECK_THROWS_AS(parse(R"({"torus": {"rank": 0, "coordinates": []}})"), InvalidInput);
  CHECK_THROWS_AS(parse(R"({"torus": {"rank": 2, "coordinates": [[1, 0]], "slope": ["1"]}})"), InvalidInput);
  CHECK_THROWS_AS(parse(R"({"torus": {"rank": 2, "coordinates": [[1]]}})"), InvalidInput);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(parse_rational("7") == make_rational(7));
  CHECK(parse_rational("+3/9") == make_rational(1, 3));
  CHECK(to_fraction_string(make_rational(4, 2)) == "2/1");
  CHECK(to_fraction_string(make_rational(-1, 3)) == "-1/3");
  CHECK(to_string(make_rational(4, 2)) == "2");
  for (const char* bad : {"", "1/", "/2", "1/-2", "1/0", "1.5", "abc", "1//2", " 1"}) {
    CHECK_THROWS_AS(parse_rational(bad), InvalidInput);
  }
}
