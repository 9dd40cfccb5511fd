#include <doctest.h>

#include "vgit/report.hpp"

using namespace vgit;

namespace {

WeightDecomposition two(std::int64_t d1, std::int64_t d2) {
  return make_decomposition(std::vector<WeightBlock>{{d1, 2}, {d2, 2}});
}

void check_round_trip(const report::Report& r) {
  const std::string once = report::render_json(r.data);
  CHECK(report::render_json(nlohmann::json::parse(once)) == once);
}

}  // namespace

TEST_CASE("reports round-trip through JSON byte for byte") {
  const auto d = make_decomposition(std::vector<WeightBlock>{{-1, 1}, {0, 2}, {2, 1}});
  check_round_trip(report::chambers(d));
  check_round_trip(report::bb(d));
  check_round_trip(report::flips(d));
  check_round_trip(report::quotient(d, std::nullopt));
  check_round_trip(report::quotient(two(0, 1), make_rational(1, 2)));
  check_round_trip(report::cstar_stability(d, SupportPattern::from_mask(5), make_rational(1, 2)));
  const auto a = TorusAction::make(2, {{-1, 0}, {1, 0}, {0, 1}});
  check_round_trip(report::torus_stability(a, SupportPattern::from_mask(7), {make_rational(0), make_rational(1, 2)}));
  check_round_trip(report::example_flipsex(0, 1));
  check_round_trip(report::example_two_block(0, 1));
}

TEST_CASE("report contents") {
  const auto q = report::quotient(two(0, 1), make_rational(1, 2));
  const auto& item = q.data["quotients"][0]["quotient"];
  CHECK(item["type"] == "two_block_product");
  CHECK(item["bidegree"] == nlohmann::json::array({1, 1}));
  CHECK(item["linearization"]["k"] == 2);

  const auto c = report::chambers(make_decomposition(std::vector<WeightBlock>{{1, 1}, {2, 1}}));
  CHECK(c.data["count"] == 4);
  CHECK(c.data["chambers"][1]["representative"] == "3/2");
  CHECK(c.data["chambers"][3]["representative"] == "inf");

  const auto f = report::example_flipsex(0, 1);
  CHECK(f.text.find("counts: (6, 4)") != std::string::npos);
  CHECK(f.data["notions_on_quotient"] == 6);

  const auto dot = report::bb_dot(make_decomposition(std::vector<WeightBlock>{{0, 1}, {1, 1}, {2, 1}}));
  CHECK(dot.find("F1 -> F3 [label=\"2\"]") != std::string::npos);
}
