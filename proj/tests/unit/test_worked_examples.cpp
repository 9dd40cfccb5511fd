#include <doctest.h>

#include <set>

#include "vgit/worked_examples.hpp"

using namespace vgit;

TEST_CASE("flipsex data") {
  const auto& data = flipsex_data();
  CHECK(data.generators[0].degree == 4);
  CHECK(data.generators[1].degree == 6);
  CHECK(data.generators[2].degree == 4);
  CHECK(data.generators[3].degree == 4);
  REQUIRE(data.induced_weights.size() == 9);
  CHECK(to_string(data.induced_weights[0]) == "6d1+6d2");
  CHECK(to_string(data.induced_weights[6]) == "12d1");
  for (const auto& f : data.induced_weights) CHECK(f.at(1, 1) == 12);
  for (const auto& e : data.attainable_extremes) {
    CHECK(std::find(data.induced_weights.begin(), data.induced_weights.end(), e) != data.induced_weights.end());
  }
}

TEST_CASE("degree-12 monomials in I, J, D, R produce exactly the listed weights") {
  const auto& data = flipsex_data();
  std::set<std::pair<std::int64_t, std::int64_t>> listed, derived;
  for (const auto& f : data.induced_weights) listed.insert({f.c1, f.c2});
  // Independent enumeration: all exponent vectors of total degree 12.
  const std::int64_t deg[4] = {4, 6, 4, 4};
  const std::int64_t c1[4] = {2, 3, 4, 1}, c2[4] = {2, 3, 0, 3};
  for (std::int64_t i = 0; i <= 3; ++i)
    for (std::int64_t j = 0; j <= 2; ++j)
      for (std::int64_t d = 0; d <= 3; ++d)
        for (std::int64_t r = 0; r <= 3; ++r) {
          if (i * deg[0] + j * deg[1] + d * deg[2] + r * deg[3] != 12) continue;
          derived.insert({i * c1[0] + j * c1[1] + d * c1[2] + r * c1[3], i * c2[0] + j * c2[1] + d * c2[2] + r * c2[3]});
        }
  CHECK(derived == listed);
  for (const auto& mono : data.degree12_monomials) {
    const auto w = monomial_weight(mono);
    CHECK(listed.count({w.c1, w.c2}) == 1);
  }
}

TEST_CASE("notion counts") {
  CHECK(flipsex_notion_counts(0, 1).on_quotient == 6);
  CHECK(flipsex_notion_counts(0, 1).on_projective_space == 4);
  CHECK(flipsex_notion_counts(1, 3).on_quotient == 6);
  CHECK(flipsex_notion_counts(-1, 1).on_quotient == 6);
  CHECK_THROWS_AS(flipsex_notion_counts(2, 2), InvalidInput);
}

TEST_CASE("property: generic pairs give (6, 4); coincidences give fewer") {
  const auto& data = flipsex_data();
  std::size_t generic = 0, coincident = 0;
  for (std::int64_t d1 = -5; d1 <= 5; ++d1)
    for (std::int64_t d2 = -5; d2 <= 5; ++d2) {
      if (d1 == d2) continue;
      std::set<std::int64_t> values;
      for (const auto& f : data.attainable_extremes) values.insert(f.at(d1, d2));
      const auto counts = flipsex_notion_counts(d1, d2);
      CHECK(counts.on_projective_space == 4);
      if (values.size() == 3) {
        ++generic;
        CHECK(counts.on_quotient == 6);
      } else {
        ++coincident;
        CHECK(counts.on_quotient == 2 * values.size());
      }
    }
  CHECK(generic > 0);
  MESSAGE("coincident pairs: " << coincident);
}

TEST_CASE("two-block report") {
  const auto rep = example124_report(0, 1);
  REQUIRE(rep.chambers.size() == 4);
  CHECK(rep.sample_linearization == Linearization(2, 1));
  CHECK(rep.sample_bidegree == Bidegree{1, 1});
  REQUIRE(std::holds_alternative<TwoBlockProduct>(rep.quotients[1].kind));
  REQUIRE(rep.realizations.size() == 2);
  CHECK(rep.realizations[1].first == Bidegree{2, 3});
  CHECK(rep.realizations[1].second.linearization == Linearization(5, 3));
  CHECK(rep.realizations[1].second.multiple == 1);

  const auto other = example124_report(1, 2);
  CHECK(std::get<SingleFixed>(other.quotients[0].kind).block == 0);
  CHECK(std::get<SingleFixed>(other.quotients[2].kind).block == 1);
  CHECK(std::holds_alternative<EmptyQuotient>(other.quotients[3].kind));
  CHECK_THROWS_AS(example124_report(2, 2), InvalidInput);
}
