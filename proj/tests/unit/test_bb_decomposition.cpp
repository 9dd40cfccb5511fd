#include <doctest.h>

#include <map>

#include "vgit/bb_decomposition.hpp"
#include "vgit/cstar_stability.hpp"

using namespace vgit;

namespace {

WeightDecomposition decomp(std::initializer_list<WeightBlock> blocks) {
  return make_decomposition(std::vector<WeightBlock>(blocks));
}

SupportPattern supp(std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> v;
  for (auto i : one_based) v.push_back(i - 1);
  return SupportPattern::from_indices(v);
}

}  // namespace

TEST_CASE("two blocks") {
  const auto data = bb_data(decomp({{0, 2}, {1, 1}}));
  REQUIRE(data.fixed_components.size() == 2);
  CHECK(data.fixed_components[0].projective_dim == 1);
  CHECK(data.fixed_components[1].projective_dim == 0);
  CHECK(data.source() == 0);
  CHECK(data.sink() == 1);
  REQUIRE(data.strata.size() == 1);
  CHECK(data.strata[0].supports == std::vector{supp({1, 2})});
}

TEST_CASE("single block has no strata") {
  const auto data = bb_data(decomp({{0, 1}}));
  CHECK(data.fixed_components.size() == 1);
  CHECK(data.strata.empty());
  CHECK_THROWS_AS(u_set(decomp({{0, 1}}), 0), InvalidInput);
}

TEST_CASE("three blocks: strata, flow limits, U sets") {
  const auto d = decomp({{0, 1}, {1, 1}, {2, 1}});
  CHECK(stratum_supports(d, 0, 1) == std::vector{supp({1, 2})});
  CHECK(stratum_supports(d, 1, 2) == std::vector{supp({2, 3})});
  CHECK(stratum_supports(d, 0, 2) == std::vector{supp({1, 3}), supp({1, 2, 3})});
  CHECK(stratum_supports(d, 2, 0).empty());
  CHECK(stratum_supports(d, 1, 1).empty());
  CHECK(flow_limits(d, supp({1, 3})).at_zero == 0);
  CHECK(flow_limits(d, supp({1, 3})).at_infinity == 2);
  CHECK(flow_limits(d, supp({2})).at_zero == 1);
  CHECK(flow_limits(d, supp({2})).at_infinity == 1);
  CHECK(u_set(d, 0) == std::vector{supp({1, 2}), supp({1, 3}), supp({1, 2, 3})});
  CHECK(u_set(d, 1) == std::vector{supp({1, 3}), supp({2, 3}), supp({1, 2, 3})});
  CHECK(u_set(decomp({{0, 1}, {1, 1}}), 0) == std::vector{supp({1, 2})});
  CHECK_THROWS_AS(u_set(d, 2), InvalidInput);
}

TEST_CASE("property: partition, flow order, emptiness, U_i equals the open-chamber locus") {
  for (std::uint64_t mask = 1; mask < (1U << 9); ++mask) {
    if (__builtin_popcountll(mask) > 6) continue;
    std::vector<WeightBlock> raw;
    for (int i = 0; i < 9; ++i)
      if ((mask >> i) & 1U) raw.push_back({i - 4, 1 + i % 2});
    const auto d = make_decomposition(raw);
    const auto data = bb_data(d);
    const std::size_t m = d.size();

    std::map<SupportPattern, int> hits;
    for (std::size_t i = 0; i < m; ++i) {
      hits[SupportPattern::from_indices(std::vector<std::size_t>{i})] += 1;
      for (std::size_t j = 0; j <= i; ++j) CHECK(stratum_supports(d, i, j).empty());
    }
    for (const auto& st : data.strata) {
      CHECK(st.source < st.target);
      CHECK_FALSE(st.supports.empty());
      for (const auto& s : st.supports) hits[s] += 1;
    }
    const auto all = all_supports(m);
    // Fixed classes are supports inside a single block; the rest lie in one stratum.
    for (const auto& s : all) {
      const auto lim = flow_limits(d, s);
      CHECK(lim.at_zero <= lim.at_infinity);
      CHECK((lim.at_zero == lim.at_infinity) == (s.count() == 1));
      CHECK(hits[s] == 1);
    }
    CHECK(hits.size() == all.size());

    const auto cs = chambers(d);
    for (std::size_t cut = 0; cut + 1 < m; ++cut) {
      CHECK(u_set(d, cut) == semistable_supports(d, cs[2 * cut + 1]));
    }
  }
}
