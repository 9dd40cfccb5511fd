#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vgit/cstar_stability.hpp"
#include "vgit/exact_lp.hpp"
#include "vgit/product_grid.hpp"
#include "vgit/torus_product.hpp"

using namespace vgit;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

SupportPattern supp(std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> v;
  for (auto i : one_based) v.push_back(i - 1);
  return SupportPattern::from_indices(v);
}

SupportPattern full(const TorusAction& a) { return SupportPattern::from_mask((1ULL << a.total_dim()) - 1); }

std::vector<oracle::Point> points(const TorusAction& a, const SupportPattern& s) {
  std::vector<oracle::Point> out;
  for (auto j : s.indices()) out.push_back({q(a.weight(j)[0]), q(a.weight(j)[1])});
  return out;
}

/// Two-step test from the brute-force pieces: G at slope 0, then the range of
/// normalized H-weights of G-invariant monomials.
bool brute_two_step(const TorusAction& a, const SupportPattern& s, const Rational& eta, bool poly) {
  const auto pts = points(a, s);
  Rational gmin = pts[0].x, gmax = pts[0].x;
  for (const auto& p : pts) {
    gmin = std::min(gmin, p.x);
    gmax = std::max(gmax, p.x);
  }
  const bool g_ok = poly ? (gmin == gmax ? gmin == 0 : (gmin < 0 && 0 < gmax)) : (gmin <= 0 && 0 <= gmax);
  const auto range = oracle::invariant_h_range(pts);
  if (!g_ok || !range) return false;
  const auto& [lo, hi] = *range;
  if (!poly) return lo <= eta && eta <= hi;
  return lo == hi ? eta == lo : (lo < eta && eta < hi);
}

}  // namespace

TEST_CASE("action construction") {
  const auto a = TorusAction::make(2, {{1, 0}, {0, 1}, {1, 0}});
  CHECK(a.rank() == 2);
  CHECK(a.total_dim() == 3);
  const auto g = a.axis_decomposition(0);
  REQUIRE(g.size() == 2);
  CHECK(g.dim(1) == 2);
  CHECK(a.axis_support(0, supp({1})) == supp({2}));
  CHECK_THROWS_AS(TorusAction::make(2, {{1, 0}, {1}}), InvalidInput);
  CHECK_THROWS_AS(TorusAction::make(0, {{}}), InvalidInput);
  CHECK_THROWS_AS(TorusAction::make(1, {}), InvalidInput);
  CHECK_THROWS_AS(torus_semistable(a, supp({1}), {q(0)}), InvalidInput);
  CHECK_THROWS_AS(torus_semistable(a, supp({4}), {q(0), q(0)}), InvalidInput);
}

TEST_CASE("hull membership examples") {
  const auto one = TorusAction::make(1, {{-1}, {3}});
  CHECK(torus_semistable(one, supp({1, 2}), {q(0)}));
  const auto plane = TorusAction::make(2, {{1, 0}, {0, 1}});
  CHECK(torus_semistable(plane, supp({1, 2}), {q(1, 2), q(1, 2)}));
  CHECK_FALSE(torus_semistable(plane, supp({1, 2}), {q(1), q(1)}));
  CHECK(torus_semistable(plane, supp({2}), {q(0), q(1)}));
  const auto segment = TorusAction::make(1, {{1}, {2}});
  CHECK(torus_polystable(segment, supp({1, 2}), {q(3, 2)}));
  CHECK_FALSE(torus_polystable(segment, supp({1, 2}), {q(1)}));
  CHECK(torus_polystable(segment, supp({1}), {q(1)}));
}

TEST_CASE("two-step examples") {
  const auto a = TorusAction::make(2, {{-1, 0}, {1, 0}, {0, 1}});
  const auto s = full(a);
  CHECK(two_step_semistable(a, s, q(1, 2)));
  CHECK_FALSE(two_step_semistable(a, s, q(2)));
  const auto lone = TorusAction::make(2, {{1, 0}});
  CHECK_FALSE(two_step_semistable(lone, supp({1}), q(0)));
  CHECK_FALSE(two_step_semistable(lone, supp({1}), q(5)));

  for (const auto& eta : {q(1, 2), q(2), q(0)}) {
    for (const auto notion : {StabilityNotion::Semistable, StabilityNotion::Polystable}) {
      CHECK(commuting_principle_check(a, s, eta, notion).agree);
    }
  }
  const auto r = residual_slope_range(a, s, kAxisG, q(0), kAxisH);
  REQUIRE(r);
  CHECK(r->min == q(0));
  CHECK(r->max == q(1));

  const auto point = TorusAction::make(2, {{0, 3}});
  for (std::int64_t c = 0; c <= 6; ++c) {
    const auto check = commuting_principle_check(point, supp({1}), q(c));
    CHECK(check.direct == (c == 3));
    CHECK(check.two_step == (c == 3));
  }
}

TEST_CASE("chamber scan examples") {
  const auto a = TorusAction::make(2, {{-1, 0}, {1, 0}, {0, 1}});
  const auto scan = chamber_scan_check(a, full(a));
  CHECK(scan.direct);
  CHECK(scan.scanned);
  CHECK(scan.holds);
  REQUIRE(scan.witness);
  CHECK(torus_semistable(a, full(a), {q(0), scan.witness->eta}));
  const auto lone = chamber_scan_check(a, supp({3}));
  CHECK(lone.direct);
  CHECK(lone.holds);
  const auto poly = chamber_scan_check(a, full(a), StabilityNotion::Polystable);
  CHECK(poly.holds);
}

TEST_CASE("one representative per H-chamber is not enough; refined representatives are") {
  // G-weights -2, 1 with H-weights -2, -1: the only G-invariant monomial has
  // normalized H-weight -4/3, strictly inside an H-chamber.
  const auto a = TorusAction::make(2, {{-2, -2}, {1, -1}});
  const auto s = full(a);
  const auto crit = product_critical_values(a);
  CHECK(std::find(crit.begin(), crit.end(), q(-4, 3)) != crit.end());
  const auto scan = chamber_scan_check(a, s);
  CHECK(scan.direct);
  CHECK(scan.holds);
  REQUIRE(scan.witness);
  CHECK(scan.witness->eta == q(-4, 3));
  // The H-chamber midpoint -3/2 alone misses the residual G-test.
  const auto at_mid = residual_slope_range(a, s, kAxisH, q(-3, 2), kAxisG);
  REQUIRE(at_mid);
  CHECK_FALSE(at_mid->contains(q(0)));
}

TEST_CASE("property: LP optima are exact, attained and extreme") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<std::int64_t> w(-3, 3);
  std::uniform_int_distribution<std::size_t> n(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::vector<std::int64_t>> weights(n(rng));
    for (auto& v : weights) v = {w(rng), w(rng)};
    const auto a = TorusAction::make(2, weights);
    const auto s = SupportPattern::from_mask(1 + rng() % ((1ULL << a.total_dim()) - 1));
    const auto range = residual_slope_range(a, s, kAxisG, q(0), kAxisH);
    const auto brute = oracle::invariant_h_range(points(a, s));
    REQUIRE(range.has_value() == brute.has_value());
    if (!range) continue;
    CHECK(range->min == brute->first);
    CHECK(range->max == brute->second);
    // Re-substitute the optimal vertices.
    const auto idx = s.indices();
    for (const auto* arg : {&range->argmin, &range->argmax}) {
      REQUIRE(arg->size() == idx.size());
      Rational total = 0, g = 0, h = 0;
      for (std::size_t t = 0; t < idx.size(); ++t) {
        CHECK((*arg)[t] >= 0);
        total += (*arg)[t];
        g += (*arg)[t] * a.weight(idx[t])[0];
        h += (*arg)[t] * a.weight(idx[t])[1];
      }
      CHECK(total == 1);
      CHECK(g == 0);
      CHECK(h == (arg == &range->argmin ? range->min : range->max));
    }
  }
}

TEST_CASE("property: rank 1 reduces to the C* criterion") {
  for (std::int64_t lo = -3; lo <= 3; ++lo)
    for (std::int64_t hi = lo; hi <= 3; ++hi)
      for (std::int64_t mid = -3; mid <= 3; ++mid) {
        const auto a = TorusAction::make(1, {{lo}, {mid}, {hi}});
        const auto dec = a.axis_decomposition(0);
        for (const auto& s : all_supports(3)) {
          const auto blocks = a.axis_support(0, s);
          for (std::int64_t num = -8; num <= 8; ++num) {
            const Rational eta = q(num, 2);
            CHECK(torus_semistable(a, s, {eta}) == is_semistable(dec, blocks, eta));
            CHECK(torus_polystable(a, s, {eta}) == is_polystable(dec, blocks, eta));
          }
        }
      }
}

TEST_CASE("property: direct and two-step sides match brute-force geometry") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> w(-3, 3);
  std::uniform_int_distribution<std::size_t> n(1, 5);
  const auto etas = slope_grid(8, 4);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<std::vector<std::int64_t>> weights(n(rng));
    for (auto& v : weights) v = {w(rng), w(rng)};
    const auto a = TorusAction::make(2, weights);
    for (const auto& s : all_supports(a.total_dim())) {
      const auto pts = points(a, s);
      for (const auto& eta : etas) {
        const oracle::Point target{q(0), eta};
        const bool hull = oracle::hull_contains(pts, target);
        const bool relint = oracle::hull_relint_contains(pts, target);
        CHECK(torus_semistable(a, s, {q(0), eta}) == hull);
        CHECK(torus_polystable(a, s, {q(0), eta}) == relint);
        CHECK(two_step_semistable(a, s, eta) == brute_two_step(a, s, eta, false));
        CHECK(two_step_polystable(a, s, eta) == brute_two_step(a, s, eta, true));
        CHECK(hull == brute_two_step(a, s, eta, false));
        CHECK(relint == brute_two_step(a, s, eta, true));
      }
    }
  }
}

TEST_CASE("property: commuting principle and chamber scan on random actions") {
  GridSpec spec;
  spec.max_dim = 6;
  spec.weight_bound = 3;
  spec.max_denominator = 4;
  spec.numerator_bound = 16;
  spec.random_actions = 40;
  spec.seed = 2024;
  const auto report = run_product_grid(spec);
  CHECK(report.supports > 0);
  CHECK(report.failures.empty());
  CHECK(report.all_agree());
}

TEST_CASE("grid spec parsing") {
  const auto g = parse_grid_spec("dims=5,wmax=2,qmax=4");
  CHECK(g.max_dim == 5);
  CHECK(g.weight_bound == 2);
  CHECK(g.max_denominator == 4);
  CHECK(g.numerator_bound == 8);
  CHECK(parse_grid_spec("dims=2,wmax=1,qmax=1,pmax=3,random=7").random_actions == 7);
  CHECK_THROWS(parse_grid_spec("dims=x"));
  CHECK_THROWS(parse_grid_spec("bogus=1"));
  CHECK(slope_grid(2, 2) == std::vector{q(-2), q(-1), q(-1, 2), q(0), q(1, 2), q(1), q(2)});
  CHECK(slope_grid(8, 4).size() == 45);
}
