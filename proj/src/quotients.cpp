#include "vgit/quotients.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace vgit {

namespace {

void require_two_blocks(const WeightDecomposition& decomp) {
  if (decomp.size() != 2) {
    throw InvalidInput("two-block calculus needs m = 2 weight blocks, got m = " + std::to_string(decomp.size()));
  }
}

GeneralStratified stratified(const WeightDecomposition& decomp, const Chamber& chamber) {
  GeneralStratified out;
  const std::size_t m = decomp.size();
  if (chamber.kind == Chamber::Kind::Open) {
    // U_i: mu <= i < nu.
    for (std::size_t mu = 0; mu <= chamber.block; ++mu) {
      for (std::size_t nu = chamber.block + 1; nu < m; ++nu) out.strata.emplace_back(mu, nu);
    }
  } else {
    // Wall d_i: mu <= i <= nu, mu < nu, plus the fixed component itself.
    for (std::size_t mu = 0; mu <= chamber.block; ++mu) {
      for (std::size_t nu = std::max(chamber.block, mu + 1); nu < m; ++nu) out.strata.emplace_back(mu, nu);
    }
    out.fixed_block = chamber.block;
  }
  return out;
}

QuotientDescriptor describe_quotient(const WeightDecomposition& decomp, const Chamber& chamber,
                                     const Linearization& lin) {
  const std::size_t m = decomp.size();
  switch (chamber.kind) {
    case Chamber::Kind::EmptyComplement:
      return {chamber, EmptyQuotient{}};
    case Chamber::Kind::Wall:
      if (chamber.block == 0 || chamber.block + 1 == m) return {chamber, SingleFixed{chamber.block}};
      break;
    case Chamber::Kind::Open:
      if (m == 2) return {chamber, TwoBlockProduct{lin, two_block_polarization(decomp, lin)}};
      break;
  }
  return {chamber, stratified(decomp, chamber)};
}

}  // namespace

Bidegree two_block_polarization(const WeightDecomposition& decomp, const Linearization& lin) {
  require_two_blocks(decomp);
  const std::int64_t d1 = decomp.weight(0);
  const std::int64_t d2 = decomp.weight(1);
  const Rational eta = lin.slope();
  if (!(make_rational(d1) < eta && eta < make_rational(d2))) {
    throw InvalidInput("slope " + to_string(eta) + " is not strictly inside (" + std::to_string(d1) + "," +
                       std::to_string(d2) + "); no product quotient there");
  }
  return {lin.k() * d2 - lin.d(), -lin.k() * d1 + lin.d()};
}

BidegreeRealization realize_bidegree(const WeightDecomposition& decomp, const Bidegree& target) {
  require_two_blocks(decomp);
  if (target.first < 1 || target.second < 1) throw InvalidInput("target bidegree entries must be positive");
  // Adding the two equations gives k * (d_2 - d_1) = r * (a + b).
  const std::int64_t spread = decomp.weight(1) - decomp.weight(0);
  const std::int64_t sum = target.first + target.second;
  const std::int64_t g = std::gcd(sum, spread);
  const std::int64_t r = spread / g;
  const std::int64_t k = sum / g;
  const std::int64_t d = k * decomp.weight(1) - r * target.first;
  return {Linearization(k, d), r};
}

QuotientDescriptor quotient_descriptor(const WeightDecomposition& decomp, const Chamber& chamber) {
  const Slope rep = representative_slope(decomp, chamber);
  const Linearization lin = rep.is_infinite() ? Linearization(1, 0) : Linearization::from_slope(rep.value());
  return describe_quotient(decomp, chamber, lin);
}

QuotientDescriptor quotient_descriptor(const WeightDecomposition& decomp, const Linearization& lin) {
  const auto all = chambers(decomp);
  return describe_quotient(decomp, all[chamber_of(decomp, Slope(lin.slope()))], lin);
}

}  // namespace vgit
