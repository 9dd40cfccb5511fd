#include "vgit/flips.hpp"

#include <algorithm>

namespace vgit {

FlipChain flip_chain(const WeightDecomposition& decomp) {
  FlipChain chain{{}, {}, chambers(decomp).back()};
  for (const auto& chamber : chambers(decomp)) {
    if (chamber.kind == Chamber::Kind::EmptyComplement) continue;
    chain.steps.push_back({chamber, semistable_supports(decomp, chamber), quotient_descriptor(decomp, chamber)});
  }
  const std::size_t m = decomp.size();
  for (std::size_t i = 0; i < m; ++i) {
    WallCrossing crossing{i, {}, {}, {}};
    for (std::size_t mu = 0; mu < i; ++mu) crossing.removed.emplace_back(mu, i);
    for (std::size_t nu = i + 1; nu < m; ++nu) crossing.added.emplace_back(i, nu);
    // Nonempty subsets of block i alone: at support level just {i}.
    crossing.wall_only.push_back(SupportPattern::from_mask(std::uint64_t{1} << i));
    chain.crossings.push_back(std::move(crossing));
  }
  return chain;
}

std::size_t count_stability_notions(std::span<const Rational> critical_values) {
  if (critical_values.empty()) throw InvalidInput("need at least one critical value");
  std::vector<Rational> distinct(critical_values.begin(), critical_values.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return 2 * distinct.size();
}

}  // namespace vgit
