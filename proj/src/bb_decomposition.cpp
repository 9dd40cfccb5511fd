#include "vgit/bb_decomposition.hpp"

#include <algorithm>
#include <string>

namespace vgit {

BBData bb_data(const WeightDecomposition& decomp) {
  BBData data;
  for (std::size_t i = 0; i < decomp.size(); ++i) {
    data.fixed_components.push_back({i, decomp.weight(i), decomp.dim(i) - 1});
  }
  for (std::size_t i = 0; i < decomp.size(); ++i) {
    for (std::size_t j = i + 1; j < decomp.size(); ++j) {
      data.strata.push_back({i, j, stratum_supports(decomp, i, j)});
    }
  }
  return data;
}

std::vector<SupportPattern> stratum_supports(const WeightDecomposition& decomp, std::size_t i, std::size_t j) {
  std::vector<SupportPattern> out;
  if (i >= j || j >= decomp.size()) return out;
  // Both endpoint blocks present, any subset of the blocks strictly between.
  const std::uint64_t ends = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
  const std::size_t gap = j - i - 1;
  if (gap > 24) throw InvalidInput("refusing to enumerate a stratum with 2^" + std::to_string(gap) + " patterns");
  for (std::uint64_t inner = 0; inner < (std::uint64_t{1} << gap); ++inner) {
    out.push_back(SupportPattern::from_mask(ends | (inner << (i + 1))));
  }
  return out;
}

FlowLimits flow_limits(const WeightDecomposition& decomp, const SupportPattern& s) {
  if (!s.fits(decomp.size())) throw InvalidInput("support " + to_string(s) + " does not fit the decomposition");
  // z.w scales block i by z^{d_i}: the lowest weight dominates as z -> 0.
  return {s.min_index(), s.max_index()};
}

std::vector<SupportPattern> u_set(const WeightDecomposition& decomp, std::size_t cut) {
  if (cut + 1 >= decomp.size()) {
    throw InvalidInput("U_i needs 1 <= i <= m-1; got i = " + std::to_string(cut + 1) + " with m = " +
                       std::to_string(decomp.size()));
  }
  std::vector<SupportPattern> out;
  for (std::size_t mu = 0; mu <= cut; ++mu) {
    for (std::size_t nu = cut + 1; nu < decomp.size(); ++nu) {
      auto stratum = stratum_supports(decomp, mu, nu);
      out.insert(out.end(), stratum.begin(), stratum.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vgit
