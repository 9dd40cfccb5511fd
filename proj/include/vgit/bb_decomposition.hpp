#pragma once

#include <cstdint>
#include <vector>

#include "vgit/weights.hpp"

namespace vgit {

/// F_i = P(W_i), a fixed component of the induced C*-action on P(W).
struct FixedComponent {
  std::size_t block;
  std::int64_t weight;
  std::int64_t projective_dim;  // dim W_i - 1
};

/// C_ij: points flowing out of F_i as z -> 0 and into F_j as z -> infinity.
/// At support level these are the patterns with min block i and max block j.
struct Stratum {
  std::size_t source;
  std::size_t target;
  std::vector<SupportPattern> supports;
};

/// Bialynicki-Birula data. Fixed components are ordered F_1 < ... < F_m.
struct BBData {
  std::vector<FixedComponent> fixed_components;
  /// One entry per pair i < j, ordered lexicographically.
  std::vector<Stratum> strata;

  std::size_t source() const { return fixed_components.front().block; }
  std::size_t sink() const { return fixed_components.back().block; }
};

BBData bb_data(const WeightDecomposition& decomp);

/// Support patterns in C_ij; empty for i >= j.
std::vector<SupportPattern> stratum_supports(const WeightDecomposition& decomp, std::size_t i, std::size_t j);

struct FlowLimits {
  std::size_t at_zero;      // block of lim_{z->0} z.x
  std::size_t at_infinity;  // block of lim_{z->inf} z.x
};

FlowLimits flow_limits(const WeightDecomposition& decomp, const SupportPattern& s);

/// U_cut: union of C_{mu,nu} with mu <= cut < nu, for 0 <= cut < m - 1.
/// Equivalently the supports with min <= cut < max.
std::vector<SupportPattern> u_set(const WeightDecomposition& decomp, std::size_t cut);

}  // namespace vgit
