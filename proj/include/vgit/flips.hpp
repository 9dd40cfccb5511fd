#pragma once

#include <span>
#include <utility>
#include <vector>

#include "vgit/cstar_stability.hpp"
#include "vgit/quotients.hpp"

namespace vgit {

struct FlipStep {
  Chamber chamber;
  std::vector<SupportPattern> semistable;
  QuotientDescriptor quotient;
};

/// Change of the semistable locus when the slope crosses the wall at block i
/// from below: strata C_{mu,i} leave, strata C_{i,nu} enter, and the fixed
/// classes of F_i are semistable only on the wall itself.
struct WallCrossing {
  std::size_t wall_block;
  std::vector<std::pair<std::size_t, std::size_t>> removed;
  std::vector<std::pair<std::size_t, std::size_t>> added;
  std::vector<SupportPattern> wall_only;
};

struct FlipChain {
  /// Chambers 1 .. 2m-1 by increasing slope; the empty chamber is not a step.
  std::vector<FlipStep> steps;
  std::vector<WallCrossing> crossings;
  Chamber empty_chamber;
};

FlipChain flip_chain(const WeightDecomposition& decomp);

/// 2 * (number of distinct critical values). Throws InvalidInput on an empty list.
std::size_t count_stability_notions(std::span<const Rational> critical_values);

}  // namespace vgit
