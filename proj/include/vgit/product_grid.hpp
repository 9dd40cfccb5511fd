#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgit/torus_product.hpp"

namespace vgit {

/// Instance family for product checks.
///
/// Exhaustive mode enumerates every set of at most `max_dim` distinct weight
/// vectors in [-weight_bound, weight_bound]^2, each taken as a rank-2 action
/// with full support. Stability depends only on the set of supported weights,
/// so this covers every (action, support) pair with up to max_dim coordinates.
/// With random_actions > 0, that many random actions (repeats allowed) are
/// drawn instead and every support of each is checked.
struct GridSpec {
  std::size_t max_dim = 3;
  std::int64_t weight_bound = 1;
  std::int64_t max_denominator = 2;
  std::int64_t numerator_bound = 8;
  std::size_t random_actions = 0;
  std::uint64_t seed = 0;
};

/// Parses "dims=D,wmax=W,qmax=Q[,pmax=P][,random=N]".
GridSpec parse_grid_spec(std::string_view text);

/// Distinct p/q with |p| <= numerator_bound and 1 <= q <= max_denominator, sorted.
std::vector<Rational> slope_grid(std::int64_t numerator_bound, std::int64_t max_denominator);

struct GridReport {
  std::size_t supports = 0;         // (action, support) pairs
  std::size_t slope_instances = 0;  // (action, support, eta_h) triples
  std::size_t semistable_agree = 0;
  std::size_t polystable_agree = 0;
  std::size_t scan_semistable_holds = 0;
  std::size_t scan_polystable_holds = 0;
  std::vector<std::string> failures;  // first few, for diagnostics

  bool all_agree() const {
    return semistable_agree == slope_instances && polystable_agree == slope_instances &&
           scan_semistable_holds == supports && scan_polystable_holds == supports;
  }
  void merge(const GridReport& other);
};

/// Commuting-principle and chamber-scan checks for one action over the given supports and slopes.
GridReport check_action(const TorusAction& action, const std::vector<SupportPattern>& supports,
                        const std::vector<Rational>& etas);

/// Runs the whole family, fanning out over hardware threads; results are merged in input order.
GridReport run_product_grid(const GridSpec& spec);

}  // namespace vgit
