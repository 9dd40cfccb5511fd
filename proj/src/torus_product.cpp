#include "vgit/torus_product.hpp"

#include <algorithm>
#include <string>

#include "vgit/cstar_stability.hpp"
#include "vgit/exact_lp.hpp"

namespace vgit {

namespace {

void check_inputs(const TorusAction& action, const SupportPattern& support) {
  if (!support.fits(action.total_dim())) {
    throw InvalidInput("support " + to_string(support) + " exceeds the " + std::to_string(action.total_dim()) +
                       " coordinates of the action");
  }
}

void check_slope(const TorusAction& action, const CharacterSlope& slope) {
  if (slope.size() != action.rank()) {
    throw InvalidInput("slope has " + std::to_string(slope.size()) + " entries, action rank is " +
                       std::to_string(action.rank()));
  }
}

void require_rank_two(const TorusAction& action) {
  if (action.rank() != 2) throw InvalidInput("product checks need a rank-2 action (G axis, H axis)");
}

// Hull membership: lambda >= 0, sum lambda = 1, sum lambda_j w_j = target.
bool in_hull(const TorusAction& action, const std::vector<std::size_t>& coords, std::span<const Rational> target,
             std::span<const std::size_t> axes) {
  lp::LinearProgram program;
  program.objective.assign(coords.size(), Rational(0));
  program.rows.emplace_back(coords.size(), Rational(1));
  program.rhs.emplace_back(1);
  for (std::size_t a = 0; a < axes.size(); ++a) {
    std::vector<Rational> row;
    row.reserve(coords.size());
    for (auto j : coords) row.emplace_back(static_cast<long>(action.weight(j)[axes[a]]));
    program.rows.push_back(std::move(row));
    program.rhs.push_back(target[a]);
  }
  return lp::minimize(program).status == lp::Status::Optimal;
}

// Relative interior: maximize t with lambda_j = t + mu_j, mu >= 0, t >= 0.
bool in_relative_interior(const TorusAction& action, const std::vector<std::size_t>& coords,
                          std::span<const Rational> target, std::span<const std::size_t> axes) {
  const std::size_t n = coords.size();
  lp::LinearProgram program;
  program.objective.assign(n + 1, Rational(0));
  program.objective[n] = 1;
  std::vector<Rational> sum_row(n + 1, Rational(1));
  sum_row[n] = static_cast<long>(n);
  program.rows.push_back(std::move(sum_row));
  program.rhs.emplace_back(1);
  for (std::size_t a = 0; a < axes.size(); ++a) {
    std::vector<Rational> row(n + 1);
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = static_cast<long>(action.weight(coords[i])[axes[a]]);
      total += row[i];
    }
    row[n] = total;
    program.rows.push_back(std::move(row));
    program.rhs.push_back(target[a]);
  }
  const auto solution = lp::maximize(program);
  return solution.status == lp::Status::Optimal && sgn(solution.objective_value) > 0;
}

bool g_stable_at_zero(const TorusAction& action, const std::vector<std::size_t>& coords, StabilityNotion notion) {
  const Rational zero = 0;
  const std::size_t axis = kAxisG;
  return notion == StabilityNotion::Semistable ? in_hull(action, coords, {&zero, 1}, {&axis, 1})
                                               : in_relative_interior(action, coords, {&zero, 1}, {&axis, 1});
}

bool range_accepts(const SlopeRange& range, const Rational& v, StabilityNotion notion) {
  return notion == StabilityNotion::Semistable ? range.contains(v) : range.relatively_contains(v);
}

}  // namespace

TorusAction TorusAction::make(std::size_t rank, std::vector<std::vector<std::int64_t>> coordinate_weights) {
  if (rank < 1) throw InvalidInput("torus rank must be at least 1");
  if (coordinate_weights.empty()) throw InvalidInput("torus action needs at least one coordinate");
  if (coordinate_weights.size() > SupportPattern::kMaxIndex) throw InvalidInput("more than 64 coordinates");
  for (std::size_t j = 0; j < coordinate_weights.size(); ++j) {
    if (coordinate_weights[j].size() != rank) {
      throw InvalidInput("coordinate " + std::to_string(j + 1) + " has a weight of length " +
                         std::to_string(coordinate_weights[j].size()) + ", expected " + std::to_string(rank));
    }
  }
  return TorusAction(rank, std::move(coordinate_weights));
}

WeightDecomposition TorusAction::axis_decomposition(std::size_t axis) const {
  if (axis >= rank_) throw InvalidInput("axis out of range");
  std::vector<WeightBlock> blocks;
  for (const auto& w : weights_) blocks.push_back({w[axis], 1});
  return WeightDecomposition::make(blocks);
}

SupportPattern TorusAction::axis_support(std::size_t axis, const SupportPattern& coordinates) const {
  const WeightDecomposition decomp = axis_decomposition(axis);
  std::vector<std::size_t> blocks;
  for (auto j : coordinates.indices()) {
    const std::int64_t w = weight(j)[axis];
    for (std::size_t b = 0; b < decomp.size(); ++b) {
      if (decomp.weight(b) == w) blocks.push_back(b);
    }
  }
  return SupportPattern::from_indices(blocks);
}

bool torus_semistable(const TorusAction& action, const SupportPattern& support, const CharacterSlope& slope) {
  check_inputs(action, support);
  check_slope(action, slope);
  std::vector<std::size_t> axes(action.rank());
  for (std::size_t a = 0; a < axes.size(); ++a) axes[a] = a;
  return in_hull(action, support.indices(), slope, axes);
}

bool torus_polystable(const TorusAction& action, const SupportPattern& support, const CharacterSlope& slope) {
  check_inputs(action, support);
  check_slope(action, slope);
  std::vector<std::size_t> axes(action.rank());
  for (std::size_t a = 0; a < axes.size(); ++a) axes[a] = a;
  return in_relative_interior(action, support.indices(), slope, axes);
}

std::optional<SlopeRange> residual_slope_range(const TorusAction& action, const SupportPattern& support,
                                               std::size_t fixed_axis, const Rational& fixed_value,
                                               std::size_t measured_axis) {
  check_inputs(action, support);
  if (fixed_axis >= action.rank() || measured_axis >= action.rank()) throw InvalidInput("axis out of range");
  const auto coords = support.indices();
  lp::LinearProgram program;
  program.rows.emplace_back(coords.size(), Rational(1));
  program.rhs.emplace_back(1);
  std::vector<Rational> invariance;
  for (auto j : coords) {
    invariance.emplace_back(Rational(static_cast<long>(action.weight(j)[fixed_axis])) - fixed_value);
    program.objective.emplace_back(static_cast<long>(action.weight(j)[measured_axis]));
  }
  program.rows.push_back(std::move(invariance));
  program.rhs.emplace_back(0);

  auto low = lp::minimize(program);
  if (low.status != lp::Status::Optimal) return std::nullopt;
  auto high = lp::maximize(program);
  return SlopeRange{low.objective_value, high.objective_value, std::move(low.x), std::move(high.x)};
}

bool TwoStepProfile::accepts(const Rational& eta_h) const {
  return g_stable && h_range && range_accepts(*h_range, eta_h, notion);
}

TwoStepProfile two_step_profile(const TorusAction& action, const SupportPattern& support, StabilityNotion notion) {
  require_rank_two(action);
  check_inputs(action, support);
  TwoStepProfile profile{notion, g_stable_at_zero(action, support.indices(), notion), std::nullopt};
  if (profile.g_stable) profile.h_range = residual_slope_range(action, support, kAxisG, Rational(0), kAxisH);
  return profile;
}

bool two_step_stable(const TorusAction& action, const SupportPattern& support, const Rational& eta_h,
                     StabilityNotion notion) {
  return two_step_profile(action, support, notion).accepts(eta_h);
}

PrincipleCheck commuting_principle_check(const TorusAction& action, const SupportPattern& support,
                                         const Rational& eta_h, const TwoStepProfile& profile) {
  require_rank_two(action);
  const CharacterSlope slope{Rational(0), eta_h};
  const bool direct = profile.notion == StabilityNotion::Semistable ? torus_semistable(action, support, slope)
                                                                    : torus_polystable(action, support, slope);
  const bool two_step = profile.accepts(eta_h);
  return {direct, two_step, direct == two_step};
}

PrincipleCheck commuting_principle_check(const TorusAction& action, const SupportPattern& support,
                                         const Rational& eta_h, StabilityNotion notion) {
  return commuting_principle_check(action, support, eta_h, two_step_profile(action, support, notion));
}

std::vector<Rational> product_critical_values(const TorusAction& action) {
  require_rank_two(action);
  std::vector<Rational> values;
  const std::size_t n = action.total_dim();
  for (std::size_t a = 0; a < n; ++a) {
    values.emplace_back(static_cast<long>(action.weight(a)[kAxisH]));
    for (std::size_t b = 0; b < n; ++b) {
      const std::int64_t ga = action.weight(a)[kAxisG];
      const std::int64_t gb = action.weight(b)[kAxisG];
      if (!(ga < 0 && gb > 0)) continue;
      // Point of the segment [w_a, w_b] with G-weight 0.
      const std::int64_t ha = action.weight(a)[kAxisH];
      const std::int64_t hb = action.weight(b)[kAxisH];
      values.push_back(make_rational(gb * ha - ga * hb, gb - ga));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<Rational> product_chamber_representatives(const TorusAction& action) {
  const auto critical = product_critical_values(action);
  std::vector<Rational> reps;
  reps.emplace_back(critical.front() - 1);
  for (std::size_t i = 0; i < critical.size(); ++i) {
    reps.push_back(critical[i]);
    if (i + 1 < critical.size()) reps.emplace_back((critical[i] + critical[i + 1]) / 2);
  }
  reps.emplace_back(critical.back() + 1);
  return reps;
}

ChamberScanResult chamber_scan_check(const TorusAction& action, const SupportPattern& support,
                                     StabilityNotion notion) {
  require_rank_two(action);
  check_inputs(action, support);
  ChamberScanResult result{};
  result.direct = g_stable_at_zero(action, support.indices(), notion);

  const WeightDecomposition h_decomp = action.axis_decomposition(kAxisH);
  const SupportPattern h_support = action.axis_support(kAxisH, support);
  for (const auto& eta : product_chamber_representatives(action)) {
    const bool h_ok = notion == StabilityNotion::Semistable ? is_semistable(h_decomp, h_support, eta)
                                                            : is_polystable(h_decomp, h_support, eta);
    if (!h_ok) continue;
    // Residual test on the H-quotient: G-weights of monomials invariant for H at eta.
    const auto range = residual_slope_range(action, support, kAxisH, eta, kAxisG);
    if (range && range_accepts(*range, Rational(0), notion)) {
      result.scanned = true;
      result.witness = ScanWitness{eta, chamber_of(h_decomp, Slope(eta))};
      break;
    }
  }
  result.holds = result.direct == result.scanned;
  return result;
}

}  // namespace vgit
