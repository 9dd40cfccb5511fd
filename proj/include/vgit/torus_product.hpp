#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vgit/rational.hpp"
#include "vgit/weights.hpp"

namespace vgit {

/// Diagonal action of (C*)^rank on W: coordinate j scales by the character w_j.
/// For product checks the rank is 2, axis 0 is the factor G and axis 1 the factor H.
class TorusAction {
 public:
  static TorusAction make(std::size_t rank, std::vector<std::vector<std::int64_t>> coordinate_weights);

  std::size_t rank() const { return rank_; }
  std::size_t total_dim() const { return weights_.size(); }
  std::span<const std::int64_t> weight(std::size_t coordinate) const { return weights_.at(coordinate); }

  /// The C*-action of one axis as a weight decomposition.
  WeightDecomposition axis_decomposition(std::size_t axis) const;
  /// Blocks of axis_decomposition(axis) met by a coordinate support.
  SupportPattern axis_support(std::size_t axis, const SupportPattern& coordinates) const;

 private:
  TorusAction(std::size_t rank, std::vector<std::vector<std::int64_t>> weights)
      : rank_(rank), weights_(std::move(weights)) {}
  std::size_t rank_;
  std::vector<std::vector<std::int64_t>> weights_;
};

inline constexpr std::size_t kAxisG = 0;
inline constexpr std::size_t kAxisH = 1;

/// Character slope eta, one exact rational per axis.
using CharacterSlope = std::vector<Rational>;

/// eta lies in the convex hull of the supported weights (exact LP).
bool torus_semistable(const TorusAction& action, const SupportPattern& support, const CharacterSlope& slope);

/// eta is a strictly positive convex combination of all supported weights,
/// i.e. lies in the relative interior of their hull (exact LP).
bool torus_polystable(const TorusAction& action, const SupportPattern& support, const CharacterSlope& slope);

/// Range of sum_j e_j * w_j[measured] over e >= 0 supported in `support` with
/// sum_j e_j = 1 and sum_j e_j * w_j[fixed] = fixed_value: the normalized
/// measured-axis weights of monomials invariant for the fixed axis at that
/// slope. Empty when no such monomial exists. argmin/argmax are optimal
/// vertices, listed over the support's coordinates in increasing order.
struct SlopeRange {
  Rational min;
  Rational max;
  std::vector<Rational> argmin;
  std::vector<Rational> argmax;

  bool contains(const Rational& v) const { return min <= v && v <= max; }
  /// Relative interior of [min, max]; the point itself when min == max.
  bool relatively_contains(const Rational& v) const { return min == max ? v == min : (min < v && v < max); }
};

std::optional<SlopeRange> residual_slope_range(const TorusAction& action, const SupportPattern& support,
                                               std::size_t fixed_axis, const Rational& fixed_value,
                                               std::size_t measured_axis);

enum class StabilityNotion { Semistable, Polystable };

/// The eta_h-independent part of the two-step test: G-(semi/poly)stability of
/// x at slope 0 and the range of normalized H-weights of G-invariant monomials.
struct TwoStepProfile {
  StabilityNotion notion;
  bool g_stable;
  std::optional<SlopeRange> h_range;

  bool accepts(const Rational& eta_h) const;
};

TwoStepProfile two_step_profile(const TorusAction& action, const SupportPattern& support, StabilityNotion notion);

/// Right-hand side of the commuting principle for a rank-2 action at
/// slopes (0, eta_h): x is G-(semi/poly)stable and its image in the G-quotient
/// is H-(semi/poly)stable at eta_h.
bool two_step_stable(const TorusAction& action, const SupportPattern& support, const Rational& eta_h,
                     StabilityNotion notion);

inline bool two_step_semistable(const TorusAction& action, const SupportPattern& support, const Rational& eta_h) {
  return two_step_stable(action, support, eta_h, StabilityNotion::Semistable);
}
inline bool two_step_polystable(const TorusAction& action, const SupportPattern& support, const Rational& eta_h) {
  return two_step_stable(action, support, eta_h, StabilityNotion::Polystable);
}

struct PrincipleCheck {
  bool direct;
  bool two_step;
  bool agree;
};

PrincipleCheck commuting_principle_check(const TorusAction& action, const SupportPattern& support,
                                         const Rational& eta_h, StabilityNotion notion = StabilityNotion::Semistable);

/// Same check with the two-step side taken from a precomputed profile.
PrincipleCheck commuting_principle_check(const TorusAction& action, const SupportPattern& support,
                                         const Rational& eta_h, const TwoStepProfile& profile);

/// Slopes where stability on the G-quotient can change as eta_h varies: the
/// H-weights of all coordinates plus every eta_h at which a segment between two
/// weights crosses the G-axis at 0. Sorted, distinct.
std::vector<Rational> product_critical_values(const TorusAction& action);

/// One slope per chamber cut out by product_critical_values(): each critical
/// value, each midpoint between neighbours, and one slope beyond either end.
std::vector<Rational> product_chamber_representatives(const TorusAction& action);

struct ScanWitness {
  Rational eta;
  std::size_t h_chamber;  // index into chambers(action.axis_decomposition(1))
};

struct ChamberScanResult {
  bool direct;   // G-(semi/poly)stability of x
  bool scanned;  // some scanned slope passes both the H-test and the residual G-test
  std::optional<ScanWitness> witness;
  bool holds;    // direct == scanned
};

/// Scans product_chamber_representatives(): x must be H-(semi/poly)stable at
/// eta and its image must be G-(semi/poly)stable in that quotient.
ChamberScanResult chamber_scan_check(const TorusAction& action, const SupportPattern& support,
                                     StabilityNotion notion = StabilityNotion::Semistable);

}  // namespace vgit
