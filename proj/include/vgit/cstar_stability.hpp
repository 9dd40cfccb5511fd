#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vgit/rational.hpp"
#include "vgit/weights.hpp"

namespace vgit {

struct Extremes {
  std::int64_t d_min;
  std::int64_t d_max;
};

/// Smallest and largest weight among the blocks present in `s`.
Extremes d_extremes(const WeightDecomposition& decomp, const SupportPattern& s);

/// d_min <= eta <= d_max.
bool is_semistable(const WeightDecomposition& decomp, const SupportPattern& s, const Rational& eta);
bool is_semistable(const WeightDecomposition& decomp, const SupportPattern& s, const Linearization& lin);

/// d_min == eta == d_max, or d_min < eta < d_max.
bool is_polystable(const WeightDecomposition& decomp, const SupportPattern& s, const Rational& eta);
bool is_polystable(const WeightDecomposition& decomp, const SupportPattern& s, const Linearization& lin);

/// A maximal set of slopes with constant semistable locus.
///
/// Wall: the single slope weight(block). Open: the interval between weight(block)
/// and weight(block + 1). EmptyComplement: every slope outside [d_1, d_m],
/// including infinity; nothing is semistable there.
struct Chamber {
  enum class Kind { Wall, Open, EmptyComplement };

  Kind kind;
  std::size_t block = 0;

  friend bool operator==(const Chamber&, const Chamber&) = default;
};

/// The 2m chambers in order: Wall 1, Open(1,2), Wall 2, ..., Wall m, EmptyComplement.
std::vector<Chamber> chambers(const WeightDecomposition& decomp);

/// Position (0-based) of the chamber containing `eta` in chambers(decomp).
std::size_t chamber_of(const WeightDecomposition& decomp, const Slope& eta);

/// A slope inside the chamber: the wall itself, the midpoint of an open
/// interval, infinity for the empty complement.
Slope representative_slope(const WeightDecomposition& decomp, const Chamber& chamber);

/// Human-readable chamber, e.g. "Wall{1}", "Open(1,2)", "EmptyComplement".
std::string describe(const WeightDecomposition& decomp, const Chamber& chamber);

std::vector<SupportPattern> semistable_supports(const WeightDecomposition& decomp, const Chamber& chamber);
std::vector<SupportPattern> polystable_supports(const WeightDecomposition& decomp, const Chamber& chamber);

/// Degree bound k * (d_m - d_1) + k. Any semistable support has an invariant
/// monomial of at most this degree (two factors suffice: x_a^(k*d_b - d) * x_b^(d - k*d_a)).
std::int64_t sufficient_degree_bound(const WeightDecomposition& decomp, const Linearization& lin);

/// Semistability decided by searching for a lambda^k_d-invariant monomial in
/// the variables of `s`: exponent vector e != 0 with k * sum(e_j w_j) = d * sum(e_j)
/// and total degree <= degree_bound. Independent of the d_min/d_max criterion.
/// Throws InvalidInput when degree_bound < sufficient_degree_bound().
bool semistable_by_invariant_oracle(const WeightDecomposition& decomp, const SupportPattern& s,
                                    const Linearization& lin, std::int64_t degree_bound);

}  // namespace vgit
