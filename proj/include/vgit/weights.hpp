#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vgit/rational.hpp"

namespace vgit {

/// One eigenspace of a C*-representation: character weight and multiplicity.
struct WeightBlock {
  std::int64_t weight = 0;
  std::int64_t dim = 1;

  friend bool operator==(const WeightBlock&, const WeightBlock&) = default;
};

/// Eigenweight data of a C*-representation on W^v, blocks sorted by strictly
/// increasing weight. Block indices are 0-based in the API.
class WeightDecomposition {
 public:
  /// Merges equal weights (summing dims) and sorts. Throws InvalidInput on an
  /// empty list or a non-positive dim.
  static WeightDecomposition make(std::span<const WeightBlock> raw);

  std::span<const WeightBlock> blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  std::int64_t weight(std::size_t block) const { return blocks_.at(block).weight; }
  std::int64_t dim(std::size_t block) const { return blocks_.at(block).dim; }
  std::int64_t total_dim() const;
  std::int64_t spread() const { return blocks_.back().weight - blocks_.front().weight; }

  /// Block containing the given 0-based coordinate.
  std::size_t block_of_coordinate(std::int64_t coordinate) const;

  friend bool operator==(const WeightDecomposition&, const WeightDecomposition&) = default;

 private:
  explicit WeightDecomposition(std::vector<WeightBlock> blocks) : blocks_(std::move(blocks)) {}
  std::vector<WeightBlock> blocks_;
};

inline WeightDecomposition make_decomposition(std::span<const WeightBlock> raw) { return WeightDecomposition::make(raw); }

/// Nonempty set of indices (blocks or coordinates) as a bitmask; at most 64 indices.
class SupportPattern {
 public:
  static constexpr std::size_t kMaxIndex = 64;

  static SupportPattern from_mask(std::uint64_t mask);
  static SupportPattern from_indices(std::span<const std::size_t> indices);

  std::uint64_t mask() const { return mask_; }
  bool contains(std::size_t index) const { return index < kMaxIndex && ((mask_ >> index) & 1U) != 0; }
  std::size_t min_index() const;
  std::size_t max_index() const;
  std::size_t count() const;
  std::vector<std::size_t> indices() const;
  /// True iff every index is below `size`.
  bool fits(std::size_t size) const;

  friend auto operator<=>(const SupportPattern&, const SupportPattern&) = default;

 private:
  explicit SupportPattern(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_;
};

/// All 2^n - 1 patterns over n indices, ordered by mask value. Throws for n > 24.
std::vector<SupportPattern> all_supports(std::size_t n);

/// Which blocks carry a nonzero coordinate of the lift `coords`.
SupportPattern support_of_coordinates(const WeightDecomposition& decomp, std::span<const Rational> coords);

/// 1-based rendering, e.g. "{1,3}".
std::string to_string(const SupportPattern& s);

/// A linearization of the C*-action: k-th symmetric power twisted by z^d.
class Linearization {
 public:
  Linearization(std::int64_t k, std::int64_t d);
  /// Lowest-terms pair (k, d) with d/k == slope.
  static Linearization from_slope(const Rational& slope);

  std::int64_t k() const { return k_; }
  std::int64_t d() const { return d_; }
  Rational slope() const { return make_rational(d_, k_); }

  friend bool operator==(const Linearization&, const Linearization&) = default;

 private:
  std::int64_t k_;
  std::int64_t d_;
};

}  // namespace vgit
