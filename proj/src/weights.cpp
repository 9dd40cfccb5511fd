#include "vgit/weights.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace vgit {

WeightDecomposition WeightDecomposition::make(std::span<const WeightBlock> raw) {
  if (raw.empty()) throw InvalidInput("weight decomposition needs at least one block");
  std::map<std::int64_t, std::int64_t> merged;
  for (const auto& b : raw) {
    if (b.dim < 1) throw InvalidInput("block with weight " + std::to_string(b.weight) + " has non-positive dim");
    merged[b.weight] += b.dim;
  }
  if (merged.size() > SupportPattern::kMaxIndex) throw InvalidInput("more than 64 distinct weights");
  std::vector<WeightBlock> blocks;
  blocks.reserve(merged.size());
  for (const auto& [w, dim] : merged) blocks.push_back({w, dim});
  return WeightDecomposition(std::move(blocks));
}

std::int64_t WeightDecomposition::total_dim() const {
  std::int64_t total = 0;
  for (const auto& b : blocks_) total += b.dim;
  return total;
}

std::size_t WeightDecomposition::block_of_coordinate(std::int64_t coordinate) const {
  if (coordinate < 0) throw InvalidInput("negative coordinate index");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (coordinate < blocks_[i].dim) return i;
    coordinate -= blocks_[i].dim;
  }
  throw InvalidInput("coordinate index beyond total dimension");
}

SupportPattern SupportPattern::from_mask(std::uint64_t mask) {
  if (mask == 0) throw InvalidInput("support pattern must be nonempty");
  return SupportPattern(mask);
}

SupportPattern SupportPattern::from_indices(std::span<const std::size_t> indices) {
  std::uint64_t mask = 0;
  for (auto i : indices) {
    if (i >= kMaxIndex) throw InvalidInput("support index " + std::to_string(i + 1) + " out of range");
    mask |= std::uint64_t{1} << i;
  }
  return from_mask(mask);
}

std::size_t SupportPattern::min_index() const { return static_cast<std::size_t>(std::countr_zero(mask_)); }

std::size_t SupportPattern::max_index() const { return 63U - static_cast<std::size_t>(std::countl_zero(mask_)); }

std::size_t SupportPattern::count() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> SupportPattern::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

bool SupportPattern::fits(std::size_t size) const { return size >= kMaxIndex || (mask_ >> size) == 0; }

std::vector<SupportPattern> all_supports(std::size_t n) {
  if (n == 0) throw InvalidInput("cannot enumerate supports over zero indices");
  if (n > 24) throw InvalidInput("refusing to enumerate 2^" + std::to_string(n) + " support patterns");
  std::vector<SupportPattern> out;
  const std::uint64_t end = std::uint64_t{1} << n;
  out.reserve(end - 1);
  for (std::uint64_t m = 1; m < end; ++m) out.push_back(SupportPattern::from_mask(m));
  return out;
}

SupportPattern support_of_coordinates(const WeightDecomposition& decomp, std::span<const Rational> coords) {
  if (static_cast<std::int64_t>(coords.size()) != decomp.total_dim()) {
    throw InvalidInput("expected " + std::to_string(decomp.total_dim()) + " coordinates, got " +
                       std::to_string(coords.size()));
  }
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (sgn(coords[j]) != 0) mask |= std::uint64_t{1} << decomp.block_of_coordinate(static_cast<std::int64_t>(j));
  }
  if (mask == 0) throw InvalidInput("all-zero coordinate vector is not a point of P(W)");
  return SupportPattern::from_mask(mask);
}

std::string to_string(const SupportPattern& s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.indices()) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

Linearization::Linearization(std::int64_t k, std::int64_t d) : k_(k), d_(d) {
  if (k < 1) throw InvalidInput("linearization needs k >= 1");
}

Linearization Linearization::from_slope(const Rational& slope) {
  if (!slope.get_num().fits_slong_p() || !slope.get_den().fits_slong_p()) {
    throw InvalidInput("slope " + to_string(slope) + " does not fit 64-bit integers");
  }
  return {slope.get_den().get_si(), slope.get_num().get_si()};
}

}  // namespace vgit
