#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "vgit/cstar_stability.hpp"
#include "vgit/weights.hpp"

namespace vgit {

/// Bidegree (a, b) of a line bundle O(a, b) on P(W_1) x P(W_2).
struct Bidegree {
  std::int64_t first;
  std::int64_t second;

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Polarization O(k*d_2 - d, -k*d_1 + d) induced by lambda^k_d on the quotient
/// P(W_1) x P(W_2) of a two-block action. Requires m == 2 and d_1 < d/k < d_2.
Bidegree two_block_polarization(const WeightDecomposition& decomp, const Linearization& lin);

struct BidegreeRealization {
  Linearization linearization;
  std::int64_t multiple;  // r with two_block_polarization(lin) == r * target
};

/// Solves k*d_2 - d = r*a, -k*d_1 + d = r*b with k, r >= 1, taking the least r
/// (k is then forced). Requires m == 2 and a, b >= 1.
BidegreeRealization realize_bidegree(const WeightDecomposition& decomp, const Bidegree& target);

struct EmptyQuotient {};

/// Quotient P(W_i) of an extreme wall.
struct SingleFixed {
  std::size_t block;
};

/// P(W_1) x P(W_2) with its induced polarization.
struct TwoBlockProduct {
  Linearization linearization;
  Bidegree bidegree;
};

/// Everything else: only the strata C_{mu,nu} making up the semistable locus
/// are recorded. `fixed_block` is set on walls, whose locus also contains F_i.
struct GeneralStratified {
  std::vector<std::pair<std::size_t, std::size_t>> strata;
  std::optional<std::size_t> fixed_block;
};

struct QuotientDescriptor {
  Chamber chamber;
  std::variant<EmptyQuotient, SingleFixed, TwoBlockProduct, GeneralStratified> kind;
};

/// Descriptor for a chamber. Two-block products are polarized at the
/// chamber's midpoint slope in lowest terms.
QuotientDescriptor quotient_descriptor(const WeightDecomposition& decomp, const Chamber& chamber);

/// Descriptor for the chamber containing lin.slope(), polarized by `lin` itself.
QuotientDescriptor quotient_descriptor(const WeightDecomposition& decomp, const Linearization& lin);

}  // namespace vgit
