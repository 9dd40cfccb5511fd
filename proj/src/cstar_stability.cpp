#include "vgit/cstar_stability.hpp"

#include <algorithm>
#include <unordered_set>

namespace vgit {

namespace {

void check_support(const WeightDecomposition& decomp, const SupportPattern& s) {
  if (!s.fits(decomp.size())) {
    throw InvalidInput("support " + to_string(s) + " refers to blocks beyond m = " + std::to_string(decomp.size()));
  }
}

Rational weight_q(const WeightDecomposition& decomp, std::size_t block) {
  return make_rational(decomp.weight(block));
}

}  // namespace

Extremes d_extremes(const WeightDecomposition& decomp, const SupportPattern& s) {
  check_support(decomp, s);
  // Weights increase with the block index.
  return {decomp.weight(s.min_index()), decomp.weight(s.max_index())};
}

bool is_semistable(const WeightDecomposition& decomp, const SupportPattern& s, const Rational& eta) {
  const auto [lo, hi] = d_extremes(decomp, s);
  return make_rational(lo) <= eta && eta <= make_rational(hi);
}

bool is_semistable(const WeightDecomposition& decomp, const SupportPattern& s, const Linearization& lin) {
  return is_semistable(decomp, s, lin.slope());
}

bool is_polystable(const WeightDecomposition& decomp, const SupportPattern& s, const Rational& eta) {
  const auto [lo, hi] = d_extremes(decomp, s);
  const Rational qlo = make_rational(lo);
  const Rational qhi = make_rational(hi);
  return (qlo == eta && eta == qhi) || (qlo < eta && eta < qhi);
}

bool is_polystable(const WeightDecomposition& decomp, const SupportPattern& s, const Linearization& lin) {
  return is_polystable(decomp, s, lin.slope());
}

std::vector<Chamber> chambers(const WeightDecomposition& decomp) {
  std::vector<Chamber> out;
  out.reserve(2 * decomp.size());
  for (std::size_t i = 0; i < decomp.size(); ++i) {
    out.push_back({Chamber::Kind::Wall, i});
    if (i + 1 < decomp.size()) out.push_back({Chamber::Kind::Open, i});
  }
  out.push_back({Chamber::Kind::EmptyComplement, 0});
  return out;
}

std::size_t chamber_of(const WeightDecomposition& decomp, const Slope& eta) {
  const std::size_t m = decomp.size();
  const std::size_t empty_index = 2 * m - 1;
  if (eta.is_infinite()) return empty_index;
  const Rational& v = eta.value();
  if (v < weight_q(decomp, 0) || v > weight_q(decomp, m - 1)) return empty_index;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational w = weight_q(decomp, i);
    if (v == w) return 2 * i;
    if (i + 1 < m && v < weight_q(decomp, i + 1)) return 2 * i + 1;
  }
  return empty_index;  // unreachable: v lies in [d_1, d_m]
}

Slope representative_slope(const WeightDecomposition& decomp, const Chamber& chamber) {
  switch (chamber.kind) {
    case Chamber::Kind::Wall:
      return Slope(weight_q(decomp, chamber.block));
    case Chamber::Kind::Open:
      return Slope(make_rational(decomp.weight(chamber.block) + decomp.weight(chamber.block + 1), 2));
    case Chamber::Kind::EmptyComplement:
      break;
  }
  return Slope::infinity();
}

std::string describe(const WeightDecomposition& decomp, const Chamber& chamber) {
  switch (chamber.kind) {
    case Chamber::Kind::Wall:
      return "Wall{" + std::to_string(decomp.weight(chamber.block)) + "}";
    case Chamber::Kind::Open:
      return "Open(" + std::to_string(decomp.weight(chamber.block)) + "," +
             std::to_string(decomp.weight(chamber.block + 1)) + ")";
    case Chamber::Kind::EmptyComplement:
      break;
  }
  return "EmptyComplement";
}

std::vector<SupportPattern> semistable_supports(const WeightDecomposition& decomp, const Chamber& chamber) {
  const Slope eta = representative_slope(decomp, chamber);
  if (eta.is_infinite()) return {};
  std::vector<SupportPattern> out;
  for (const auto& s : all_supports(decomp.size())) {
    if (is_semistable(decomp, s, eta.value())) out.push_back(s);
  }
  return out;
}

std::vector<SupportPattern> polystable_supports(const WeightDecomposition& decomp, const Chamber& chamber) {
  const Slope eta = representative_slope(decomp, chamber);
  if (eta.is_infinite()) return {};
  std::vector<SupportPattern> out;
  for (const auto& s : all_supports(decomp.size())) {
    if (is_polystable(decomp, s, eta.value())) out.push_back(s);
  }
  return out;
}

std::int64_t sufficient_degree_bound(const WeightDecomposition& decomp, const Linearization& lin) {
  return lin.k() * decomp.spread() + lin.k();
}

bool semistable_by_invariant_oracle(const WeightDecomposition& decomp, const SupportPattern& s,
                                    const Linearization& lin, std::int64_t degree_bound) {
  check_support(decomp, s);
  const std::int64_t needed = sufficient_degree_bound(decomp, lin);
  if (degree_bound < needed) {
    throw InvalidInput("degree bound " + std::to_string(degree_bound) + " below the sufficient bound " +
                       std::to_string(needed));
  }
  // Breadth-first over total degree: `level` holds the C*-weights of all
  // monomials of the current degree in the supported variables. Variables in
  // one block share a weight, so one representative per block suffices.
  std::vector<std::int64_t> weights;
  for (auto b : s.indices()) weights.push_back(decomp.weight(b));
  std::unordered_set<std::int64_t> level{0};
  for (std::int64_t degree = 1; degree <= degree_bound; ++degree) {
    std::unordered_set<std::int64_t> next;
    for (auto total : level) {
      for (auto w : weights) next.insert(total + w);
    }
    for (auto total : next) {
      // Invariant under lambda^k_d: k * weight == d * degree.
      if (lin.k() * total == lin.d() * degree) return true;
    }
    level = std::move(next);
  }
  return false;
}

}  // namespace vgit
