#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "vgit/product_grid.hpp"
#include "vgit/torus_product.hpp"
#include "vgit/weights.hpp"

namespace vgit::report {

/// Every command produces both renderings from the same computation.
/// JSON keys are sorted, so dump() output is byte-stable.
struct Report {
  nlohmann::json data;
  std::string text;
};

/// `json.dump(2)` plus a trailing newline: the machine-readable output format.
std::string render_json(const nlohmann::json& data);

Report chambers(const WeightDecomposition& decomp);
Report bb(const WeightDecomposition& decomp);
/// Graphviz digraph: nodes F_i, one edge per stratum C_ij labelled by its size.
std::string bb_dot(const WeightDecomposition& decomp);
Report flips(const WeightDecomposition& decomp);
/// All chamber quotients, or the quotient at one slope (polarized by that slope).
Report quotient(const WeightDecomposition& decomp, const std::optional<Rational>& slope);
Report cstar_stability(const WeightDecomposition& decomp, const SupportPattern& support, const Rational& slope);
Report torus_stability(const TorusAction& action, const SupportPattern& support, const CharacterSlope& slope);
Report product_check(const GridReport& result, const std::string& scope);
Report example_flipsex(std::int64_t d1, std::int64_t d2);
Report example_two_block(std::int64_t d1, std::int64_t d2);

}  // namespace vgit::report
