#include "vgit/action_spec.hpp"

#include <string>

namespace vgit {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing key \"" + key + "\"");
  return obj.at(key);
}

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

const json& as_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  return v;
}

Rational as_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return make_rational(v.get<std::int64_t>());
  if (!v.is_string()) throw ParseError(where + ": expected a rational string \"p/q\"");
  return parse_rational_field(v.get<std::string>(), where);
}

CStarSpec parse_cstar(const json& body) {
  const json& blocks = as_array(require(body, "blocks", "cstar"), "cstar.blocks");
  std::vector<WeightBlock> raw;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string where = "cstar.blocks[" + std::to_string(i) + "]";
    raw.push_back({as_int(require(blocks[i], "d", where), where + ".d"),
                   as_int(require(blocks[i], "dim", where), where + ".dim")});
  }
  return {make_decomposition(raw)};
}

TorusSpec parse_torus(const json& body) {
  const std::int64_t rank = as_int(require(body, "rank", "torus"), "torus.rank");
  if (rank < 1) throw InvalidInput("torus.rank must be at least 1");
  const json& coords = as_array(require(body, "coordinates", "torus"), "torus.coordinates");
  std::vector<std::vector<std::int64_t>> weights;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    const std::string where = "torus.coordinates[" + std::to_string(j) + "]";
    std::vector<std::int64_t> w;
    for (const auto& entry : as_array(coords[j], where)) w.push_back(as_int(entry, where));
    weights.push_back(std::move(w));
  }
  TorusSpec spec{TorusAction::make(static_cast<std::size_t>(rank), std::move(weights)),
                 CharacterSlope(static_cast<std::size_t>(rank), Rational(0))};
  if (body.contains("slope")) {
    const json& slope = as_array(body.at("slope"), "torus.slope");
    if (slope.size() != static_cast<std::size_t>(rank)) {
      throw InvalidInput("torus.slope has " + std::to_string(slope.size()) + " entries, rank is " +
                         std::to_string(rank));
    }
    for (std::size_t a = 0; a < slope.size(); ++a) spec.slope[a] = as_rational(slope[a], "torus.slope");
  }
  return spec;
}

}  // namespace

Rational parse_rational_field(std::string_view text, std::string_view what) {
  try {
    return parse_rational(text);
  } catch (const InvalidInput& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

ActionSpec parse_action_spec(const json& doc) {
  if (!doc.is_object()) throw ParseError("input must be a JSON object");
  const bool has_cstar = doc.contains("cstar");
  const bool has_torus = doc.contains("torus");
  if (has_cstar == has_torus) throw ParseError("input needs exactly one of \"cstar\" or \"torus\"");

  ActionSpec spec{has_cstar ? std::variant<CStarSpec, TorusSpec>(parse_cstar(doc.at("cstar")))
                            : std::variant<CStarSpec, TorusSpec>(parse_torus(doc.at("torus"))),
                  std::nullopt};
  if (doc.contains("support")) {
    const std::size_t limit = spec.cstar() ? spec.cstar()->decomp.size() : spec.torus()->action.total_dim();
    std::vector<std::size_t> indices;
    for (const auto& entry : as_array(doc.at("support"), "support")) {
      const std::int64_t i = as_int(entry, "support");
      if (i < 1 || static_cast<std::size_t>(i) > limit) {
        throw InvalidInput("support index " + std::to_string(i) + " outside 1.." + std::to_string(limit));
      }
      indices.push_back(static_cast<std::size_t>(i - 1));
    }
    spec.support = SupportPattern::from_indices(indices);
  }
  return spec;
}

ActionSpec parse_action_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_action_spec(doc);
}

}  // namespace vgit
