#include "vgit/report.hpp"

#include <sstream>

#include "vgit/bb_decomposition.hpp"
#include "vgit/cstar_stability.hpp"
#include "vgit/flips.hpp"
#include "vgit/quotients.hpp"
#include "vgit/worked_examples.hpp"

namespace vgit::report {

namespace {

using nlohmann::json;

json support_json(const SupportPattern& s) {
  json out = json::array();
  for (auto i : s.indices()) out.push_back(i + 1);
  return out;
}

json supports_json(const std::vector<SupportPattern>& list) {
  json out = json::array();
  for (const auto& s : list) out.push_back(support_json(s));
  return out;
}

std::string supports_text(const std::vector<SupportPattern>& list) {
  if (list.empty()) return "(none)";
  std::string out;
  for (const auto& s : list) out += (out.empty() ? "" : " ") + to_string(s);
  return out;
}

std::string stratum_name(std::size_t i, std::size_t j) { return "C" + std::to_string(i + 1) + "," + std::to_string(j + 1); }

json pairs_json(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  json out = json::array();
  for (const auto& [i, j] : pairs) out.push_back({i + 1, j + 1});
  return out;
}

std::string pairs_text(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (pairs.empty()) return "(none)";
  std::string out;
  for (const auto& [i, j] : pairs) out += (out.empty() ? "" : " ") + stratum_name(i, j);
  return out;
}

const char* kind_name(Chamber::Kind kind) {
  switch (kind) {
    case Chamber::Kind::Wall:
      return "wall";
    case Chamber::Kind::Open:
      return "open";
    case Chamber::Kind::EmptyComplement:
      break;
  }
  return "empty_complement";
}

json chamber_json(const WeightDecomposition& decomp, const Chamber& c, std::size_t index) {
  json out{{"index", index + 1}, {"kind", kind_name(c.kind)}, {"label", describe(decomp, c)}};
  const Slope rep = representative_slope(decomp, c);
  out["representative"] = rep.is_infinite() ? json("inf") : json(to_fraction_string(rep.value()));
  if (c.kind == Chamber::Kind::Wall) {
    out["lower"] = decomp.weight(c.block);
    out["upper"] = decomp.weight(c.block);
  } else if (c.kind == Chamber::Kind::Open) {
    out["lower"] = decomp.weight(c.block);
    out["upper"] = decomp.weight(c.block + 1);
  }
  return out;
}

json linearization_json(const Linearization& lin) {
  return {{"k", lin.k()}, {"d", lin.d()}, {"slope", to_fraction_string(lin.slope())}};
}

json quotient_json(const QuotientDescriptor& q) {
  return std::visit(
      [](const auto& kind) -> json {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, EmptyQuotient>) {
          return {{"type", "empty"}};
        } else if constexpr (std::is_same_v<T, SingleFixed>) {
          return {{"type", "single_fixed"}, {"block", kind.block + 1}};
        } else if constexpr (std::is_same_v<T, TwoBlockProduct>) {
          return {{"type", "two_block_product"},
                  {"linearization", linearization_json(kind.linearization)},
                  {"bidegree", {kind.bidegree.first, kind.bidegree.second}}};
        } else {
          json out{{"type", "general_stratified"}, {"strata", pairs_json(kind.strata)}};
          out["fixed_block"] = kind.fixed_block ? json(*kind.fixed_block + 1) : json(nullptr);
          return out;
        }
      },
      q.kind);
}

std::string quotient_text(const QuotientDescriptor& q) {
  return std::visit(
      [](const auto& kind) -> std::string {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, EmptyQuotient>) {
          return "empty";
        } else if constexpr (std::is_same_v<T, SingleFixed>) {
          return "P(W" + std::to_string(kind.block + 1) + ")";
        } else if constexpr (std::is_same_v<T, TwoBlockProduct>) {
          return "P(W1) x P(W2) with O(" + std::to_string(kind.bidegree.first) + "," +
                 std::to_string(kind.bidegree.second) + ") from (k,d) = (" + std::to_string(kind.linearization.k()) +
                 "," + std::to_string(kind.linearization.d()) + ")";
        } else {
          std::string out = "stratified over " + pairs_text(kind.strata);
          if (kind.fixed_block) out += " + F" + std::to_string(*kind.fixed_block + 1);
          return out;
        }
      },
      q.kind);
}

json decomp_json(const WeightDecomposition& decomp) {
  json blocks = json::array();
  for (const auto& b : decomp.blocks()) blocks.push_back({{"d", b.weight}, {"dim", b.dim}});
  return blocks;
}

std::string decomp_text(const WeightDecomposition& decomp) {
  std::string out;
  for (const auto& b : decomp.blocks()) {
    out += (out.empty() ? "" : ", ") + ("d=" + std::to_string(b.weight) + " dim " + std::to_string(b.dim));
  }
  return "weights: " + out;
}

}  // namespace

std::string render_json(const json& data) { return data.dump(2) + "\n"; }

Report chambers(const WeightDecomposition& decomp) {
  Report r;
  std::ostringstream text;
  const auto list = vgit::chambers(decomp);
  text << decomp_text(decomp) << "\n";
  text << "m = " << decomp.size() << ", " << list.size() << " notions of stability\n";
  json items = json::array();
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto semi = semistable_supports(decomp, list[i]);
    const auto poly = polystable_supports(decomp, list[i]);
    json item = chamber_json(decomp, list[i], i);
    item["semistable"] = supports_json(semi);
    item["polystable"] = supports_json(poly);
    items.push_back(std::move(item));
    text << "  " << (i + 1) << ". " << describe(decomp, list[i])
         << "  slope " << to_string(representative_slope(decomp, list[i])) << "\n"
         << "       semistable: " << supports_text(semi) << "\n"
         << "       polystable: " << supports_text(poly) << "\n";
  }
  r.data = {{"command", "chambers"}, {"blocks", decomp_json(decomp)}, {"m", decomp.size()},
            {"count", list.size()}, {"chambers", std::move(items)}};
  r.text = text.str();
  return r;
}

Report bb(const WeightDecomposition& decomp) {
  Report r;
  std::ostringstream text;
  const BBData data = bb_data(decomp);
  text << decomp_text(decomp) << "\n";
  text << "fixed components (source F" << data.source() + 1 << ", sink F" << data.sink() + 1 << "):\n";
  json fixed = json::array();
  std::string order;
  for (const auto& f : data.fixed_components) {
    fixed.push_back({{"block", f.block + 1}, {"weight", f.weight}, {"projective_dim", f.projective_dim}});
    text << "  F" << f.block + 1 << "  weight " << f.weight << "  P^" << f.projective_dim << "\n";
    order += (order.empty() ? "F" : " < F") + std::to_string(f.block + 1);
  }
  text << "order: " << order << "\n";
  text << "strata:\n";
  json strata = json::array();
  for (const auto& s : data.strata) {
    strata.push_back({{"source", s.source + 1}, {"target", s.target + 1}, {"supports", supports_json(s.supports)}});
    text << "  " << stratum_name(s.source, s.target) << ": " << supports_text(s.supports) << "\n";
  }
  json u_sets = json::array();
  if (decomp.size() > 1) text << "open sets U_i:\n";
  for (std::size_t cut = 0; cut + 1 < decomp.size(); ++cut) {
    const auto u = u_set(decomp, cut);
    u_sets.push_back({{"i", cut + 1}, {"supports", supports_json(u)}});
    text << "  U" << cut + 1 << ": " << supports_text(u) << "\n";
  }
  text << "flow limits (z->0, z->inf):\n";
  json flows = json::array();
  for (const auto& s : all_supports(decomp.size())) {
    const auto lim = flow_limits(decomp, s);
    flows.push_back({{"support", support_json(s)}, {"at_zero", lim.at_zero + 1}, {"at_infinity", lim.at_infinity + 1}});
    text << "  " << to_string(s) << " -> F" << lim.at_zero + 1 << ", F" << lim.at_infinity + 1 << "\n";
  }
  r.data = {{"command", "bb"},       {"blocks", decomp_json(decomp)},   {"fixed_components", std::move(fixed)},
            {"source", data.source() + 1}, {"sink", data.sink() + 1}, {"strata", std::move(strata)},
            {"u_sets", std::move(u_sets)}, {"flow_limits", std::move(flows)}};
  r.text = text.str();
  return r;
}

std::string bb_dot(const WeightDecomposition& decomp) {
  const BBData data = bb_data(decomp);
  std::ostringstream dot;
  dot << "digraph bb {\n  rankdir=LR;\n";
  for (const auto& f : data.fixed_components) {
    dot << "  F" << f.block + 1 << " [label=\"F" << f.block + 1 << "\\nd=" << f.weight << ", P^" << f.projective_dim
        << "\"];\n";
  }
  for (const auto& s : data.strata) {
    dot << "  F" << s.source + 1 << " -> F" << s.target + 1 << " [label=\"" << s.supports.size() << "\"];\n";
  }
  dot << "}\n";
  return dot.str();
}

Report flips(const WeightDecomposition& decomp) {
  Report r;
  std::ostringstream text;
  const FlipChain chain = flip_chain(decomp);
  text << decomp_text(decomp) << "\n";
  text << "chain of " << chain.steps.size() << " quotients by increasing slope:\n";
  json steps = json::array();
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& step = chain.steps[i];
    json item = chamber_json(decomp, step.chamber, i);
    item["semistable"] = supports_json(step.semistable);
    item["quotient"] = quotient_json(step.quotient);
    steps.push_back(std::move(item));
    text << "  " << (i + 1) << ". " << describe(decomp, step.chamber) << ": " << supports_text(step.semistable)
         << "\n       quotient: " << quotient_text(step.quotient) << "\n";
  }
  text << "wall crossings (slope increasing through d_i):\n";
  json crossings = json::array();
  for (const auto& c : chain.crossings) {
    crossings.push_back({{"wall", decomp.weight(c.wall_block)},
                         {"block", c.wall_block + 1},
                         {"removed", pairs_json(c.removed)},
                         {"added", pairs_json(c.added)},
                         {"wall_only", supports_json(c.wall_only)}});
    text << "  at d=" << decomp.weight(c.wall_block) << ": leave " << pairs_text(c.removed) << "; enter "
         << pairs_text(c.added) << "; wall only " << supports_text(c.wall_only) << "\n";
  }
  text << "empty chamber: " << describe(decomp, chain.empty_chamber) << " (slopes outside [" << decomp.weight(0)
       << "," << decomp.weight(decomp.size() - 1) << "])\n";
  r.data = {{"command", "flips"},
            {"blocks", decomp_json(decomp)},
            {"steps", std::move(steps)},
            {"crossings", std::move(crossings)},
            {"empty_chamber", chamber_json(decomp, chain.empty_chamber, 2 * decomp.size() - 1)}};
  r.text = text.str();
  return r;
}

Report quotient(const WeightDecomposition& decomp, const std::optional<Rational>& slope) {
  Report r;
  std::ostringstream text;
  text << decomp_text(decomp) << "\n";
  const auto list = vgit::chambers(decomp);
  json items = json::array();
  auto add = [&](std::size_t index, const QuotientDescriptor& q) {
    json item = chamber_json(decomp, list[index], index);
    item["quotient"] = quotient_json(q);
    items.push_back(std::move(item));
    text << "  " << (index + 1) << ". " << describe(decomp, list[index]) << ": " << quotient_text(q) << "\n";
  };
  if (slope) {
    const Linearization lin = Linearization::from_slope(*slope);
    const std::size_t index = chamber_of(decomp, Slope(*slope));
    text << "slope " << to_string(*slope) << " = d/k with (k,d) = (" << lin.k() << "," << lin.d() << ")\n";
    add(index, quotient_descriptor(decomp, lin));
  } else {
    for (std::size_t i = 0; i < list.size(); ++i) add(i, quotient_descriptor(decomp, list[i]));
  }
  r.data = {{"command", "quotient"}, {"blocks", decomp_json(decomp)}, {"quotients", std::move(items)}};
  r.data["slope"] = slope ? json(to_fraction_string(*slope)) : json(nullptr);
  r.text = text.str();
  return r;
}

Report cstar_stability(const WeightDecomposition& decomp, const SupportPattern& support, const Rational& slope) {
  Report r;
  const auto [lo, hi] = d_extremes(decomp, support);
  const bool semi = is_semistable(decomp, support, slope);
  const bool poly = is_polystable(decomp, support, slope);
  const std::size_t index = chamber_of(decomp, Slope(slope));
  const auto chamber = vgit::chambers(decomp)[index];
  const Linearization lin = Linearization::from_slope(slope);
  const bool oracle = semistable_by_invariant_oracle(decomp, support, lin, sufficient_degree_bound(decomp, lin));
  r.data = {{"command", "stability"}, {"action", "cstar"},       {"support", support_json(support)},
            {"slope", to_fraction_string(slope)}, {"d_min", lo}, {"d_max", hi},
            {"semistable", semi},         {"polystable", poly},   {"oracle_semistable", oracle},
            {"chamber", chamber_json(decomp, chamber, index)}};
  std::ostringstream text;
  text << decomp_text(decomp) << "\n"
       << "support " << to_string(support) << ", slope " << to_string(slope) << "\n"
       << "d_min = " << lo << ", d_max = " << hi << "\n"
       << "chamber " << index + 1 << ": " << describe(decomp, chamber) << "\n"
       << "semistable: " << (semi ? "yes" : "no") << " (invariant-monomial oracle: " << (oracle ? "yes" : "no")
       << ")\n"
       << "polystable: " << (poly ? "yes" : "no") << "\n";
  r.text = text.str();
  return r;
}

Report torus_stability(const TorusAction& action, const SupportPattern& support, const CharacterSlope& slope) {
  Report r;
  const bool semi = torus_semistable(action, support, slope);
  const bool poly = torus_polystable(action, support, slope);
  json eta = json::array();
  std::string eta_text;
  for (const auto& v : slope) {
    eta.push_back(to_fraction_string(v));
    eta_text += (eta_text.empty() ? "" : ",") + to_string(v);
  }
  r.data = {{"command", "stability"}, {"action", "torus"}, {"rank", action.rank()},
            {"support", support_json(support)}, {"slope", std::move(eta)}, {"semistable", semi},
            {"polystable", poly}};
  std::ostringstream text;
  text << "torus of rank " << action.rank() << " on " << action.total_dim() << " coordinates\n"
       << "support " << to_string(support) << ", slope (" << eta_text << ")\n"
       << "semistable: " << (semi ? "yes" : "no") << "\n"
       << "polystable: " << (poly ? "yes" : "no") << "\n";
  if (action.rank() == 2) {
    json checks = json::object();
    for (const auto notion : {StabilityNotion::Semistable, StabilityNotion::Polystable}) {
      const char* name = notion == StabilityNotion::Semistable ? "semistable" : "polystable";
      const auto scan = chamber_scan_check(action, support, notion);
      json item{{"direct", scan.direct}, {"scanned", scan.scanned}, {"holds", scan.holds}};
      item["witness"] = scan.witness ? json{{"eta", to_fraction_string(scan.witness->eta)},
                                            {"h_chamber", scan.witness->h_chamber + 1}}
                                     : json(nullptr);
      checks[name] = std::move(item);
      text << "G-" << name << " (G = axis 1 at slope 0): " << (scan.direct ? "yes" : "no");
      if (scan.witness) {
        text << ", witnessed at eta_h = " << to_string(scan.witness->eta) << " in H-chamber "
             << scan.witness->h_chamber + 1;
      }
      text << "\n";
    }
    r.data["chamber_scan"] = std::move(checks);
  }
  r.text = text.str();
  return r;
}

Report product_check(const GridReport& result, const std::string& scope) {
  Report r;
  auto ratio = [](std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); };
  r.data = {{"command", "product-check"},
            {"scope", scope},
            {"supports", result.supports},
            {"slope_instances", result.slope_instances},
            {"commuting_semistable_agree", result.semistable_agree},
            {"commuting_polystable_agree", result.polystable_agree},
            {"chamber_scan_semistable_holds", result.scan_semistable_holds},
            {"chamber_scan_polystable_holds", result.scan_polystable_holds},
            {"all_agree", result.all_agree()},
            {"failures", result.failures}};
  std::ostringstream text;
  text << "scope: " << scope << "\n"
       << "commuting principle, semistable: agree: " << ratio(result.semistable_agree, result.slope_instances) << "\n"
       << "commuting principle, polystable: agree: " << ratio(result.polystable_agree, result.slope_instances) << "\n"
       << "chamber scan, semistable: agree: " << ratio(result.scan_semistable_holds, result.supports) << "\n"
       << "chamber scan, polystable: agree: " << ratio(result.scan_polystable_holds, result.supports) << "\n"
       << "agree: " << ratio(result.semistable_agree + result.polystable_agree + result.scan_semistable_holds +
                                 result.scan_polystable_holds,
                             2 * (result.slope_instances + result.supports))
       << "\n";
  for (const auto& f : result.failures) text << "FAILURE: " << f << "\n";
  r.text = text.str();
  return r;
}

Report example_flipsex(std::int64_t d1, std::int64_t d2) {
  Report r;
  const auto& data = flipsex_data();
  const NotionCounts counts = flipsex_notion_counts(d1, d2);
  std::ostringstream text;
  text << "SL2 x C* on P(S^3 C^2 + C^2), (d1,d2) = (" << d1 << "," << d2 << ")\n";
  text << "generators of the SL2-invariants:\n";
  json gens = json::array();
  for (const auto& g : data.generators) {
    gens.push_back({{"name", g.name}, {"degree", g.degree}, {"bidegree", {g.bidegree.c1, g.bidegree.c2}}});
    text << "  " << g.name << "  degree " << g.degree << "  bidegree (" << g.bidegree.c1 << "," << g.bidegree.c2
         << ")\n";
  }
  text << "C*-weights on the degree-12 generators:\n";
  json induced = json::array();
  for (const auto& f : data.induced_weights) {
    induced.push_back({{"form", to_string(f)}, {"value", f.at(d1, d2)}});
    text << "  " << to_string(f) << " = " << f.at(d1, d2) << "\n";
  }
  text << "attainable d_min/d_max on Q:";
  json extremes = json::array();
  for (const auto& f : data.attainable_extremes) {
    extremes.push_back({{"form", to_string(f)}, {"value", f.at(d1, d2)}});
    text << " " << to_string(f) << "=" << f.at(d1, d2);
  }
  text << "\n";
  text << "notions of semistability on Q: " << counts.on_quotient << "\n"
       << "notions of C*-semistability on P(W): " << counts.on_projective_space << "\n"
       << "counts: (" << counts.on_quotient << ", " << counts.on_projective_space << ")\n";
  r.data = {{"command", "example"},
            {"example", "flipsex"},
            {"d1", d1},
            {"d2", d2},
            {"generators", std::move(gens)},
            {"induced_weights", std::move(induced)},
            {"attainable_extremes", std::move(extremes)},
            {"notions_on_quotient", counts.on_quotient},
            {"notions_on_projective_space", counts.on_projective_space}};
  r.text = text.str();
  return r;
}

Report example_two_block(std::int64_t d1, std::int64_t d2) {
  Report r;
  const TwoBlockReport rep = example124_report(d1, d2);
  std::ostringstream text;
  text << "C* on W = W1 + W2 with weights d1 = " << d1 << " < d2 = " << d2 << "\n";
  json items = json::array();
  for (std::size_t i = 0; i < rep.chambers.size(); ++i) {
    json item = chamber_json(rep.decomp, rep.chambers[i], i);
    item["semistable"] = supports_json(rep.semistable[i]);
    item["quotient"] = quotient_json(rep.quotients[i]);
    items.push_back(std::move(item));
    text << "  " << i + 1 << ". " << describe(rep.decomp, rep.chambers[i]) << ": "
         << supports_text(rep.semistable[i]) << "\n       quotient: " << quotient_text(rep.quotients[i]) << "\n";
  }
  text << "polarization at (k,d) = (" << rep.sample_linearization.k() << "," << rep.sample_linearization.d()
       << "): O(" << rep.sample_bidegree.first << "," << rep.sample_bidegree.second << ")\n";
  json realizations = json::array();
  for (const auto& [target, sol] : rep.realizations) {
    realizations.push_back({{"target", {target.first, target.second}},
                            {"linearization", linearization_json(sol.linearization)},
                            {"multiple", sol.multiple}});
    text << "O(" << target.first << "," << target.second << ") realized by (k,d,r) = (" << sol.linearization.k()
         << "," << sol.linearization.d() << "," << sol.multiple << ")\n";
  }
  r.data = {{"command", "example"},
            {"example", "two-block"},
            {"d1", d1},
            {"d2", d2},
            {"chambers", std::move(items)},
            {"sample_linearization", linearization_json(rep.sample_linearization)},
            {"sample_bidegree", {rep.sample_bidegree.first, rep.sample_bidegree.second}},
            {"realizations", std::move(realizations)}};
  r.text = text.str();
  return r;
}

}  // namespace vgit::report
