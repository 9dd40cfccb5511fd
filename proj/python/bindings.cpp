#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vgit/action_spec.hpp"
#include "vgit/bb_decomposition.hpp"
#include "vgit/cstar_stability.hpp"
#include "vgit/flips.hpp"
#include "vgit/product_grid.hpp"
#include "vgit/quotients.hpp"
#include "vgit/report.hpp"
#include "vgit/torus_product.hpp"
#include "vgit/worked_examples.hpp"

namespace py = pybind11;
using namespace vgit;

namespace {

// Python side: supports are 1-based index lists, rationals are fractions.Fraction
// (ints and "p/q" strings are accepted as input).

Rational to_rational(const py::handle& value) {
  if (py::isinstance<py::str>(value)) return parse_rational(value.cast<std::string>());
  if (py::isinstance<py::int_>(value)) return Rational(py::str(value).cast<std::string>());
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
    Rational q(py::str(value.attr("numerator")).cast<std::string>() + "/" +
               py::str(value.attr("denominator")).cast<std::string>());
    q.canonicalize();
    return q;
  }
  throw InvalidInput("expected an int, a Fraction or a \"p/q\" string");
}

py::object to_fraction(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(value.get_num().get_str())), py::int_(py::str(value.get_den().get_str())));
}

WeightDecomposition to_decomp(const std::vector<std::pair<std::int64_t, std::int64_t>>& blocks) {
  std::vector<WeightBlock> raw;
  for (const auto& [d, dim] : blocks) raw.push_back({d, dim});
  return make_decomposition(raw);
}

SupportPattern to_support(const std::vector<std::int64_t>& one_based, std::size_t limit) {
  std::vector<std::size_t> indices;
  for (auto i : one_based) {
    if (i < 1 || static_cast<std::size_t>(i) > limit) {
      throw InvalidInput("support index " + std::to_string(i) + " outside 1.." + std::to_string(limit));
    }
    indices.push_back(static_cast<std::size_t>(i - 1));
  }
  return SupportPattern::from_indices(indices);
}

std::vector<std::size_t> from_support(const SupportPattern& s) {
  std::vector<std::size_t> out;
  for (auto i : s.indices()) out.push_back(i + 1);
  return out;
}

std::vector<std::vector<std::size_t>> from_supports(const std::vector<SupportPattern>& list) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : list) out.push_back(from_support(s));
  return out;
}

TorusAction to_action(const std::vector<std::vector<std::int64_t>>& weights) {
  if (weights.empty()) throw InvalidInput("torus action needs at least one coordinate");
  return TorusAction::make(weights.front().size(), weights);
}

CharacterSlope to_character(const py::sequence& slope) {
  CharacterSlope out;
  for (const auto& v : slope) out.push_back(to_rational(v));
  return out;
}

StabilityNotion notion_of(bool polystable) {
  return polystable ? StabilityNotion::Polystable : StabilityNotion::Semistable;
}

std::string dump(const report::Report& r) { return r.data.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact VGIT calculus for diagonal torus actions";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  using Blocks = std::vector<std::pair<std::int64_t, std::int64_t>>;
  using Support = std::vector<std::int64_t>;
  using Weights = std::vector<std::vector<std::int64_t>>;

  m.def("parse_rational", [](const std::string& text) { return to_fraction(parse_rational(text)); });

  m.def(
      "chamber_count", [](const Blocks& blocks) { return chambers(to_decomp(blocks)).size(); }, py::arg("blocks"));
  m.def(
      "chamber_of",
      [](const Blocks& blocks, const py::object& slope) {
        const auto d = to_decomp(blocks);
        return chamber_of(d, slope.is_none() ? Slope::infinity() : Slope(to_rational(slope))) + 1;
      },
      py::arg("blocks"), py::arg("slope"), "1-based chamber index; None is the point at infinity.");
  m.def(
      "semistable_supports",
      [](const Blocks& blocks, std::size_t chamber) {
        const auto d = to_decomp(blocks);
        const auto cs = chambers(d);
        if (chamber < 1 || chamber > cs.size()) throw InvalidInput("chamber index out of range");
        return from_supports(semistable_supports(d, cs[chamber - 1]));
      },
      py::arg("blocks"), py::arg("chamber"));
  m.def(
      "is_semistable",
      [](const Blocks& blocks, const Support& support, const py::object& slope) {
        const auto d = to_decomp(blocks);
        return is_semistable(d, to_support(support, d.size()), to_rational(slope));
      },
      py::arg("blocks"), py::arg("support"), py::arg("slope"));
  m.def(
      "is_polystable",
      [](const Blocks& blocks, const Support& support, const py::object& slope) {
        const auto d = to_decomp(blocks);
        return is_polystable(d, to_support(support, d.size()), to_rational(slope));
      },
      py::arg("blocks"), py::arg("support"), py::arg("slope"));
  m.def(
      "semistable_by_invariant_oracle",
      [](const Blocks& blocks, const Support& support, std::int64_t k, std::int64_t dv,
         std::optional<std::int64_t> degree_bound) {
        const auto d = to_decomp(blocks);
        const Linearization lin(k, dv);
        return semistable_by_invariant_oracle(d, to_support(support, d.size()), lin,
                                              degree_bound.value_or(sufficient_degree_bound(d, lin)));
      },
      py::arg("blocks"), py::arg("support"), py::arg("k"), py::arg("d"), py::arg("degree_bound") = py::none());
  m.def(
      "u_set",
      [](const Blocks& blocks, std::size_t i) {
        if (i < 1) throw InvalidInput("U_i needs i >= 1");
        return from_supports(u_set(to_decomp(blocks), i - 1));
      },
      py::arg("blocks"), py::arg("i"));

  m.def(
      "two_block_polarization",
      [](std::int64_t d1, std::int64_t d2, std::int64_t k, std::int64_t dv) {
        const auto b = two_block_polarization(to_decomp({{d1, 2}, {d2, 2}}), Linearization(k, dv));
        return std::make_pair(b.first, b.second);
      },
      py::arg("d1"), py::arg("d2"), py::arg("k"), py::arg("d"));
  m.def(
      "realize_bidegree",
      [](std::int64_t d1, std::int64_t d2, std::int64_t a, std::int64_t b) {
        const auto r = realize_bidegree(to_decomp({{d1, 2}, {d2, 2}}), {a, b});
        return std::make_tuple(r.linearization.k(), r.linearization.d(), r.multiple);
      },
      py::arg("d1"), py::arg("d2"), py::arg("a"), py::arg("b"), "Returns (k, d, r).");

  m.def(
      "torus_semistable",
      [](const Weights& weights, const Support& support, const py::sequence& slope) {
        const auto a = to_action(weights);
        return torus_semistable(a, to_support(support, a.total_dim()), to_character(slope));
      },
      py::arg("weights"), py::arg("support"), py::arg("slope"));
  m.def(
      "torus_polystable",
      [](const Weights& weights, const Support& support, const py::sequence& slope) {
        const auto a = to_action(weights);
        return torus_polystable(a, to_support(support, a.total_dim()), to_character(slope));
      },
      py::arg("weights"), py::arg("support"), py::arg("slope"));
  m.def(
      "residual_slope_range",
      [](const Weights& weights, const Support& support) -> py::object {
        const auto a = to_action(weights);
        const auto r = residual_slope_range(a, to_support(support, a.total_dim()), kAxisG, Rational(0), kAxisH);
        if (!r) return py::none();
        return py::make_tuple(to_fraction(r->min), to_fraction(r->max));
      },
      py::arg("weights"), py::arg("support"),
      "Range of normalized H-weights of G-invariant monomials, or None.");
  m.def(
      "commuting_principle_check",
      [](const Weights& weights, const Support& support, const py::object& eta_h, bool polystable) {
        const auto a = to_action(weights);
        const auto c = commuting_principle_check(a, to_support(support, a.total_dim()), to_rational(eta_h),
                                                 notion_of(polystable));
        return py::dict(py::arg("direct") = c.direct, py::arg("two_step") = c.two_step, py::arg("agree") = c.agree);
      },
      py::arg("weights"), py::arg("support"), py::arg("eta_h"), py::arg("polystable") = false);
  m.def(
      "chamber_scan_check",
      [](const Weights& weights, const Support& support, bool polystable) {
        const auto a = to_action(weights);
        const auto c = chamber_scan_check(a, to_support(support, a.total_dim()), notion_of(polystable));
        py::dict out(py::arg("direct") = c.direct, py::arg("scanned") = c.scanned, py::arg("holds") = c.holds);
        out["witness"] = c.witness ? py::object(to_fraction(c.witness->eta)) : py::object(py::none());
        return out;
      },
      py::arg("weights"), py::arg("support"), py::arg("polystable") = false);

  m.def(
      "flipsex_notion_counts",
      [](std::int64_t d1, std::int64_t d2) {
        const auto c = flipsex_notion_counts(d1, d2);
        return std::make_pair(c.on_quotient, c.on_projective_space);
      },
      py::arg("d1"), py::arg("d2"));

  // Reports come back as JSON text; the package wrapper decodes them.
  m.def("_chambers_report", [](const Blocks& b) { return dump(report::chambers(to_decomp(b))); });
  m.def("_bb_report", [](const Blocks& b) { return dump(report::bb(to_decomp(b))); });
  m.def("_bb_dot", [](const Blocks& b) { return report::bb_dot(to_decomp(b)); });
  m.def("_flips_report", [](const Blocks& b) { return dump(report::flips(to_decomp(b))); });
  m.def("_quotient_report", [](const Blocks& b, const py::object& slope) {
    std::optional<Rational> s;
    if (!slope.is_none()) s = to_rational(slope);
    return dump(report::quotient(to_decomp(b), s));
  });
  m.def("_example_report", [](const std::string& name, std::int64_t d1, std::int64_t d2) {
    if (name == "flipsex") return dump(report::example_flipsex(d1, d2));
    if (name == "two-block") return dump(report::example_two_block(d1, d2));
    throw InvalidInput("unknown example " + name);
  });
  m.def("_product_check", [](const std::string& grid, std::uint64_t seed) {
    GridSpec spec = grid.empty() ? GridSpec{} : parse_grid_spec(grid);
    spec.seed = seed;
    GridReport result;
    {
      py::gil_scoped_release release;
      result = run_product_grid(spec);
    }
    return dump(report::product_check(result, grid.empty() ? "default" : grid));
  });
  m.def("_analyze", [](const std::string& text) {
    const auto spec = parse_action_spec(std::string_view(text));
    if (spec.cstar()) return dump(report::chambers(spec.cstar()->decomp));
    const auto& t = *spec.torus();
    const SupportPattern s = spec.support ? *spec.support : SupportPattern::from_mask((1ULL << t.action.total_dim()) - 1);
    return dump(report::torus_stability(t.action, s, t.slope));
  });
}
