#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vgit/action_spec.hpp"
#include "vgit/product_grid.hpp"
#include "vgit/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitParse = 2;
constexpr int kExitViolation = 3;

struct Options {
  std::string input = "-";
  bool json = false;
  bool dot = false;
  std::string slope;
  std::string grid;
  std::string example;
  std::int64_t d1 = 0;
  std::int64_t d2 = 1;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw vgit::InvalidInput("cannot open input file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

vgit::ActionSpec load(const Options& opt) {
  const std::string text = read_input(opt.input);
  return vgit::parse_action_spec(std::string_view(text));
}

const vgit::WeightDecomposition& require_cstar(const vgit::ActionSpec& spec, const char* command) {
  if (!spec.cstar()) throw vgit::InvalidInput(std::string(command) + " needs a \"cstar\" input");
  return spec.cstar()->decomp;
}

vgit::SupportPattern require_support(const vgit::ActionSpec& spec) {
  if (!spec.support) throw vgit::InvalidInput("stability needs a \"support\" in the input");
  return *spec.support;
}

vgit::CharacterSlope parse_character(const std::string& text, std::size_t rank) {
  vgit::CharacterSlope out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(vgit::parse_rational_field(item, "--slope"));
  if (out.size() != rank) {
    throw vgit::InvalidInput("--slope has " + std::to_string(out.size()) + " entries, rank is " +
                             std::to_string(rank));
  }
  return out;
}

int emit(const vgit::report::Report& r, const Options& opt) {
  std::cout << (opt.json ? vgit::report::render_json(r.data) : r.text);
  return kExitOk;
}

int run_stability(const Options& opt) {
  const vgit::ActionSpec spec = load(opt);
  const vgit::SupportPattern support = require_support(spec);
  if (const auto* c = spec.cstar()) {
    if (opt.slope.empty()) throw vgit::InvalidInput("stability on a cstar input needs --slope p/q");
    const auto r = vgit::report::cstar_stability(c->decomp, support, vgit::parse_rational_field(opt.slope, "--slope"));
    emit(r, opt);
    return r.data["semistable"] == r.data["oracle_semistable"] ? kExitOk : kExitViolation;
  }
  const auto& t = *spec.torus();
  const vgit::CharacterSlope slope = opt.slope.empty() ? t.slope : parse_character(opt.slope, t.action.rank());
  const auto r = vgit::report::torus_stability(t.action, support, slope);
  emit(r, opt);
  if (r.data.contains("chamber_scan")) {
    for (const auto& [name, check] : r.data["chamber_scan"].items()) {
      if (!check["holds"].get<bool>()) return kExitViolation;
    }
  }
  return kExitOk;
}

int run_product_check(const Options& opt, bool input_given) {
  vgit::GridReport result;
  std::string scope;
  vgit::GridSpec grid;
  if (!opt.grid.empty()) {
    try {
      grid = vgit::parse_grid_spec(opt.grid);
    } catch (const vgit::InvalidInput& e) {
      throw vgit::ParseError(std::string("--grid: ") + e.what());
    }
  }
  if (const char* seed = std::getenv("VGIT_SEED")) {
    try {
      grid.seed = std::stoull(seed);
    } catch (const std::exception&) {
      throw vgit::ParseError(std::string("VGIT_SEED is not an unsigned integer: ") + seed);
    }
  }
  if (input_given) {
    const vgit::ActionSpec spec = load(opt);
    const auto* t = spec.torus();
    if (!t || t->action.rank() != 2) throw vgit::InvalidInput("product-check input must be a rank-2 torus action");
    std::vector<vgit::SupportPattern> supports;
    if (spec.support) {
      supports.push_back(*spec.support);
    } else {
      supports = vgit::all_supports(t->action.total_dim());
    }
    result = vgit::check_action(t->action, supports, vgit::slope_grid(grid.numerator_bound, grid.max_denominator));
    scope = "input action, " + std::to_string(supports.size()) + " supports";
  } else {
    result = vgit::run_product_grid(grid);
    scope = "dims=" + std::to_string(grid.max_dim) + ",wmax=" + std::to_string(grid.weight_bound) +
            ",qmax=" + std::to_string(grid.max_denominator) + ",pmax=" + std::to_string(grid.numerator_bound);
    if (grid.random_actions > 0) {
      scope += ",random=" + std::to_string(grid.random_actions) + ",seed=" + std::to_string(grid.seed);
    }
  }
  emit(vgit::report::product_check(result, scope), opt);
  return result.all_agree() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variation of GIT for torus actions on weighted vector spaces"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Input JSON file, or - for stdin")->capture_default_str();
    sub->add_flag("--json", opt.json, "Print JSON instead of text");
  };

  auto* chambers = app.add_subcommand("chambers", "List the 2m chambers and their semistable supports");
  auto* bb = app.add_subcommand("bb", "Fixed components, strata and the open sets U_i");
  auto* flips = app.add_subcommand("flips", "Chain of quotients and wall crossings");
  auto* quotient = app.add_subcommand("quotient", "Describe the quotient of each chamber, or at one slope");
  auto* stability = app.add_subcommand("stability", "Test the input support at a slope");
  auto* product = app.add_subcommand("product-check", "Check the two-step principle on a grid of rank-2 actions");
  auto* example = app.add_subcommand("example", "Worked examples: flipsex or two-block");
  for (auto* sub : {chambers, bb, flips, quotient, stability, product, example}) add_common(sub);

  bb->add_flag("--dot", opt.dot, "Print the flow graph in Graphviz format");
  quotient->add_option("--slope", opt.slope, "Slope p/q");
  stability->add_option("--slope", opt.slope, "Slope p/q (cstar) or comma-separated characters (torus)");
  product->add_option("--grid", opt.grid, "dims=D,wmax=W,qmax=Q[,pmax=P][,random=N]");
  example->add_option("name", opt.example, "flipsex or two-block")->required()->check(CLI::IsMember({"flipsex", "two-block"}));
  example->add_option("--d1", opt.d1, "First weight")->capture_default_str();
  example->add_option("--d2", opt.d2, "Second weight")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*chambers) return emit(vgit::report::chambers(require_cstar(load(opt), "chambers")), opt);
    if (*bb) {
      const auto spec = load(opt);
      const auto& decomp = require_cstar(spec, "bb");
      if (opt.dot) {
        std::cout << vgit::report::bb_dot(decomp);
        return kExitOk;
      }
      return emit(vgit::report::bb(decomp), opt);
    }
    if (*flips) return emit(vgit::report::flips(require_cstar(load(opt), "flips")), opt);
    if (*quotient) {
      const auto spec = load(opt);
      std::optional<vgit::Rational> slope;
      if (!opt.slope.empty()) slope = vgit::parse_rational_field(opt.slope, "--slope");
      return emit(vgit::report::quotient(require_cstar(spec, "quotient"), slope), opt);
    }
    if (*stability) return run_stability(opt);
    if (*product) return run_product_check(opt, product->count("--input") > 0);
    if (*example) {
      if (opt.example == "flipsex") return emit(vgit::report::example_flipsex(opt.d1, opt.d2), opt);
      return emit(vgit::report::example_two_block(opt.d1, opt.d2), opt);
    }
  } catch (const vgit::ParseError& e) {
    std::cerr << "vgit: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const vgit::InvalidInput& e) {
    std::cerr << "vgit: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "vgit: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitSemantic;
}
