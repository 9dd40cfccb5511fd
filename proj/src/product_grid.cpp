#include "vgit/product_grid.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <thread>

namespace vgit {

namespace {

constexpr std::size_t kMaxRecordedFailures = 10;

std::int64_t parse_int(std::string_view key, std::string_view value) {
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw InvalidInput("grid key '" + std::string(key) + "' needs an integer, got '" + std::string(value) + "'");
  }
  return out;
}

std::string describe_action(const TorusAction& action) {
  std::string out = "[";
  for (std::size_t j = 0; j < action.total_dim(); ++j) {
    if (j) out += ",";
    out += "(" + std::to_string(action.weight(j)[0]) + "," + std::to_string(action.weight(j)[1]) + ")";
  }
  return out + "]";
}

void combinations(const std::vector<std::vector<std::int64_t>>& points, std::size_t size, std::size_t start,
                  std::vector<std::vector<std::int64_t>>& current, std::vector<TorusAction>& out) {
  if (current.size() == size) {
    out.push_back(TorusAction::make(2, current));
    return;
  }
  for (std::size_t i = start; i < points.size(); ++i) {
    current.push_back(points[i]);
    combinations(points, size, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

GridSpec parse_grid_spec(std::string_view text) {
  GridSpec spec;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InvalidInput("grid entry '" + std::string(item) + "' is not key=value");
    const std::string_view key = item.substr(0, eq);
    const std::int64_t value = parse_int(key, item.substr(eq + 1));
    if (key == "dims") {
      if (value < 1 || value > 8) throw InvalidInput("grid dims must be in 1..8");
      spec.max_dim = static_cast<std::size_t>(value);
    } else if (key == "wmax") {
      if (value < 0 || value > 5) throw InvalidInput("grid wmax must be in 0..5");
      spec.weight_bound = value;
    } else if (key == "qmax") {
      if (value < 1) throw InvalidInput("grid qmax must be positive");
      spec.max_denominator = value;
    } else if (key == "pmax") {
      if (value < 0) throw InvalidInput("grid pmax must be non-negative");
      spec.numerator_bound = value;
    } else if (key == "random") {
      if (value < 0) throw InvalidInput("grid random must be non-negative");
      spec.random_actions = static_cast<std::size_t>(value);
    } else {
      throw InvalidInput("unknown grid key '" + std::string(key) + "'");
    }
  }
  return spec;
}

std::vector<Rational> slope_grid(std::int64_t numerator_bound, std::int64_t max_denominator) {
  std::vector<Rational> out;
  for (std::int64_t q = 1; q <= max_denominator; ++q) {
    for (std::int64_t p = -numerator_bound; p <= numerator_bound; ++p) out.push_back(make_rational(p, q));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void GridReport::merge(const GridReport& other) {
  supports += other.supports;
  slope_instances += other.slope_instances;
  semistable_agree += other.semistable_agree;
  polystable_agree += other.polystable_agree;
  scan_semistable_holds += other.scan_semistable_holds;
  scan_polystable_holds += other.scan_polystable_holds;
  for (const auto& f : other.failures) {
    if (failures.size() < kMaxRecordedFailures) failures.push_back(f);
  }
}

GridReport check_action(const TorusAction& action, const std::vector<SupportPattern>& supports,
                        const std::vector<Rational>& etas) {
  GridReport report;
  auto fail = [&](const std::string& what) {
    if (report.failures.size() < kMaxRecordedFailures) report.failures.push_back(what);
  };
  for (const auto& support : supports) {
    ++report.supports;
    for (const auto notion : {StabilityNotion::Semistable, StabilityNotion::Polystable}) {
      const bool semi = notion == StabilityNotion::Semistable;
      const auto scan = chamber_scan_check(action, support, notion);
      if (scan.holds) {
        ++(semi ? report.scan_semistable_holds : report.scan_polystable_holds);
      } else {
        fail(std::string(semi ? "semistable" : "polystable") + " chamber scan fails for " + describe_action(action) +
             " support " + to_string(support));
      }
    }
    const TwoStepProfile profiles[] = {two_step_profile(action, support, StabilityNotion::Semistable),
                                       two_step_profile(action, support, StabilityNotion::Polystable)};
    for (const auto& eta : etas) {
      ++report.slope_instances;
      for (const auto& profile : profiles) {
        const bool semi = profile.notion == StabilityNotion::Semistable;
        if (commuting_principle_check(action, support, eta, profile).agree) {
          ++(semi ? report.semistable_agree : report.polystable_agree);
        } else {
          fail(std::string(semi ? "semistable" : "polystable") + " commuting principle fails for " +
               describe_action(action) + " support " + to_string(support) + " eta_h " + to_string(eta));
        }
      }
    }
  }
  return report;
}

GridReport run_product_grid(const GridSpec& spec) {
  std::vector<TorusAction> actions;
  std::vector<std::vector<std::int64_t>> points;
  for (std::int64_t g = -spec.weight_bound; g <= spec.weight_bound; ++g) {
    for (std::int64_t h = -spec.weight_bound; h <= spec.weight_bound; ++h) points.push_back({g, h});
  }
  const bool random = spec.random_actions > 0;
  if (random) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::size_t> dim(1, spec.max_dim);
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    for (std::size_t i = 0; i < spec.random_actions; ++i) {
      std::vector<std::vector<std::int64_t>> weights(dim(rng));
      for (auto& w : weights) w = points[pick(rng)];
      actions.push_back(TorusAction::make(2, std::move(weights)));
    }
  } else {
    std::vector<std::vector<std::int64_t>> current;
    for (std::size_t size = 1; size <= std::min(spec.max_dim, points.size()); ++size) {
      combinations(points, size, 0, current, actions);
    }
  }
  const auto etas = slope_grid(spec.numerator_bound, spec.max_denominator);

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
  std::vector<GridReport> partial(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        // Contiguous slices keep the merge order equal to the input order.
        const std::size_t begin = actions.size() * w / workers;
        const std::size_t end = actions.size() * (w + 1) / workers;
        for (std::size_t i = begin; i < end; ++i) {
          const auto& action = actions[i];
          const auto supports = random ? all_supports(action.total_dim())
                                       : std::vector<SupportPattern>{SupportPattern::from_mask(
                                             (std::uint64_t{1} << action.total_dim()) - 1)};
          partial[w].merge(check_action(action, supports, etas));
        }
      });
    }
  }
  GridReport total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace vgit
