#pragma once

#include <cstddef>
#include <vector>

#include "vgit/rational.hpp"

namespace vgit::lp {

/// minimize objective·x  subject to  rows·x = rhs,  x >= 0.
struct LinearProgram {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;

  std::size_t num_variables() const { return objective.size(); }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational objective_value;
  /// A basic optimal point; only meaningful when status == Optimal.
  std::vector<Rational> x;
};

/// Two-phase dense simplex over exact rationals with Bland's rule, so it
/// terminates on degenerate problems. Returns a vertex of the feasible set.
Solution minimize(const LinearProgram& program);

/// Same as minimize() on the negated objective; objective_value is the maximum.
Solution maximize(const LinearProgram& program);

/// True iff x >= 0 and rows·x == rhs hold exactly.
bool is_feasible_point(const LinearProgram& program, const std::vector<Rational>& x);

}  // namespace vgit::lp
