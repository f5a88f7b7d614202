#pragma once

#include <optional>
#include <vector>

#include "golomb/matrix.hpp"
#include "golomb/rational.hpp"

namespace golomb {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMinimize, kMaximize };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

/// optimize objective·x  s.t.  constraints·x (relations) rhs,  lower ≤ x ≤ upper.
/// A missing bound means the variable is unbounded on that side.
struct LpProblem {
  Sense sense = Sense::kMinimize;
  RatVector objective;
  RatMatrix constraints;
  std::vector<Relation> relations;
  RatVector rhs;
  std::vector<std::optional<Rat>> lower;
  std::vector<std::optional<Rat>> upper;

  std::size_t num_variables() const { return objective.size(); }
  std::size_t num_constraints() const { return relations.size(); }

  /// Throws InputError when the dimensions disagree.
  void validate() const;
};

/// `dual` holds one multiplier per constraint row. With Lagrangian sign
/// conventions: for a minimization, ≥ rows carry y ≥ 0 and ≤ rows y ≤ 0;
/// for a maximization the signs flip. When every variable is free or has
/// only the lower bound 0, objective_value == rhs·dual at optimality.
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  RatVector primal;
  RatVector dual;
  Rat objective_value;
};

/// Dense two-phase tableau simplex in exact arithmetic with Bland's rule.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace golomb
