#include "golomb/simplex.hpp"

#include <limits>
#include <utility>

#include "golomb/error.hpp"

namespace golomb {

void LpProblem::validate() const {
  const std::size_t n = num_variables();
  const std::size_t m = num_constraints();
  if (constraints.rows() != m || rhs.size() != m) {
    throw InputError("LP: constraint rows, relations and rhs disagree in length");
  }
  if (m > 0 && constraints.cols() != n) {
    throw InputError("LP: constraint matrix column count differs from objective length");
  }
  if (lower.size() != n || upper.size() != n) {
    throw InputError("LP: bound vectors must have one entry per variable");
  }
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// x_j = offset + Σ coeff·(standard column), standard columns are ≥ 0.
struct VariableMap {
  Rat offset;
  std::vector<std::pair<std::size_t, int>> terms;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * (cols + 1)), cost_(cols), d_(cols + 1),
        basis_(rows, kNone), artificial_(cols, false) {}

  Rat& at(std::size_t r, std::size_t c) { return a_[r * (cols_ + 1) + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a_[r * (cols_ + 1) + c]; }
  Rat& rhs(std::size_t r) { return at(r, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::vector<bool>& artificial() { return artificial_; }
  const Rat& reduced_cost(std::size_t c) const { return d_[c]; }
  // Current objective value (of the active cost vector).
  Rat value() const { return -d_[cols_]; }

  void set_costs(RatVector costs) {
    cost_ = std::move(costs);
    for (std::size_t j = 0; j <= cols_; ++j) d_[j] = j < cols_ ? cost_[j] : Rat(0);
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rat& cb = cost_[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(at(i, j)) != 0) d_[j] -= cb * at(i, j);
      }
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    const Rat inv = 1 / at(r, e);
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (sgn(at(r, j)) != 0) at(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Rat factor = at(i, e);
      if (sgn(factor) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(at(r, j)) != 0) at(i, j) -= factor * at(r, j);
      }
    }
    const Rat factor = d_[e];
    if (sgn(factor) != 0) {
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(at(r, j)) != 0) d_[j] -= factor * at(r, j);
      }
    }
    basis_[r] = e;
  }

  enum class Outcome { kOptimal, kUnbounded };

  // Bland's rule: lowest-index improving column, lowest-index basic
  // variable among ratio-test ties.
  Outcome run() {
    std::vector<bool> is_basic(cols_, false);
    for (auto b : basis_) is_basic[b] = true;
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!artificial_[j] && !is_basic[j] && sgn(d_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return Outcome::kOptimal;

      std::size_t leave = kNone;
      Rat best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(at(i, enter)) <= 0) continue;
        Rat ratio = rhs(i) / at(i, enter);
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == kNone) return Outcome::kUnbounded;
      is_basic[basis_[leave]] = false;
      is_basic[enter] = true;
      pivot(leave, enter);
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  RatVector a_;
  RatVector cost_;
  RatVector d_;  // reduced costs; last entry holds -objective
  std::vector<std::size_t> basis_;
  std::vector<bool> artificial_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  problem.validate();
  const std::size_t n = problem.num_variables();
  const std::size_t m = problem.num_constraints();

  // Substitute bounded/free variables by nonnegative standard columns.
  std::vector<VariableMap> vars(n);
  std::size_t std_cols = 0;
  struct BoundRow {
    std::size_t col;
    Rat width;
  };
  std::vector<BoundRow> bound_rows;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& lo = problem.lower[j];
    const auto& hi = problem.upper[j];
    if (lo) {
      vars[j].offset = *lo;
      vars[j].terms.push_back({std_cols, 1});
      if (hi) bound_rows.push_back({std_cols, *hi - *lo});
      ++std_cols;
    } else if (hi) {
      vars[j].offset = *hi;
      vars[j].terms.push_back({std_cols++, -1});
    } else {
      vars[j].terms.push_back({std_cols++, 1});
      vars[j].terms.push_back({std_cols++, -1});
    }
  }

  const std::size_t rows = m + bound_rows.size();
  // Row relations and rhs in standard-column space.
  std::vector<Relation> rel(rows);
  RatVector b(rows);
  RatMatrix a(rows, std_cols);
  for (std::size_t i = 0; i < m; ++i) {
    rel[i] = problem.relations[i];
    b[i] = problem.rhs[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& coef = problem.constraints(i, j);
      if (sgn(coef) == 0) continue;
      b[i] -= coef * vars[j].offset;
      for (auto [col, s] : vars[j].terms) a(i, col) += s * coef;
    }
  }
  for (std::size_t k = 0; k < bound_rows.size(); ++k) {
    rel[m + k] = Relation::kLessEqual;
    b[m + k] = bound_rows[k].width;
    a(m + k, bound_rows[k].col) = 1;
  }

  // Column layout: standard columns, then one slack per inequality, then
  // artificials for rows without a usable +1 slack.
  std::vector<std::size_t> slack_of(rows, kNone);
  std::size_t cols = std_cols;
  for (std::size_t i = 0; i < rows; ++i) {
    if (rel[i] != Relation::kEqual) slack_of[i] = cols++;
  }
  std::vector<int> row_sign(rows, 1);
  std::vector<std::size_t> init_col(rows, kNone);
  for (std::size_t i = 0; i < rows; ++i) {
    if (sgn(b[i]) < 0) row_sign[i] = -1;
    const int slack_coef = rel[i] == Relation::kLessEqual ? 1 : rel[i] == Relation::kGreaterEqual ? -1 : 0;
    if (slack_coef * row_sign[i] == 1) init_col[i] = slack_of[i];
  }
  std::size_t num_artificial = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (init_col[i] == kNone) init_col[i] = cols + num_artificial++;
  }
  cols += num_artificial;

  Tableau tab(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const int s = row_sign[i];
    for (std::size_t j = 0; j < std_cols; ++j) {
      if (sgn(a(i, j)) != 0) tab.at(i, j) = s * a(i, j);
    }
    if (slack_of[i] != kNone) {
      tab.at(i, slack_of[i]) = s * (rel[i] == Relation::kLessEqual ? 1 : -1);
    }
    if (init_col[i] >= cols - num_artificial) {
      tab.at(i, init_col[i]) = 1;
      tab.artificial()[init_col[i]] = true;
    }
    tab.rhs(i) = s * b[i];
    tab.basis()[i] = init_col[i];
  }

  LpSolution solution;

  if (num_artificial > 0) {
    RatVector phase1(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      if (tab.artificial()[j]) phase1[j] = 1;
    }
    tab.set_costs(std::move(phase1));
    tab.run();
    if (sgn(tab.value()) > 0) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    // Drive zero-level artificials out of the basis where possible; rows
    // where that fails are redundant and keep their artificial at zero.
    for (std::size_t i = 0; i < rows; ++i) {
      if (!tab.artificial()[tab.basis()[i]]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!tab.artificial()[j] && sgn(tab.at(i, j)) != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  const int flip = problem.sense == Sense::kMaximize ? -1 : 1;
  RatVector costs(cols);
  Rat constant = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const Rat c = flip * problem.objective[j];
    constant += c * vars[j].offset;
    for (auto [col, s] : vars[j].terms) costs[col] += s * c;
  }
  tab.set_costs(std::move(costs));
  if (tab.run() == Tableau::Outcome::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  RatVector std_values(cols);
  for (std::size_t i = 0; i < rows; ++i) std_values[tab.basis()[i]] = tab.rhs(i);

  solution.status = LpStatus::kOptimal;
  solution.primal.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat x = vars[j].offset;
    for (auto [col, s] : vars[j].terms) x += s * std_values[col];
    solution.primal[j] = std::move(x);
  }
  solution.objective_value = flip * (tab.value() + constant);

  // y_i = c_init - d_init, and the initial columns carry zero phase-2 cost.
  solution.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    solution.dual[i] = -(flip * row_sign[i]) * tab.reduced_cost(init_col[i]);
  }
  return solution;
}

}  // namespace golomb
