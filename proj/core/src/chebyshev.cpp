#include "golomb/chebyshev.hpp"

#include <stdexcept>
#include <utility>

#include "golomb/error.hpp"
#include "golomb/simplex.hpp"

namespace golomb {

namespace {

// Column layout: t, then g_1(0..s_1-1), then g_i(1..s_i-1) for i ≥ 2.
struct Layout {
  std::vector<std::vector<std::size_t>> column;  // [axis][value], npos when pinned to 0
  std::size_t count = 1;

  explicit Layout(const ProductGrid& grid) {
    column.resize(grid.dimension());
    for (std::size_t i = 0; i < grid.dimension(); ++i) {
      column[i].assign(grid.factor_size(i), kPinned);
      for (std::size_t v = (i == 0 ? 0 : 1); v < grid.factor_size(i); ++v) column[i][v] = count++;
    }
  }
  static constexpr std::size_t kPinned = static_cast<std::size_t>(-1);
};

}  // namespace

ApproximationResult best_error(const TabulatedFunction& f) {
  const ProductGrid& grid = f.grid();
  const Layout layout(grid);
  const std::size_t points = grid.volume();

  // Row 2k:   t + Σ g_i(x_i) ≥  f(x)
  // Row 2k+1: t - Σ g_i(x_i) ≥ -f(x)
  LpProblem lp;
  lp.sense = Sense::kMinimize;
  lp.objective.assign(layout.count, Rat(0));
  lp.objective[0] = 1;
  lp.constraints = RatMatrix(2 * points, layout.count);
  lp.relations.assign(2 * points, Relation::kGreaterEqual);
  lp.rhs.resize(2 * points);
  lp.lower.assign(layout.count, std::nullopt);
  lp.upper.assign(layout.count, std::nullopt);
  for (std::size_t k = 0; k < points; ++k) {
    const GridPoint x = grid.point_of(k);
    lp.constraints(2 * k, 0) = 1;
    lp.constraints(2 * k + 1, 0) = 1;
    for (std::size_t i = 0; i < grid.dimension(); ++i) {
      const std::size_t col = layout.column[i][x[i]];
      if (col == Layout::kPinned) continue;
      lp.constraints(2 * k, col) = 1;
      lp.constraints(2 * k + 1, col) = -1;
    }
    lp.rhs[2 * k] = f.at(k);
    lp.rhs[2 * k + 1] = -f.at(k);
  }

  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) throw std::logic_error("best_error: Chebyshev LP not solved to optimality");

  std::vector<RatVector> tables;
  for (std::size_t i = 0; i < grid.dimension(); ++i) {
    RatVector table(grid.factor_size(i));
    for (std::size_t v = 0; v < table.size(); ++v) {
      const std::size_t col = layout.column[i][v];
      if (col != Layout::kPinned) table[v] = sol.primal[col];
    }
    tables.push_back(std::move(table));
  }

  std::vector<Atom> atoms;
  for (std::size_t k = 0; k < points; ++k) {
    atoms.push_back({grid.point_of(k), sol.dual[2 * k] - sol.dual[2 * k + 1]});
  }

  ApproximationResult result{sol.objective_value, SeparableSum(grid, std::move(tables)),
                             FiniteSignedMeasure(grid, std::move(atoms))};
  if (integrate(f, result.optimal_measure) != result.error ||
      residual(f, result.best_g).uniform_norm() != result.error) {
    throw std::logic_error("best_error: exact strong duality failed");
  }
  return result;
}

Rat cycle_functional(const TabulatedFunction& f, const MinimalCycle& cycle) {
  if (!(f.grid() == cycle.grid())) throw InputError("cycle_functional: grid mismatch");
  Rat sum = 0;
  for (std::size_t j = 0; j < cycle.size(); ++j) sum += cycle.lambda()[j] * f(cycle.points()[j]);
  return abs(sum);
}

GolombReport verify_golomb(const TabulatedFunction& f, std::span<const MinimalCycle> cycles) {
  GolombReport report;
  report.error = best_error(f).error;
  report.cycle_supremum = 0;
  report.cycles_examined = cycles.size();
  for (const auto& cycle : cycles) {
    Rat value = cycle_functional(f, cycle);
    if (value > report.cycle_supremum || (!report.witness && sgn(value) > 0)) {
      report.cycle_supremum = std::move(value);
      report.witness = cycle;
    }
  }
  report.equal = report.error == report.cycle_supremum;
  return report;
}

GolombReport verify_golomb(const TabulatedFunction& f, const VerifyOptions& options) {
  const EnumerationResult cycles =
      enumerate_minimal_cycles(f.grid(), EnumerationOptions{options.max_support, options.work_budget});
  if (!cycles.complete) {
    GolombReport report;
    report.error = best_error(f).error;
    report.cycle_supremum = 0;
    report.cycles_examined = cycles.cycles.size();
    report.enumerated = false;
    report.equal = false;
    return report;
  }
  return verify_golomb(f, cycles.cycles);
}

DualWitness optimal_witness_from_dual(const TabulatedFunction& f) {
  const ApproximationResult approx = best_error(f);
  if (sgn(approx.error) == 0) throw InputError("optimal_witness_from_dual: f is already separable (E(f) = 0)");

  const Rat tv = total_variation(approx.optimal_measure);
  Decomposition decomposition = decompose(approx.optimal_measure.scaled(1 / tv));

  std::size_t best = 0;
  Rat best_value = -1;
  for (std::size_t i = 0; i < decomposition.terms.size(); ++i) {
    Rat value = cycle_functional(f, decomposition.terms[i].cycle);
    if (value > best_value) {
      best_value = std::move(value);
      best = i;
    }
  }
  MinimalCycle cycle = decomposition.terms[best].cycle;
  return {std::move(cycle), std::move(decomposition), std::move(best_value)};
}

}  // namespace golomb
