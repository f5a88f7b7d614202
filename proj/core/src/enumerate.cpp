#include <algorithm>
#include <set>
#include <utility>

#include "golomb/cycle.hpp"
#include "golomb/error.hpp"

// Minimal projection cycles are exactly the circuits of the incidence
// matrix. Every circuit C is found once: as an independent set S = C \ {max C}
// (grown in increasing index order) plus the column max C, which depends on
// S with a representation using every column of S.

namespace golomb {

namespace {

struct BasisVector {
  RatVector v;
  std::size_t pivot;
  RatVector combo;  // v = Σ combo[s] · column(chosen[s])
};

class CircuitSearch {
 public:
  CircuitSearch(std::vector<GridPoint> points, const ProductGrid& grid, std::size_t max_support, std::size_t budget)
      : grid_(grid), points_(std::move(points)), max_support_(max_support), budget_(budget) {
    const IncidenceSystem sys = incidence_system(points_, grid_);
    dim_ = sys.rows.size();
    columns_.resize(points_.size());
    for (std::size_t j = 0; j < points_.size(); ++j) {
      for (std::size_t r = 0; r < dim_; ++r) {
        if (sgn(sys.matrix(r, j)) != 0) columns_[j].push_back(r);
      }
    }
  }

  EnumerationResult run() {
    extend(0);
    std::sort(found_.begin(), found_.end(), [](const auto& a, const auto& b) {
      if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
      return a.first < b.first;
    });
    EnumerationResult result;
    result.complete = !exhausted_;
    result.candidates_examined = examined_;
    for (auto& [key, cycle] : found_) result.cycles.push_back(std::move(cycle));
    return result;
  }

 private:
  void extend(std::size_t start) {
    for (std::size_t x = start; x < points_.size(); ++x) {
      if (examined_ >= budget_) {
        exhausted_ = true;
        return;
      }
      ++examined_;

      RatVector w(dim_);
      for (auto r : columns_[x]) w[r] = 1;
      RatVector combo(chosen_.size());
      for (const auto& b : basis_) {
        if (sgn(w[b.pivot]) == 0) continue;
        const Rat f = w[b.pivot] / b.v[b.pivot];
        for (std::size_t r = 0; r < dim_; ++r) {
          if (sgn(b.v[r]) != 0) w[r] -= f * b.v[r];
        }
        for (std::size_t s = 0; s < b.combo.size(); ++s) {
          if (sgn(b.combo[s]) != 0) combo[s] -= f * b.combo[s];
        }
      }

      const auto nz = std::find_if(w.begin(), w.end(), [](const Rat& q) { return sgn(q) != 0; });
      if (nz == w.end()) {
        // column(x) + Σ combo[s]·column(chosen[s]) = 0
        const bool uses_all = std::all_of(combo.begin(), combo.end(), [](const Rat& q) { return sgn(q) != 0; });
        if (uses_all && chosen_.size() + 1 <= max_support_) record(x, combo);
        continue;
      }
      if (chosen_.size() + 2 > max_support_) continue;

      const auto pivot = static_cast<std::size_t>(nz - w.begin());
      combo.push_back(1);
      basis_.push_back({std::move(w), pivot, std::move(combo)});
      chosen_.push_back(x);
      extend(x + 1);
      chosen_.pop_back();
      basis_.pop_back();
      if (exhausted_) return;
    }
  }

  void record(std::size_t x, const RatVector& combo) {
    std::vector<std::size_t> key = chosen_;
    key.push_back(x);
    Rat norm = 1;
    for (const auto& c : combo) norm += abs(c);
    MinimalCycle cycle{CycleVectorPair{grid_, {}, {}}};
    for (std::size_t s = 0; s < chosen_.size(); ++s) {
      cycle.pair.points.push_back(points_[chosen_[s]]);
      cycle.pair.lambda.push_back(combo[s] / norm);
    }
    cycle.pair.points.push_back(points_[x]);
    cycle.pair.lambda.push_back(1 / norm);
    for (auto& k : key) k = grid_.index_of(points_[k]);
    found_.emplace_back(std::move(key), cycle.canonical());
  }

  const ProductGrid& grid_;
  std::vector<GridPoint> points_;
  std::size_t max_support_;
  std::size_t budget_;
  std::size_t dim_ = 0;
  std::vector<std::vector<std::size_t>> columns_;

  std::vector<std::size_t> chosen_;
  std::vector<BasisVector> basis_;
  std::vector<std::pair<std::vector<std::size_t>, MinimalCycle>> found_;
  std::size_t examined_ = 0;
  bool exhausted_ = false;
};

}  // namespace

EnumerationResult enumerate_minimal_cycles(std::span<const GridPoint> point_set, const ProductGrid& grid,
                                           const EnumerationOptions& options) {
  std::vector<GridPoint> points(point_set.begin(), point_set.end());
  for (const auto& p : points) {
    if (!grid.contains(p)) throw InputError("enumerate: point outside the grid");
  }
  std::sort(points.begin(), points.end(),
            [&](const GridPoint& a, const GridPoint& b) { return grid.index_of(a) < grid.index_of(b); });
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw InputError("enumerate: duplicate point");
  }
  if (points.empty()) return {};

  // Independent sets never exceed the rank, so rank + 1 is always enough.
  const std::size_t cap = options.max_support.value_or(rank(incidence_matrix(points, grid)) + 1);
  return CircuitSearch(std::move(points), grid, cap, options.work_budget).run();
}

EnumerationResult enumerate_minimal_cycles(const ProductGrid& grid, const EnumerationOptions& options) {
  const auto points = grid.all_points();
  return enumerate_minimal_cycles(points, grid, options);
}

}  // namespace golomb
