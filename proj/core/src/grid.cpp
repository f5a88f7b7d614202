#include "golomb/grid.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "golomb/error.hpp"

namespace golomb {

ProductGrid::ProductGrid(std::vector<std::size_t> factor_sizes) : sizes_(std::move(factor_sizes)) {
  if (sizes_.empty()) throw InputError("a product grid needs at least one factor");
  volume_ = 1;
  for (auto s : sizes_) {
    if (s == 0) throw InputError("grid factor sizes must be positive");
    volume_ *= s;
  }
}

bool ProductGrid::contains(const GridPoint& p) const {
  if (p.dimension() != dimension()) return false;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (p[i] >= sizes_[i]) return false;
  }
  return true;
}

std::size_t ProductGrid::index_of(const GridPoint& p) const {
  if (p.dimension() != dimension()) {
    throw InputError("point has " + std::to_string(p.dimension()) + " coordinates, grid has " +
                     std::to_string(dimension()) + " factors");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (p[i] >= sizes_[i]) {
      throw InputError("coordinate " + std::to_string(p[i]) + " out of range on axis " + std::to_string(i));
    }
    index = index * sizes_[i] + p[i];
  }
  return index;
}

GridPoint ProductGrid::point_of(std::size_t index) const {
  if (index >= volume_) throw InputError("flat index out of range");
  GridPoint p{std::vector<std::size_t>(dimension())};
  for (std::size_t i = dimension(); i-- > 0;) {
    p.coords[i] = index % sizes_[i];
    index /= sizes_[i];
  }
  return p;
}

std::vector<GridPoint> ProductGrid::all_points() const {
  std::vector<GridPoint> out;
  out.reserve(volume_);
  for (std::size_t k = 0; k < volume_; ++k) out.push_back(point_of(k));
  return out;
}

TabulatedFunction::TabulatedFunction(ProductGrid grid, RatVector values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.volume()) {
    throw InputError("function table has " + std::to_string(values_.size()) + " values, grid volume is " +
                     std::to_string(grid_.volume()));
  }
  for (auto& v : values_) v.canonicalize();
}

Rat TabulatedFunction::uniform_norm() const {
  Rat best = 0;
  for (const auto& v : values_) {
    if (abs(v) > best) best = abs(v);
  }
  return best;
}

TabulatedFunction TabulatedFunction::operator+(const TabulatedFunction& other) const {
  if (!(grid_ == other.grid_)) throw InputError("grid mismatch");
  RatVector out(values_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = values_[k] + other.values_[k];
  return {grid_, std::move(out)};
}

TabulatedFunction TabulatedFunction::scaled(const Rat& c) const {
  Rat factor = c;
  factor.canonicalize();
  RatVector out(values_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = factor * values_[k];
  return {grid_, std::move(out)};
}

SeparableSum::SeparableSum(ProductGrid grid, std::vector<RatVector> tables)
    : grid_(std::move(grid)), tables_(std::move(tables)) {
  if (tables_.size() != grid_.dimension()) throw InputError("separable sum needs one table per factor");
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    if (tables_[i].size() != grid_.factor_size(i)) {
      throw InputError("separable table " + std::to_string(i) + " has the wrong length");
    }
    for (auto& v : tables_[i]) v.canonicalize();
  }
}

SeparableSum SeparableSum::zero(const ProductGrid& grid) {
  std::vector<RatVector> tables;
  for (auto s : grid.factor_sizes()) tables.emplace_back(s);
  return {grid, std::move(tables)};
}

Rat SeparableSum::evaluate(const GridPoint& p) const {
  if (!grid_.contains(p)) throw InputError("point outside the grid");
  Rat sum = 0;
  for (std::size_t i = 0; i < tables_.size(); ++i) sum += tables_[i][p[i]];
  return sum;
}

TabulatedFunction SeparableSum::tabulate() const {
  RatVector values(grid_.volume());
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = evaluate(grid_.point_of(k));
  return {grid_, std::move(values)};
}

TabulatedFunction residual(const TabulatedFunction& f, const SeparableSum& g) {
  if (!(f.grid() == g.grid())) throw InputError("residual: grid mismatch");
  const auto& grid = f.grid();
  RatVector out(grid.volume());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.at(k) - g.evaluate(grid.point_of(k));
  return {grid, std::move(out)};
}

IncidenceSystem incidence_system(std::span<const GridPoint> points, const ProductGrid& grid) {
  std::set<GridPoint> seen;
  for (const auto& p : points) {
    if (!grid.contains(p)) throw InputError("incidence: point outside the grid");
    if (!seen.insert(p).second) throw InputError("incidence: duplicate point");
  }

  IncidenceSystem sys;
  for (std::size_t axis = 0; axis < grid.dimension(); ++axis) {
    std::vector<std::size_t> values;
    for (const auto& p : points) values.push_back(p[axis]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (auto v : values) sys.rows.push_back({axis, v});
  }
  sys.matrix = RatMatrix(sys.rows.size(), points.size());
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (points[j][sys.rows[r].axis] == sys.rows[r].value) sys.matrix(r, j) = 1;
    }
  }
  return sys;
}

RatMatrix incidence_matrix(std::span<const GridPoint> points, const ProductGrid& grid) {
  return incidence_system(points, grid).matrix;
}

}  // namespace golomb
