#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "golomb/matrix.hpp"
#include "golomb/rational.hpp"

namespace golomb {

/// A point of the product grid: one factor index per axis.
struct GridPoint {
  std::vector<std::size_t> coords;

  std::size_t dimension() const { return coords.size(); }
  std::size_t operator[](std::size_t axis) const { return coords[axis]; }

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// X = X_1 x ... x X_n with X_i = {0, ..., s_i - 1}.
class ProductGrid {
 public:
  ProductGrid() = default;
  explicit ProductGrid(std::vector<std::size_t> factor_sizes);

  std::size_t dimension() const { return sizes_.size(); }
  std::size_t factor_size(std::size_t axis) const { return sizes_[axis]; }
  const std::vector<std::size_t>& factor_sizes() const { return sizes_; }
  std::size_t volume() const { return volume_; }

  bool contains(const GridPoint& p) const;

  /// Row-major flat index; throws InputError for invalid points.
  std::size_t index_of(const GridPoint& p) const;
  GridPoint point_of(std::size_t index) const;

  /// Every point, in flat-index order.
  std::vector<GridPoint> all_points() const;

  friend bool operator==(const ProductGrid&, const ProductGrid&) = default;

 private:
  std::vector<std::size_t> sizes_;
  std::size_t volume_ = 0;
};

/// Dense value table of f on the grid, row-major.
class TabulatedFunction {
 public:
  TabulatedFunction() = default;
  TabulatedFunction(ProductGrid grid, RatVector values);

  const ProductGrid& grid() const { return grid_; }
  const RatVector& values() const& { return values_; }
  RatVector values() && { return std::move(values_); }

  const Rat& operator()(const GridPoint& p) const { return values_[grid_.index_of(p)]; }
  const Rat& at(std::size_t flat) const { return values_[flat]; }

  /// max |f(x)| over the grid.
  Rat uniform_norm() const;

  TabulatedFunction operator+(const TabulatedFunction& other) const;
  TabulatedFunction scaled(const Rat& c) const;

  friend bool operator==(const TabulatedFunction&, const TabulatedFunction&) = default;

 private:
  ProductGrid grid_;
  RatVector values_;
};

/// g(x) = g_1(x_1) + ... + g_n(x_n).
class SeparableSum {
 public:
  SeparableSum() = default;
  SeparableSum(ProductGrid grid, std::vector<RatVector> tables);
  static SeparableSum zero(const ProductGrid& grid);

  const ProductGrid& grid() const { return grid_; }
  const std::vector<RatVector>& tables() const& { return tables_; }
  std::vector<RatVector> tables() && { return std::move(tables_); }

  Rat evaluate(const GridPoint& p) const;
  TabulatedFunction tabulate() const;

 private:
  ProductGrid grid_;
  std::vector<RatVector> tables_;
};

inline std::size_t point_index(const ProductGrid& grid, const GridPoint& p) { return grid.index_of(p); }
inline GridPoint point_of(const ProductGrid& grid, std::size_t index) { return grid.point_of(index); }
inline Rat evaluate(const SeparableSum& g, const GridPoint& p) { return g.evaluate(p); }

/// Pointwise f - g; grids must match.
TabulatedFunction residual(const TabulatedFunction& f, const SeparableSum& g);

/// One (axis, factor value) equation class of the incidence system.
struct IncidenceRow {
  std::size_t axis;
  std::size_t value;
  friend bool operator==(const IncidenceRow&, const IncidenceRow&) = default;
};

struct IncidenceSystem {
  RatMatrix matrix;
  std::vector<IncidenceRow> rows;
};

/// Zero-one matrix with a row per (axis, value) class realized by `points`
/// (axis-major, ascending value) and a column per point: entry 1 iff the
/// point's coordinate on that axis equals the value. λ lies in the kernel
/// exactly when every class sum of λ vanishes.
IncidenceSystem incidence_system(std::span<const GridPoint> points, const ProductGrid& grid);
RatMatrix incidence_matrix(std::span<const GridPoint> points, const ProductGrid& grid);

}  // namespace golomb
