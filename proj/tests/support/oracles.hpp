#pragma once

// Test-only reference routines. Nothing here calls into the elimination,
// simplex or enumeration code it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "golomb/grid.hpp"
#include "golomb/rational.hpp"

namespace golomb::oracle {

/// Textbook Gauss-Jordan over Rat; returns the reduced rows and pivots.
inline std::pair<std::vector<RatVector>, std::vector<std::size_t>> gauss_jordan(std::vector<RatVector> rows,
                                                                                 std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rat inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rat f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {rows, pivots};
}

/// Class-sum equations of Definition-style incidence, written directly:
/// one row per (axis, value) realized by the points.
inline std::vector<RatVector> class_equations(const std::vector<GridPoint>& points, const ProductGrid& grid) {
  std::vector<RatVector> rows;
  for (std::size_t axis = 0; axis < grid.dimension(); ++axis) {
    for (std::size_t v = 0; v < grid.factor_size(axis); ++v) {
      RatVector row(points.size());
      bool used = false;
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j][axis] == v) {
          row[j] = 1;
          used = true;
        }
      }
      if (used) rows.push_back(std::move(row));
    }
  }
  return rows;
}

/// Kernel of the class equations has dimension 1 and a nowhere-zero
/// generator.
inline bool kernel_is_minimal_cycle(const std::vector<GridPoint>& points, const ProductGrid& grid) {
  if (points.empty()) return false;
  auto [rows, pivots] = gauss_jordan(class_equations(points, grid), points.size());
  if (points.size() - pivots.size() != 1) return false;
  std::size_t free = 0;
  while (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) ++free;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (rows[k][free] == 0) return false;
  }
  return true;
}

/// All subsets of `points` (≤ 2^16) passing the kernel test, as sorted
/// flat-index lists.
inline std::vector<std::vector<std::size_t>> brute_force_minimal_cycles(const std::vector<GridPoint>& points,
                                                                        const ProductGrid& grid) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = points.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<GridPoint> subset;
    std::vector<std::size_t> key;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) {
        subset.push_back(points[j]);
        key.push_back(grid.index_of(points[j]));
      }
    }
    if (kernel_is_minimal_cycle(subset, grid)) {
      std::sort(key.begin(), key.end());
      out.push_back(std::move(key));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Closed form on a 2x2 grid with table (a b; c d): |a - b - c + d| / 4.
inline Rat two_by_two_error(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  return abs(a - b - c + d) / 4;
}

inline TabulatedFunction random_integer_function(const ProductGrid& grid, std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  RatVector values;
  for (std::size_t k = 0; k < grid.volume(); ++k) values.emplace_back(dist(rng));
  return {grid, std::move(values)};
}

inline SeparableSum random_separable(const ProductGrid& grid, std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<RatVector> tables;
  for (auto s : grid.factor_sizes()) {
    RatVector t;
    for (std::size_t v = 0; v < s; ++v) t.emplace_back(Rat(dist(rng), den(rng)));
    for (auto& q : t) q.canonicalize();
    tables.push_back(std::move(t));
  }
  return {grid, std::move(tables)};
}

}  // namespace golomb::oracle
