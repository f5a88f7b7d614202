#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "golomb/grid.hpp"
#include "golomb/rational.hpp"

namespace golomb {

struct CycleVectorPair;
struct GolombCycle;

struct Atom {
  GridPoint point;
  Rat mass;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finitely supported signed measure on a product grid, kept in canonical
/// form: distinct points, nonzero masses, atoms sorted by flat index.
class FiniteSignedMeasure {
 public:
  FiniteSignedMeasure() = default;
  explicit FiniteSignedMeasure(ProductGrid grid) : grid_(std::move(grid)) {}
  /// Masses of repeated points accumulate; zero results are dropped.
  FiniteSignedMeasure(ProductGrid grid, std::vector<Atom> atoms);

  const ProductGrid& grid() const { return grid_; }
  const std::vector<Atom>& atoms() const& { return atoms_; }
  std::vector<Atom> atoms() && { return std::move(atoms_); }
  std::vector<GridPoint> support() const;
  bool empty() const { return atoms_.empty(); }

  /// 0 when the point carries no atom.
  Rat mass_at(const GridPoint& p) const;

  FiniteSignedMeasure operator+(const FiniteSignedMeasure& other) const;
  FiniteSignedMeasure operator-(const FiniteSignedMeasure& other) const;
  FiniteSignedMeasure scaled(const Rat& c) const;

  friend bool operator==(const FiniteSignedMeasure&, const FiniteSignedMeasure&) = default;

 private:
  ProductGrid grid_;
  std::vector<Atom> atoms_;
};

/// Σ |mass|.
Rat total_variation(const FiniteSignedMeasure& mu);

/// Pushforward onto one axis: factor value -> total mass. Every value
/// realized by a support point appears, including those summing to 0.
std::map<std::size_t, Rat> marginal(const FiniteSignedMeasure& mu, std::size_t axis);

/// True iff every marginal vanishes, i.e. ∫ g dμ = 0 for every separable g.
bool is_orthogonal(const FiniteSignedMeasure& mu);

Rat integrate(const TabulatedFunction& f, const FiniteSignedMeasure& mu);
Rat integrate(const SeparableSum& g, const FiniteSignedMeasure& mu);

/// (Σ|λ_j|)^{-1} Σ λ_j δ_{x_j}.
FiniteSignedMeasure measure_from_pair(const CycleVectorPair& pair);

/// (1/2k)(Σ δ_{b_i} - Σ δ_{c_i}).
FiniteSignedMeasure golomb_measure(const GolombCycle& gc);

}  // namespace golomb
