#include "golomb/measure.hpp"

#include <algorithm>
#include <utility>

#include "golomb/cycle.hpp"
#include "golomb/error.hpp"

namespace golomb {

FiniteSignedMeasure::FiniteSignedMeasure(ProductGrid grid, std::vector<Atom> atoms) : grid_(std::move(grid)) {
  std::map<std::size_t, Atom> merged;
  for (auto& a : atoms) {
    a.mass.canonicalize();
    const std::size_t k = grid_.index_of(a.point);
    auto [it, inserted] = merged.try_emplace(k, a);
    if (!inserted) it->second.mass += a.mass;
  }
  for (auto& [k, a] : merged) {
    if (sgn(a.mass) != 0) atoms_.push_back(std::move(a));
  }
}

std::vector<GridPoint> FiniteSignedMeasure::support() const {
  std::vector<GridPoint> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back(a.point);
  return out;
}

Rat FiniteSignedMeasure::mass_at(const GridPoint& p) const {
  const std::size_t k = grid_.index_of(p);
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), k,
                             [&](const Atom& a, std::size_t key) { return grid_.index_of(a.point) < key; });
  if (it != atoms_.end() && it->point == p) return it->mass;
  return 0;
}

FiniteSignedMeasure FiniteSignedMeasure::operator+(const FiniteSignedMeasure& other) const {
  if (!(grid_ == other.grid_)) throw InputError("measure sum: grid mismatch");
  std::vector<Atom> atoms = atoms_;
  atoms.insert(atoms.end(), other.atoms_.begin(), other.atoms_.end());
  return {grid_, std::move(atoms)};
}

FiniteSignedMeasure FiniteSignedMeasure::operator-(const FiniteSignedMeasure& other) const {
  return *this + other.scaled(-1);
}

FiniteSignedMeasure FiniteSignedMeasure::scaled(const Rat& c) const {
  Rat factor = c;
  factor.canonicalize();
  std::vector<Atom> atoms = atoms_;
  for (auto& a : atoms) a.mass *= factor;
  return {grid_, std::move(atoms)};
}

Rat total_variation(const FiniteSignedMeasure& mu) {
  Rat tv = 0;
  for (const auto& a : mu.atoms()) tv += abs(a.mass);
  return tv;
}

std::map<std::size_t, Rat> marginal(const FiniteSignedMeasure& mu, std::size_t axis) {
  if (axis >= mu.grid().dimension()) throw InputError("marginal: axis out of range");
  std::map<std::size_t, Rat> out;
  for (const auto& a : mu.atoms()) out[a.point[axis]] += a.mass;
  return out;
}

bool is_orthogonal(const FiniteSignedMeasure& mu) {
  for (std::size_t axis = 0; axis < mu.grid().dimension(); ++axis) {
    for (const auto& [value, mass] : marginal(mu, axis)) {
      if (sgn(mass) != 0) return false;
    }
  }
  return true;
}

Rat integrate(const TabulatedFunction& f, const FiniteSignedMeasure& mu) {
  if (!(f.grid() == mu.grid())) throw InputError("integrate: grid mismatch");
  Rat sum = 0;
  for (const auto& a : mu.atoms()) sum += a.mass * f(a.point);
  return sum;
}

Rat integrate(const SeparableSum& g, const FiniteSignedMeasure& mu) {
  if (!(g.grid() == mu.grid())) throw InputError("integrate: grid mismatch");
  Rat sum = 0;
  for (const auto& a : mu.atoms()) sum += a.mass * g.evaluate(a.point);
  return sum;
}

FiniteSignedMeasure measure_from_pair(const CycleVectorPair& pair) {
  validate(pair);
  Rat norm = 0;
  for (const auto& l : pair.lambda) norm += abs(l);
  std::vector<Atom> atoms;
  for (std::size_t j = 0; j < pair.points.size(); ++j) atoms.push_back({pair.points[j], pair.lambda[j] / norm});
  return {pair.grid, std::move(atoms)};
}

FiniteSignedMeasure golomb_measure(const GolombCycle& gc) {
  validate(gc);
  const Rat weight(1, 2 * gc.b_part.size());
  std::vector<Atom> atoms;
  for (const auto& b : gc.b_part) atoms.push_back({b, weight});
  for (const auto& c : gc.c_part) atoms.push_back({c, -weight});
  return {gc.grid, std::move(atoms)};
}

}  // namespace golomb
