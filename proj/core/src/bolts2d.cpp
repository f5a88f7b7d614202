#include "golomb/bolts2d.hpp"

#include <algorithm>
#include <utility>

#include "golomb/error.hpp"

namespace golomb {

namespace {

void require_two_factors(const ProductGrid& grid) {
  if (grid.dimension() != 2) throw InputError("lightning bolts need a two-factor grid");
}

// Axis shared by the pair (a_i, a_{i+1}), i zero-based.
std::size_t shared_axis(StartAxis start, std::size_t i) {
  const std::size_t first = start == StartAxis::kSharedXFirst ? 0 : 1;
  return i % 2 == 0 ? first : 1 - first;
}

bool links(const GridPoint& a, const GridPoint& b, std::size_t axis) { return a != b && a[axis] == b[axis]; }

bool follows(std::span<const GridPoint> v, StartAxis start) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (!links(v[i], v[i + 1], shared_axis(start, i))) return false;
  }
  return true;
}

}  // namespace

std::optional<StartAxis> is_bolt(std::span<const GridPoint> vertices, const ProductGrid& grid) {
  require_two_factors(grid);
  for (const auto& v : vertices) {
    if (!grid.contains(v)) throw InputError("bolt vertex outside the grid");
  }
  if (vertices.empty()) return std::nullopt;
  if (follows(vertices, StartAxis::kSharedXFirst)) return StartAxis::kSharedXFirst;
  if (follows(vertices, StartAxis::kSharedYFirst)) return StartAxis::kSharedYFirst;
  return std::nullopt;
}

bool is_closed_bolt(std::span<const GridPoint> vertices, const ProductGrid& grid) {
  const auto start = is_bolt(vertices, grid);
  if (!start || vertices.size() % 2 != 0) return false;
  const std::size_t k = vertices.size();
  return links(vertices[k - 1], vertices[0], shared_axis(*start, k - 1));
}

ClosedBolt make_closed_bolt(std::vector<GridPoint> vertices, const ProductGrid& grid) {
  if (!is_closed_bolt(vertices, grid)) throw InputError("vertices do not form a closed bolt");
  const StartAxis start = *is_bolt(vertices, grid);
  return {Bolt{std::move(vertices), start}};
}

FiniteSignedMeasure closed_bolt_measure(const ClosedBolt& bolt, const ProductGrid& grid) {
  const Rat weight(1, bolt.size());
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < bolt.size(); ++i) {
    atoms.push_back({bolt.bolt.vertices[i], i % 2 == 0 ? weight : Rat(-weight)});
  }
  return {grid, std::move(atoms)};
}

std::vector<ClosedBolt> cycle_to_closed_bolts(const GolombCycle& gc) {
  require_two_factors(gc.grid);
  validate(gc);

  // b-points are edges y -> x, c-points edges x -> y of a balanced
  // bipartite multigraph; each walk is an alternating closed trail.
  std::vector<GridPoint> plus = gc.b_part;
  std::vector<GridPoint> minus = gc.c_part;
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  std::vector<bool> plus_used(plus.size(), false);
  std::vector<bool> minus_used(minus.size(), false);

  std::vector<ClosedBolt> bolts;
  for (std::size_t first = 0; first < plus.size(); ++first) {
    if (plus_used[first]) continue;
    std::vector<GridPoint> walk;
    std::size_t current = first;
    const std::size_t home_y = plus[first][1];
    for (;;) {
      plus_used[current] = true;
      walk.push_back(plus[current]);
      const std::size_t x = plus[current][0];
      std::size_t m = 0;
      while (m < minus.size() && (minus_used[m] || minus[m][0] != x)) ++m;
      if (m == minus.size()) throw std::logic_error("cycle_to_closed_bolts: unbalanced x-node");
      minus_used[m] = true;
      walk.push_back(minus[m]);
      const std::size_t y = minus[m][1];
      if (y == home_y) break;
      std::size_t p = 0;
      while (p < plus.size() && (plus_used[p] || plus[p][1] != y)) ++p;
      if (p == plus.size()) throw std::logic_error("cycle_to_closed_bolts: unbalanced y-node");
      current = p;
    }
    bolts.push_back({Bolt{std::move(walk), StartAxis::kSharedXFirst}});
  }
  return bolts;
}

BoltReport bolt_report(const TabulatedFunction& f, std::span<const MinimalCycle> cycles) {
  require_two_factors(f.grid());
  BoltReport report;
  report.supremum = 0;
  for (const auto& cycle : cycles) {
    const CertifiedPoints cert{cycle.points(), integer_certificate(cycle.lambda())};
    const GolombCycle gc = to_golomb_form(cert.points, cycle.grid(), cert.certificate);
    for (auto& bolt : cycle_to_closed_bolts(gc)) {
      ++report.bolts_examined;
      Rat value = abs(integrate(f, closed_bolt_measure(bolt, f.grid())));
      if (value > report.supremum || (!report.witness && sgn(value) > 0)) {
        report.supremum = std::move(value);
        report.witness = std::move(bolt);
      }
    }
  }
  return report;
}

BoltReport bolt_report(const TabulatedFunction& f, const EnumerationOptions& options) {
  require_two_factors(f.grid());
  const EnumerationResult cycles = enumerate_minimal_cycles(f.grid(), options);
  BoltReport report = bolt_report(f, cycles.cycles);
  report.enumerated = cycles.complete;
  return report;
}

Rat bolt_supremum(const TabulatedFunction& f) { return bolt_report(f).supremum; }

}  // namespace golomb
