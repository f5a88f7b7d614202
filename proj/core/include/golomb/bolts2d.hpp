#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "golomb/chebyshev.hpp"
#include "golomb/cycle.hpp"
#include "golomb/grid.hpp"
#include "golomb/measure.hpp"

namespace golomb {

// Lightning bolts on a two-factor grid.

enum class StartAxis {
  kSharedXFirst,  // π1(a1) = π1(a2), π2(a2) = π2(a3), ...
  kSharedYFirst,  // π2(a1) = π2(a2), π1(a2) = π1(a3), ...
};

struct Bolt {
  std::vector<GridPoint> vertices;
  StartAxis start_axis = StartAxis::kSharedXFirst;
};

struct ClosedBolt {
  Bolt bolt;
  std::size_t size() const { return bolt.vertices.size(); }
};

/// Which alternation the vertices follow, if any. A single vertex counts as
/// a (trivial) shared-x-first bolt.
std::optional<StartAxis> is_bolt(std::span<const GridPoint> vertices, const ProductGrid& grid);

/// Even length, and the closing pair (a_k, a_1) continues the alternation,
/// so that the rotation {a_2, ..., a_k, a_1} is again a bolt.
bool is_closed_bolt(std::span<const GridPoint> vertices, const ProductGrid& grid);

/// Validating constructor; throws InputError if the vertices are not closed.
ClosedBolt make_closed_bolt(std::vector<GridPoint> vertices, const ProductGrid& grid);

/// (1/2k) Σ (-1)^{i-1} δ_{a_i}, repeated vertices cancelling.
FiniteSignedMeasure closed_bolt_measure(const ClosedBolt& bolt, const ProductGrid& grid);

/// Splits a two-factor Golomb cycle into closed bolts alternating b- and
/// c-points. Each walk starts at the least unused b-point and always takes
/// the least unused matching point; the union of odd (even) vertices is the
/// b-part (c-part).
std::vector<ClosedBolt> cycle_to_closed_bolts(const GolombCycle& gc);

struct BoltReport {
  Rat supremum;
  std::optional<ClosedBolt> witness;
  std::size_t bolts_examined = 0;
  bool enumerated = true;
};

/// sup over closed bolts of |∫ f dμ_l|, through the minimal cycles of the
/// grid converted to closed bolts.
BoltReport bolt_report(const TabulatedFunction& f, const EnumerationOptions& options = {});
BoltReport bolt_report(const TabulatedFunction& f, std::span<const MinimalCycle> cycles);
Rat bolt_supremum(const TabulatedFunction& f);

}  // namespace golomb
