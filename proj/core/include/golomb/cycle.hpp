#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "golomb/grid.hpp"
#include "golomb/measure.hpp"
#include "golomb/rational.hpp"

namespace golomb {

/// A projection cycle p = {x_1..x_m} with a nowhere-zero weight vector λ
/// whose class sums vanish on every axis.
struct CycleVectorPair {
  ProductGrid grid;
  std::vector<GridPoint> points;
  RatVector lambda;
};

/// Nonzero integers n_j with vanishing class sums and gcd 1.
struct IntegerCertificate {
  std::vector<mpz_class> entries;
  friend bool operator==(const IntegerCertificate&, const IntegerCertificate&) = default;
};

/// Golomb's presentation {b_1..b_k; c_1..c_k}: on each axis the c-part
/// coordinates are a permutation of the b-part ones, and no point occurs
/// in both parts. Repeated points within one part are allowed.
struct GolombCycle {
  ProductGrid grid;
  std::vector<GridPoint> b_part;
  std::vector<GridPoint> c_part;
  std::size_t k() const { return b_part.size(); }
};

/// A minimal projection cycle with Σ|λ_j| = 1 and points sorted by flat
/// index. λ is determined up to sign. normalize_minimal and the enumerator
/// fix the sign so the first point has positive weight; extraction from a
/// measure instead orients it to agree in sign with that measure.
struct MinimalCycle {
  CycleVectorPair pair;

  const ProductGrid& grid() const { return pair.grid; }
  const std::vector<GridPoint>& points() const& { return pair.points; }
  std::vector<GridPoint> points() && { return std::move(pair.points); }
  const RatVector& lambda() const& { return pair.lambda; }
  RatVector lambda() && { return std::move(pair.lambda); }
  std::size_t size() const { return pair.points.size(); }

  /// Σ λ_j δ_{x_j}; total variation 1.
  FiniteSignedMeasure measure() const;
  /// Same cycle with the first point weighted positively.
  MinimalCycle canonical() const;
  bool is_canonical() const { return !pair.lambda.empty() && sgn(pair.lambda.front()) > 0; }
};

struct DecompositionTerm {
  Rat weight;
  MinimalCycle cycle;
};

/// μ = Σ t_i μ_{l_i}, t_i > 0, Σ t_i = 1.
struct Decomposition {
  std::vector<DecompositionTerm> terms;
  /// Σ t_i μ_{l_i}, recomputed.
  FiniteSignedMeasure reconstruct(const ProductGrid& grid) const;
};

/// Throws InputError unless the pair satisfies the class-sum equations
/// with every λ_j nonzero and distinct valid points.
void validate(const CycleVectorPair& pair);
/// Throws InputError unless the Golomb presentation is well formed.
void validate(const GolombCycle& gc);

/// Some nowhere-zero kernel vector of the incidence system, or nullopt.
/// Deterministic: kernel basis vectors are accumulated with the smallest
/// positive integer multiplier that cancels no existing coordinate.
std::optional<RatVector> find_cycle_vector(std::span<const GridPoint> points, const ProductGrid& grid);

/// λ scaled by the lcm of its denominators, then divided by the gcd.
/// Throws InputError if λ has a zero entry.
IntegerCertificate integer_certificate(const RatVector& lambda);

/// Each x_j written n_j times into the b-part (n_j > 0) or -n_j times into
/// the c-part (n_j < 0). Throws InputError if the certificate is not a
/// nowhere-zero kernel vector for the points.
GolombCycle to_golomb_form(std::span<const GridPoint> points, const ProductGrid& grid,
                           const IntegerCertificate& cert);

struct CertifiedPoints {
  std::vector<GridPoint> points;  // order of first appearance, b-part first
  IntegerCertificate certificate;
};

/// n_j = (multiplicity in b) - (multiplicity in c).
CertifiedPoints from_golomb_form(const GolombCycle& gc);

/// The incidence kernel is one-dimensional and nowhere zero, i.e. the
/// points form a cycle with no proper sub-cycle.
bool is_minimal(std::span<const GridPoint> points, const ProductGrid& grid);

/// Throws InputError for non-minimal input.
MinimalCycle normalize_minimal(std::span<const GridPoint> points, const ProductGrid& grid);

struct EnumerationOptions {
  /// Largest cycle size to report; unset means rank + 1, which bounds every
  /// circuit of the incidence matrix.
  std::optional<std::size_t> max_support;
  /// Abort after this many candidate column reductions.
  std::size_t work_budget = std::size_t{1} << 20;
};

struct EnumerationResult {
  std::vector<MinimalCycle> cycles;  // by size, then lexicographic flat indices
  std::size_t candidates_examined = 0;
  bool complete = true;  // false when the work budget ran out
};

/// All minimal cycles inside `point_set` (circuits of its incidence matrix).
EnumerationResult enumerate_minimal_cycles(std::span<const GridPoint> point_set, const ProductGrid& grid,
                                           const EnumerationOptions& options = {});
/// Over the full grid.
EnumerationResult enumerate_minimal_cycles(const ProductGrid& grid, const EnumerationOptions& options = {});

/// A minimal cycle inside supp(μ) with sign(λ_j) = sign(μ(x_j)), read off a
/// vertex of {β ≥ 0, A diag(σ) β = 0, Σβ = 1}. μ must be orthogonal and
/// nonzero.
MinimalCycle extract_extreme_cycle(const FiniteSignedMeasure& mu);

/// Convex combination of sign-compatible minimal-cycle measures equal to
/// μ. Requires μ orthogonal with total variation 1.
Decomposition decompose(const FiniteSignedMeasure& mu);

}  // namespace golomb
