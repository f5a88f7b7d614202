#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

#include "golomb/cycle.hpp"
#include "golomb/grid.hpp"
#include "golomb/measure.hpp"

namespace golomb {

/// E(f) = min over separable g of ||f - g||, with an optimal g and an
/// optimal annihilating measure μ* (||μ*|| ≤ 1, ∫ f dμ* = E(f)).
struct ApproximationResult {
  Rat error;
  SeparableSum best_g;
  FiniteSignedMeasure optimal_measure;
};

/// Exact LP: minimize t subject to |f(x) - Σ g_i(x_i)| ≤ t at every grid
/// point, with g_i(0) = 0 for i ≥ 2. μ* is read off the multipliers of the
/// two one-sided constraints at each point.
ApproximationResult best_error(const TabulatedFunction& f);

/// |∫ f dμ_l|.
Rat cycle_functional(const TabulatedFunction& f, const MinimalCycle& cycle);

struct GolombReport {
  Rat error;
  Rat cycle_supremum;
  std::optional<MinimalCycle> witness;
  std::size_t cycles_examined = 0;
  bool enumerated = true;  // false: the enumeration budget ran out
  bool equal = false;
};

struct VerifyOptions {
  std::optional<std::size_t> max_support;
  std::size_t work_budget = std::size_t{1} << 20;
};

/// Compares E(f) with the maximum of the cycle functional over every
/// minimal cycle of the full grid. An exhausted budget yields
/// enumerated = false and equal = false.
GolombReport verify_golomb(const TabulatedFunction& f, const VerifyOptions& options = {});

/// Same, against an already enumerated cycle list for f's grid.
GolombReport verify_golomb(const TabulatedFunction& f, std::span<const MinimalCycle> cycles);

struct DualWitness {
  MinimalCycle cycle;
  Decomposition decomposition;
  Rat functional;
};

/// Decomposes the optimal dual measure into minimal-cycle measures and
/// returns the term with the largest cycle functional, which equals E(f).
/// Throws InputError when E(f) = 0.
DualWitness optimal_witness_from_dual(const TabulatedFunction& f);

}  // namespace golomb
