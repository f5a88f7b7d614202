#include <benchmark/benchmark.h>

#include <random>

#include "golomb/bolts2d.hpp"
#include "golomb/chebyshev.hpp"
#include "golomb/cycle.hpp"
#include "golomb/matrix.hpp"

namespace {

using namespace golomb;

ProductGrid grid_for(const benchmark::State& state) {
  std::vector<std::size_t> shape;
  for (int64_t i = 0; i < state.range(0); ++i) shape.push_back(static_cast<std::size_t>(state.range(1)));
  return ProductGrid(shape);
}

TabulatedFunction random_function(const ProductGrid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-10, 10);
  RatVector values;
  for (std::size_t k = 0; k < grid.volume(); ++k) values.emplace_back(dist(rng));
  return {grid, std::move(values)};
}

void BM_EnumerateMinimalCycles(benchmark::State& state) {
  const ProductGrid grid = grid_for(state);
  std::size_t count = 0;
  for (auto _ : state) {
    const auto result = enumerate_minimal_cycles(grid);
    count = result.cycles.size();
    benchmark::DoNotOptimize(count);
  }
  state.counters["cycles"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateMinimalCycles)->Args({2, 2})->Args({2, 3})->Args({2, 4})->Args({3, 2})
    ->Unit(benchmark::kMillisecond);

void BM_BestError(benchmark::State& state) {
  const ProductGrid grid = grid_for(state);
  const TabulatedFunction f = random_function(grid, 42);
  for (auto _ : state) {
    auto result = best_error(f);
    benchmark::DoNotOptimize(result.error);
  }
}
BENCHMARK(BM_BestError)->Args({2, 2})->Args({2, 3})->Args({2, 4})->Args({2, 6})->Args({3, 2})->Args({3, 3})
    ->Unit(benchmark::kMillisecond);

void BM_WitnessFromDual(benchmark::State& state) {
  const ProductGrid grid = grid_for(state);
  const TabulatedFunction f = random_function(grid, 7);
  for (auto _ : state) {
    auto witness = optimal_witness_from_dual(f);
    benchmark::DoNotOptimize(witness.functional);
  }
}
BENCHMARK(BM_WitnessFromDual)->Args({2, 3})->Args({2, 4})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_KernelBasis(benchmark::State& state) {
  const ProductGrid grid = grid_for(state);
  const auto points = grid.all_points();
  const RatMatrix a = incidence_matrix(points, grid);
  for (auto _ : state) {
    auto basis = kernel_basis(a);
    benchmark::DoNotOptimize(basis.size());
  }
}
BENCHMARK(BM_KernelBasis)->Args({2, 4})->Args({2, 8})->Args({3, 3});

}  // namespace

BENCHMARK_MAIN();
