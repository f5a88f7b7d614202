#include <random>

#include "doctest.h"
#include "golomb/chebyshev.hpp"
#include "golomb/error.hpp"
#include "oracles.hpp"

using namespace golomb;

namespace {

TabulatedFunction table(std::vector<std::size_t> shape, std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return {ProductGrid(std::move(shape)), std::move(v)};
}

TabulatedFunction to_table(const SeparableSum& g) { return g.tabulate(); }

void check_optimality(const TabulatedFunction& f, const ApproximationResult& r) {
  const auto res = residual(f, r.best_g);
  CHECK(res.uniform_norm() == r.error);
  CHECK(is_orthogonal(r.optimal_measure));
  CHECK(total_variation(r.optimal_measure) <= 1);
  CHECK(integrate(f, r.optimal_measure) == r.error);
  // Complementary slackness: μ* lives where the residual attains ±E with matching sign.
  for (const auto& a : r.optimal_measure.atoms()) {
    CHECK(res(a.point) * sgn(a.mass) == r.error);
  }
}

}  // namespace

TEST_SUITE("chebyshev") {
  TEST_CASE("best_error examples") {
    const ProductGrid grid({2, 2});
    const auto xy = table({2, 2}, {0, 0, 0, 1});
    const ApproximationResult r = best_error(xy);
    CHECK(r.error == Rat(1, 4));
    check_optimality(xy, r);
    CHECK(r.optimal_measure.mass_at({{0, 0}}) == Rat(1, 4));
    CHECK(r.optimal_measure.mass_at({{0, 1}}) == Rat(-1, 4));

    const SeparableSum g(grid, {{Rat(3), Rat(-2)}, {Rat(1, 2), Rat(5)}});
    const ApproximationResult zero = best_error(to_table(g));
    CHECK(zero.error == 0);
    CHECK(residual(to_table(g), zero.best_g).uniform_norm() == 0);

    const auto line = table({5}, {4, -1, 7, 0, 2});
    CHECK(best_error(line).error == 0);

    const auto constant = table({3, 3}, {2, 2, 2, 2, 2, 2, 2, 2, 2});
    CHECK(best_error(constant).error == 0);
  }

  TEST_CASE("2x2 tables match the closed form") {
    std::mt19937_64 rng(2024);
    const ProductGrid grid({2, 2});
    for (int trial = 0; trial < 50; ++trial) {
      const auto f = oracle::random_integer_function(grid, rng, 10);
      const auto& v = f.values();
      const ApproximationResult r = best_error(f);
      CHECK(r.error == oracle::two_by_two_error(v[0], v[1], v[2], v[3]));
      check_optimality(f, r);
    }
  }

  TEST_CASE("optimality certificate on random tables") {
    std::mt19937_64 rng(99);
    for (const auto& shape : std::vector<std::vector<std::size_t>>{{3, 3}, {4, 3}, {2, 2, 2}, {3, 2, 2}}) {
      const ProductGrid grid(shape);
      for (int trial = 0; trial < 10; ++trial) {
        const auto f = oracle::random_integer_function(grid, rng, 10);
        check_optimality(f, best_error(f));
      }
    }
  }

  TEST_CASE("weak duality against every cycle and random separable sums") {
    std::mt19937_64 rng(3);
    const ProductGrid grid({3, 3});
    const auto cycles = enumerate_minimal_cycles(grid).cycles;
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = oracle::random_integer_function(grid, rng, 10);
      const Rat e = best_error(f).error;
      for (const auto& c : cycles) CHECK(cycle_functional(f, c) <= e);
      for (int k = 0; k < 10; ++k) {
        CHECK(residual(f, oracle::random_separable(grid, rng, 10)).uniform_norm() >= e);
      }
    }
  }

  TEST_CASE("translation by separable sums and scaling") {
    std::mt19937_64 rng(17);
    const ProductGrid grid({3, 2, 2});
    for (int trial = 0; trial < 8; ++trial) {
      const auto f = oracle::random_integer_function(grid, rng, 10);
      const Rat e = best_error(f).error;
      const auto shifted = f + to_table(oracle::random_separable(grid, rng, 10));
      CHECK(best_error(shifted).error == e);
      for (const Rat c : {Rat(-2), Rat(3), Rat(1, 2)}) CHECK(best_error(f.scaled(c)).error == abs(c) * e);
    }
  }

  TEST_CASE("cycle_functional examples") {
    const ProductGrid cube({2, 2, 2});
    const MinimalCycle five = normalize_minimal(
        std::vector<GridPoint>{{{0, 0, 0}}, {{0, 0, 1}}, {{0, 1, 0}}, {{1, 0, 0}}, {{1, 1, 1}}}, cube);
    RatVector ind(8, Rat(0));
    ind[0] = 1;
    const TabulatedFunction delta(cube, ind);
    CHECK(cycle_functional(delta, five) == Rat(1, 3));
    CHECK(cycle_functional(delta.scaled(-3), five) == 1);

    const ProductGrid grid({2, 2});
    const auto sq = enumerate_minimal_cycles(grid).cycles.at(0);
    CHECK(cycle_functional(table({2, 2}, {0, 0, 0, 1}), sq) == Rat(1, 4));
  }

  TEST_CASE("verify_golomb examples") {
    const GolombReport r = verify_golomb(table({2, 2}, {0, 0, 0, 1}));
    CHECK(r.equal);
    CHECK(r.enumerated);
    CHECK(r.error == Rat(1, 4));
    CHECK(r.cycle_supremum == Rat(1, 4));
    CHECK(r.cycles_examined == 1);
    REQUIRE(r.witness.has_value());

    const GolombReport sep = verify_golomb(table({3, 3}, {0, 1, 2, 1, 2, 3, 2, 3, 4}));
    CHECK(sep.equal);
    CHECK(sep.error == 0);
    CHECK(sep.cycle_supremum == 0);

    std::mt19937_64 rng(404);
    const ProductGrid grid({3, 3, 2});
    const auto cycles = enumerate_minimal_cycles(grid).cycles;
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = oracle::random_integer_function(grid, rng, 10);
      const GolombReport g = verify_golomb(f, cycles);
      CHECK(g.equal);
      CHECK(g.cycles_examined == cycles.size());
      REQUIRE(g.witness.has_value());
      CHECK(cycle_functional(f, *g.witness) == g.error);
    }

    VerifyOptions tight;
    tight.work_budget = 10;
    const GolombReport cut = verify_golomb(table({3, 3}, {0, 0, 0, 0, 1, 0, 0, 0, 5}), tight);
    CHECK_FALSE(cut.enumerated);
    CHECK_FALSE(cut.equal);
  }

  TEST_CASE("witness from the dual measure") {
    const auto f = table({3, 3}, {0, 0, 0, 0, 1, 0, 0, 0, 0});
    const DualWitness w = optimal_witness_from_dual(f);
    const Rat e = best_error(f).error;
    CHECK(e == Rat(1, 4));
    CHECK(w.functional == e);
    CHECK(cycle_functional(f, w.cycle) == e);
    CHECK(is_minimal(w.cycle.points(), f.grid()));

    const DualWitness doubled = optimal_witness_from_dual(f.scaled(2));
    CHECK(doubled.functional == 2 * w.functional);

    std::mt19937_64 rng(7);
    const ProductGrid grid({3, 2, 2});
    for (int trial = 0; trial < 10; ++trial) {
      const auto g = oracle::random_integer_function(grid, rng, 10);
      const Rat eg = best_error(g).error;
      if (eg == 0) continue;
      const DualWitness wg = optimal_witness_from_dual(g);
      CHECK(wg.functional == eg);
      Rat total = 0;
      for (const auto& t : wg.decomposition.terms) total += t.weight;
      CHECK(total == 1);
    }

    CHECK_THROWS_AS(optimal_witness_from_dual(table({2, 2}, {1, 2, 3, 4})), InputError);
  }
}
