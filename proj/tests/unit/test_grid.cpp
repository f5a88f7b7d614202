#include <random>

#include "doctest.h"
#include "golomb/error.hpp"
#include "golomb/grid.hpp"
#include "oracles.hpp"

using namespace golomb;

TEST_SUITE("grid") {
  TEST_CASE("point_index examples") {
    CHECK(point_index(ProductGrid({2, 2}), GridPoint{{0, 0}}) == 0);
    CHECK(point_index(ProductGrid({2, 2}), GridPoint{{1, 0}}) == 2);
    CHECK(point_index(ProductGrid({3, 3, 2}), GridPoint{{1, 2, 1}}) == 11);
    CHECK_THROWS_AS(point_index(ProductGrid({2, 2}), GridPoint{{2, 0}}), InputError);
    CHECK_THROWS_AS(point_index(ProductGrid({2, 2}), GridPoint{{0, 0, 0}}), InputError);
  }

  TEST_CASE("grid construction rejects empty factors") {
    CHECK_THROWS_AS(ProductGrid(std::vector<std::size_t>{}), InputError);
    CHECK_THROWS_AS(ProductGrid({2, 0}), InputError);
  }

  TEST_CASE("point_of inverts point_index over the full volume") {
    for (const auto& shape : std::vector<std::vector<std::size_t>>{{1}, {4}, {2, 3}, {3, 3, 2}, {2, 1, 4, 2}}) {
      const ProductGrid grid(shape);
      for (std::size_t k = 0; k < grid.volume(); ++k) {
        const GridPoint p = point_of(grid, k);
        CHECK(grid.contains(p));
        CHECK(point_index(grid, p) == k);
      }
    }
  }

  TEST_CASE("evaluate examples") {
    const ProductGrid g2({2, 2});
    for (std::size_t k = 0; k < 4; ++k) CHECK(evaluate(SeparableSum::zero(g2), g2.point_of(k)) == 0);
    CHECK(evaluate(SeparableSum(g2, {{Rat(0), Rat(1)}, {Rat(0), Rat(1)}}), GridPoint{{1, 1}}) == 2);
    const ProductGrid g3({2, 2, 2});
    const SeparableSum g(g3, {{Rat(1), Rat(2)}, {Rat(0), Rat(5)}, {Rat(-1), Rat(0)}});
    CHECK(evaluate(g, GridPoint{{0, 1, 0}}) == 5);
  }

  TEST_CASE("residual examples") {
    const ProductGrid grid({2, 2});
    const TabulatedFunction xy(grid, {Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(residual(xy, SeparableSum::zero(grid)) == xy);

    const SeparableSum sep(grid, {{Rat(3), Rat(-1)}, {Rat(0), Rat(2, 3)}});
    const TabulatedFunction f = sep.tabulate();
    for (const auto& v : residual(f, sep).values()) CHECK(sgn(v) == 0);

    // g1 = (-1/4, 1/4), g2 = (0, 1/2)
    const SeparableSum best(grid, {{Rat(-1, 4), Rat(1, 4)}, {Rat(0), Rat(1, 2)}});
    const TabulatedFunction r = residual(xy, best);
    CHECK(r.values() == RatVector{Rat(1, 4), Rat(-1, 4), Rat(-1, 4), Rat(1, 4)});
    CHECK(r.uniform_norm() == Rat(1, 4));

    CHECK_THROWS_AS(residual(xy, SeparableSum::zero(ProductGrid({2, 3}))), InputError);
  }

  TEST_CASE("incidence matrix examples") {
    const ProductGrid g2({2, 2});
    const std::vector<GridPoint> square{{{0, 0}}, {{0, 1}}, {{1, 1}}, {{1, 0}}};
    const auto sys = incidence_system(square, g2);
    CHECK(sys.matrix.rows() == 4);
    CHECK(sys.matrix.cols() == 4);
    CHECK(sys.rows == std::vector<IncidenceRow>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(sys.matrix * RatVector{Rat(1), Rat(-1), Rat(1), Rat(-1)} == RatVector(4));

    const std::vector<GridPoint> single{{{1, 0}}};
    const RatMatrix one = incidence_matrix(single, g2);
    CHECK(one.rows() == 2);
    CHECK(one.cols() == 1);
    CHECK(one(0, 0) == 1);
    CHECK(one(1, 0) == 1);

    const ProductGrid g3({2, 2, 2});
    const std::vector<GridPoint> five{{{0, 0, 0}}, {{0, 0, 1}}, {{0, 1, 0}}, {{1, 0, 0}}, {{1, 1, 1}}};
    const RatMatrix a = incidence_matrix(five, g3);
    CHECK(a.rows() == 6);
    CHECK(a.cols() == 5);
    CHECK(a * RatVector{Rat(2), Rat(-1), Rat(-1), Rat(-1), Rat(1)} == RatVector(6));

    const std::vector<GridPoint> dup{{{0, 0}}, {{0, 0}}};
    CHECK_THROWS_AS(incidence_matrix(dup, g2), InputError);
  }

  TEST_CASE("incidence kernel equals vanishing class sums") {
    std::mt19937_64 rng(3);
    const ProductGrid grid({3, 2, 3});
    std::uniform_int_distribution<long> coef(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<GridPoint> pts;
      for (std::size_t k = 0; k < grid.volume(); ++k) {
        if (rng() % 3 == 0) pts.push_back(grid.point_of(k));
      }
      if (pts.empty()) continue;
      RatVector lambda;
      for (std::size_t j = 0; j < pts.size(); ++j) lambda.emplace_back(coef(rng));
      const RatMatrix a = incidence_matrix(pts, grid);
      if (trial % 2 == 0) {
        lambda.assign(pts.size(), Rat(0));
        for (const auto& b : kernel_basis(a)) {
          const Rat c = coef(rng);
          for (std::size_t j = 0; j < lambda.size(); ++j) lambda[j] += c * b[j];
        }
      }
      for (std::size_t c = 0; c < a.cols(); ++c) {
        int ones = 0;
        for (std::size_t r = 0; r < a.rows(); ++r) ones += a(r, c) == 1 ? 1 : 0;
        CHECK(ones == 3);
      }
      bool in_kernel = true;
      for (const auto& v : a * lambda) in_kernel = in_kernel && sgn(v) == 0;
      bool classes_vanish = true;
      for (std::size_t axis = 0; axis < 3; ++axis) {
        for (std::size_t v = 0; v < grid.factor_size(axis); ++v) {
          Rat sum = 0;
          for (std::size_t j = 0; j < pts.size(); ++j) {
            if (pts[j][axis] == v) sum += lambda[j];
          }
          classes_vanish = classes_vanish && sgn(sum) == 0;
        }
      }
      CHECK(in_kernel == classes_vanish);
    }
  }

  TEST_CASE("tables are stored in lowest terms") {
    const ProductGrid grid({2});
    const TabulatedFunction f(grid, {Rat(2, 4), Rat(-6, 3)});
    CHECK(f.values() == RatVector{Rat(1, 2), Rat(-2)});
    CHECK(f.scaled(Rat(4, 8)).values() == RatVector{Rat(1, 4), Rat(-1)});
    const SeparableSum g(grid, {{Rat(3, 9), Rat(0, 5)}});
    CHECK(g.tables()[0][0] == Rat(1, 3));
  }
}
