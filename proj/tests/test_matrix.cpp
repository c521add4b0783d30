#include "doctest.h"
#include "oracles.hpp"
#include "qsun/matrix.hpp"

using namespace qsun;

TEST_CASE("rref of identity and empty matrices") {
  const Field f = Field::make(3, 1);
  const Rref r = rref(Matrix::identity(f, 4));
  CHECK(r.reduced == Matrix::identity(f, 4));
  CHECK(r.rank == 4);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(rank(Matrix(f, 0, 5)) == 0);
  CHECK(rank(Matrix(f, 3, 0)) == 0);
  CHECK(rref(Matrix(f, 3, 4)).reduced.rows() == 0);
}

TEST_CASE("rref trims zero rows and normalizes pivots") {
  const Field f = Field::make(3, 1);
  const Matrix m = Matrix::from_ints(f, {{0, 2, 1}, {0, 1, 2}, {0, 0, 0}, {1, 1, 1}});
  const Rref r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced == Matrix::from_ints(f, {{1, 0, 2}, {0, 1, 2}}));
}

TEST_CASE("the three 2-spaces through T in the printed plane stack to rank 3") {
  const Field f = Field::make(2, 1);
  const Matrix stack = Matrix::from_ints(
      f, {{1, 0, 0, 0, 0}, {0, 0, 1, 1, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {1, 0, 0, 0, 0}, {0, 0, 1, 1, 1}});
  CHECK(stack.rows() == 6);
  CHECK(rank(stack) == 3);
}

TEST_CASE("companion matrices") {
  const Field f2 = Field::make(2, 1);
  const Field f3 = Field::make(3, 1);
  CHECK(companion(Poly(f2, {1, 1})) == Matrix::from_ints(f2, {{1}}));

  const Poly g(f2, {1, 1, 1});
  const Matrix a = companion(g);
  CHECK(a == Matrix::from_ints(f2, {{0, 1}, {1, 1}}));
  // A^2 + A + I by hand: [[1,1],[1,0]] + [[0,1],[1,1]] + I = 0.
  CHECK((a * a + a + Matrix::identity(f2, 2)).is_zero());
  CHECK(evaluate(g, a).is_zero());

  const Matrix b = companion(Poly(f3, {1, 0, 1}));
  CHECK(b == Matrix::from_ints(f3, {{0, 1}, {2, 0}}));
  CHECK(b * b == -Matrix::identity(f3, 2));

  CHECK_THROWS_AS(companion(Poly(f3, {1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(companion(Poly(f3, {1})), std::invalid_argument);
}

TEST_CASE("f(companion(f)) = 0 for every small irreducible") {
  for (auto q : {2u, 3u, 4u, 5u}) {
    const Field f = Field::of_order(q);
    for (int d = 1; d <= 3; ++d) {
      const Poly g = smallest_monic_irreducible(f, d);
      CHECK(evaluate(g, companion(g)).is_zero());
    }
  }
}

TEST_CASE("matmul") {
  const Field f2 = Field::make(2, 1);
  const Matrix a = companion(Poly(f2, {1, 1, 1}));
  CHECK(a * Matrix::identity(f2, 2) == a);
  CHECK(matmul(a, a) == Matrix::from_ints(f2, {{1, 1}, {1, 0}}));
  CHECK(a * a == a + Matrix::identity(f2, 2));
  CHECK_THROWS_AS(a * Matrix(f2, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(a * Matrix::identity(Field::make(3, 1), 2), std::invalid_argument);
}

TEST_CASE("first column") {
  const Field f2 = Field::make(2, 1);
  CHECK(first_column(Matrix::identity(f2, 2)) == Matrix::from_ints(f2, {{1}, {0}}));
  CHECK(first_column(companion(Poly(f2, {1, 1, 1}))) == Matrix::from_ints(f2, {{0}, {1}}));
  CHECK_THROWS_AS(first_column(Matrix(f2, 2, 0)), std::invalid_argument);

  // Over the four polynomials in A: X [Y]_1 = [XY]_1 and [X]_1 + [Y]_1 = [X+Y]_1.
  const Matrix a = companion(Poly(f2, {1, 1, 1}));
  const Matrix id = Matrix::identity(f2, 2);
  const std::vector<Matrix> rep{Matrix(f2, 2, 2), id, a, a + id};
  for (const auto& x : rep) {
    for (const auto& y : rep) {
      CHECK(x * first_column(y) == first_column(x * y));
      CHECK(first_column(x) + first_column(y) == first_column(x + y));
    }
  }
}

TEST_CASE("stacking") {
  const Field f2 = Field::make(2, 1);
  const Matrix h = hstack({Matrix::identity(f2, 2), Matrix(f2, 2, 3)});
  CHECK(h.rows() == 2);
  CHECK(h.cols() == 5);
  CHECK(h == Matrix::from_ints(f2, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}));

  const Matrix a = companion(Poly(f2, {1, 1, 1}));
  const Matrix g = hstack({Matrix::identity(f2, 2), a, first_column(a * a)});
  CHECK(g == Matrix::from_ints(f2, {{1, 0, 0, 1, 1}, {0, 1, 1, 1, 1}}));

  const Matrix v = vstack({g, g, h});
  CHECK(v.rows() == 6);
  CHECK(v.cols() == 5);
  CHECK_THROWS_AS(hstack({Matrix(f2, 2, 2), Matrix(f2, 3, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(vstack({Matrix(f2, 2, 2), Matrix(f2, 2, 3)}), std::invalid_argument);
}

TEST_CASE("inverse") {
  const Field f3 = Field::make(3, 1);
  const Matrix m = Matrix::from_ints(f3, {{1, 2}, {0, 1}});
  CHECK(m * inverse(m) == Matrix::identity(f3, 2));
  CHECK_THROWS_AS(inverse(Matrix::from_ints(f3, {{1, 2}, {2, 1}})), std::domain_error);
  CHECK_THROWS_AS(inverse(Matrix(f3, 2, 3)), std::invalid_argument);
}

TEST_CASE("rank properties on random matrices") {
  std::mt19937_64 rng(0x5eed);
  for (auto q : oracle::small_orders()) {
    CAPTURE(q);
    const Field f = Field::of_order(q);
    for (int trial = 0; trial < 60; ++trial) {
      const Matrix a = oracle::random_matrix(f, 1 + trial % 5, 1 + (trial / 5) % 6, rng);
      const Matrix b = oracle::random_matrix(f, 1 + trial % 3, a.cols(), rng);
      const Rref r = rref(a);
      CHECK(rref(r.reduced).reduced == r.reduced);
      CHECK(rank(a) == rank(a.transpose()));
      const std::size_t rab = rank(vstack({a, b}));
      CHECK(rab >= std::max(rank(a), rank(b)));
      CHECK(rab <= rank(a) + rank(b));
      // Rank against the size of the row space, counted by enumeration.
      if (a.rows() <= 4 && q <= 5) {
        CHECK(oracle::dim_of_count(oracle::all_vectors(a).size(), q) == r.rank);
      }
      for (std::size_t i = 1; i < r.pivots.size(); ++i) CHECK(r.pivots[i - 1] < r.pivots[i]);
    }
  }
}

TEST_CASE("ordering is shape first, then row-major entries") {
  const Field f2 = Field::make(2, 1);
  CHECK(Matrix::from_ints(f2, {{0, 1}}) < Matrix::from_ints(f2, {{1, 0}}));
  CHECK(Matrix::from_ints(f2, {{1, 1}}) < Matrix::from_ints(f2, {{0, 0}, {0, 0}}));
  CHECK_FALSE(Matrix::identity(f2, 2) == Matrix::identity(Field::make(3, 1), 2));
}
