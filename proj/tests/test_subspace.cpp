#include "doctest.h"
#include "oracles.hpp"
#include "qsun/subspace.hpp"

using namespace qsun;

namespace {

Subspace span(const Field& f, std::initializer_list<std::initializer_list<int>> rows) {
  return Subspace::row_space(Matrix::from_ints(f, rows));
}

}  // namespace

TEST_CASE("from_rows canonicalizes") {
  const Field f2 = Field::make(2, 1);
  const Subspace s1 = Subspace::from_rows(f2, 5, {{1, 0, 0, 0, 0}, {0, 0, 1, 1, 0}});
  CHECK(s1.dim() == 2);
  CHECK(s1.ambient_dim() == 5);
  CHECK(Subspace::from_rows(f2, 2, {{1, 1}, {1, 1}}).dim() == 1);
  const Subspace z = Subspace::from_rows(f2, 4, {});
  CHECK(z.dim() == 0);
  CHECK(z == Subspace::zero(f2, 4));
  CHECK(span(f2, {{1, 0, 0, 0, 0}, {1, 0, 1, 1, 0}}) == s1);
  CHECK_THROWS_AS(Subspace::from_rows(f2, 3, {{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Subspace::from_rows(f2, 2, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("canonical form is independent of the generating set") {
  std::mt19937_64 rng(11);
  for (auto q : {2u, 3u, 4u, 7u}) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 200; ++t) {
      const Subspace s = oracle::random_subspace(f, 6, rng);
      CHECK(Subspace::row_space(oracle::scrambled_basis(s, rng)) == s);
      CHECK(Subspace::row_space(s.basis()) == s);
    }
  }
}

TEST_CASE("sums") {
  const Field f2 = Field::make(2, 1);
  const Subspace u = span(f2, {{1, 0, 0}, {0, 1, 0}});
  const Subspace v = span(f2, {{1, 0, 0}, {0, 0, 1}});
  const Subspace w = span(f2, {{1, 0, 0}, {0, 1, 1}});
  CHECK(sum({u, u}) == u);
  CHECK(sum({u, v, w}) == Subspace::full(f2, 3));

  const Subspace s1 = span(f2, {{1, 0, 0, 0, 0}, {0, 0, 1, 1, 0}});
  const Subspace s2 = span(f2, {{1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}});
  const Subspace s3 = span(f2, {{1, 0, 0, 0, 0}, {0, 0, 1, 1, 1}});
  const Subspace plane = span(f2, {{1, 0, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}});
  CHECK(sum({s1, s2, s3}) == plane);
  CHECK(sum({s1, s2, s3}).dim() == 3);

  CHECK_THROWS_AS(sum({u, Subspace::zero(f2, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(sum({u, span(Field::make(3, 1), {{1, 0, 0}})}), std::invalid_argument);
}

TEST_CASE("intersections") {
  const Field f2 = Field::make(2, 1);
  const Subspace u = span(f2, {{1, 0, 0}, {0, 1, 0}});
  const Subspace v = span(f2, {{1, 0, 0}, {0, 0, 1}});
  CHECK(intersect({u, v}) == span(f2, {{1, 0, 0}}));
  CHECK(intersect({u, u}) == u);

  const Subspace s1 = span(f2, {{1, 0, 0, 0, 0}, {0, 0, 1, 1, 0}});
  const Subspace s2 = span(f2, {{1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}});
  CHECK(intersect({s1, s2}) == span(f2, {{1, 0, 0, 0, 0}}));
  CHECK_THROWS_AS(intersect({u, Subspace::zero(f2, 5)}), std::invalid_argument);
}

TEST_CASE("orthogonal complement") {
  const Field f2 = Field::make(2, 1);
  CHECK(orthocomplement(Subspace::full(f2, 4)) == Subspace::zero(f2, 4));
  CHECK(orthocomplement(Subspace::zero(f2, 4)) == Subspace::full(f2, 4));

  const Subspace u = span(f2, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}});
  const Subspace perp = orthocomplement(u);
  CHECK(perp == span(f2, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < perp.dim(); ++j) {
      Elem dot = 0;
      for (std::size_t c = 0; c < 5; ++c) dot = f2.add(dot, f2.mul(u.basis()(i, c), perp.basis()(j, c)));
      CHECK(dot == 0);
    }
  }

  std::mt19937_64 rng(3);
  for (auto q : oracle::small_orders()) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 100; ++t) {
      const Subspace s = oracle::random_subspace(f, 5, rng);
      const Subspace p = orthocomplement(s);
      CHECK(s.dim() + p.dim() == 5);
      CHECK(orthocomplement(p) == s);
    }
  }
}

TEST_CASE("orthogonal complement matches brute-force enumeration") {
  std::mt19937_64 rng(5);
  for (auto q : {2u, 3u, 4u}) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 40; ++t) {
      const Subspace s = oracle::random_subspace(f, 4, rng);
      CHECK(oracle::all_vectors(orthocomplement(s).basis()) == oracle::perp_by_enumeration(s));
    }
  }
}

TEST_CASE("containment") {
  const Field f3 = Field::make(3, 1);
  const Subspace s = span(f3, {{1, 2, 0}, {0, 0, 1}});
  CHECK(s.contains(std::vector<Elem>{2, 1, 2}));
  CHECK_FALSE(s.contains(std::vector<Elem>{0, 1, 0}));
  CHECK(s.contains(span(f3, {{1, 2, 1}})));
  CHECK_FALSE(s.contains(Subspace::full(f3, 3)));
  CHECK(s.contains(Subspace::zero(f3, 3)));
}

TEST_CASE("property: two-subspace dimension formula, duality and intersection oracles") {
  std::mt19937_64 rng(20261016);
  for (auto q : oracle::small_orders()) {
    CAPTURE(q);
    const Field f = Field::of_order(q);
    bool formula = true;
    bool duality = true;
    bool zassenhaus = true;
    bool enumeration = true;
    for (int t = 0; t < 1000; ++t) {
      const std::size_t n = 1 + static_cast<std::size_t>(t % 6);
      const Subspace u = oracle::random_subspace(f, n, rng);
      const Subspace v = oracle::random_subspace(f, n, rng);
      const Subspace w = oracle::random_subspace(f, n, rng);
      const Subspace meet = intersect({u, v});
      formula &= sum({u, v}).dim() + meet.dim() == u.dim() + v.dim();
      duality &= orthocomplement(sum({u, v})) == intersect({orthocomplement(u), orthocomplement(v)});
      duality &= orthocomplement(sum({u, v, w})) ==
                 intersect({orthocomplement(u), orthocomplement(v), orthocomplement(w)});
      zassenhaus &= meet == oracle::zassenhaus_intersection(u, v);
      zassenhaus &= intersect({u, v, w}) == oracle::zassenhaus_intersection(meet, w);
      if (q <= 4 && n <= 4 && t % 10 == 0) {
        enumeration &= oracle::all_vectors(meet.basis()) ==
                       oracle::intersect_sets(oracle::all_vectors(u.basis()), oracle::all_vectors(v.basis()));
      }
    }
    CHECK(formula);
    CHECK(duality);
    CHECK(zassenhaus);
    CHECK(enumeration);
  }
}

TEST_CASE("three-subspace inclusion-exclusion fails on the coordinate example") {
  for (auto q : {2u, 3u}) {
    const Field f = Field::of_order(q);
    const Subspace u = span(f, {{1, 0, 0}, {0, 1, 0}});
    const Subspace v = span(f, {{1, 0, 0}, {0, 0, 1}});
    const Subspace w = span(f, {{1, 0, 0}, {0, 1, 1}});
    const long lhs = static_cast<long>(sum({u, v, w}).dim());
    const long rhs = 2 + 2 + 2 - static_cast<long>(intersect({u, v}).dim() + intersect({u, w}).dim() +
                                                   intersect({v, w}).dim()) +
                     static_cast<long>(intersect({u, v, w}).dim());
    CHECK(lhs == 3);
    CHECK(rhs == 4);
  }
}

TEST_CASE("gaussian binomial") {
  CHECK(gaussian_binomial(2, 5, 2) == 155);
  CHECK(gaussian_binomial(2, 4, 2) == 35);
  CHECK(gaussian_binomial(3, 3, 1) == 13);
  CHECK(gaussian_binomial(5, 4, 0) == 1);
  CHECK(gaussian_binomial(5, 4, 4) == 1);
  CHECK(gaussian_binomial(2, 3, 4) == 0);
}

TEST_CASE("enumeration counts and order") {
  const Field f2 = Field::make(2, 1);
  const auto all = enumerate_subspaces(f2, 5, 2);
  CHECK(all.size() == 155);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());

  // Count by brute force: distinct spans of all pairs of nonzero vectors.
  std::set<std::vector<std::vector<Elem>>> spans;
  for (std::uint32_t a = 1; a < 32; ++a) {
    for (std::uint32_t b = a + 1; b < 32; ++b) {
      std::vector<Elem> va(5), vb(5);
      for (std::size_t i = 0; i < 5; ++i) {
        va[i] = static_cast<Elem>((a >> i) & 1);
        vb[i] = static_cast<Elem>((b >> i) & 1);
      }
      const Subspace s = Subspace::from_rows(f2, 5, {va, vb});
      if (s.dim() == 2) spans.insert(s.basis().to_rows());
    }
  }
  CHECK(spans.size() == 155);

  for (auto q : {2u, 3u, 4u}) {
    const Field f = Field::of_order(q);
    for (std::size_t n = 0; n <= 4; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        CHECK(BigInt(enumerate_subspaces(f, n, k).size()) == gaussian_binomial(q, n, k));
      }
    }
  }
  CHECK_THROWS_AS(enumerate_subspaces(f2, 3, 4), std::invalid_argument);
  EnumerationOptions tiny;
  tiny.max_count = 100;
  CHECK_THROWS_AS(enumerate_subspaces(f2, 5, 2, {}, tiny), LimitExceeded);
}

TEST_CASE("filtered enumeration: pencil and lines missing a point") {
  const Field f2 = Field::make(2, 1);
  const Subspace t = span(f2, {{1, 0, 0, 0, 0}});
  const Subspace plane1 = span(f2, {{1, 0, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}});
  const Subspace plane2 = span(f2, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}});

  SubspaceFilter pencil;
  pencil.within = plane1;
  pencil.through = t;
  const auto p = enumerate_subspaces(f2, 5, 2, pencil);
  CHECK(p.size() == 3);
  for (const auto& s : p) CHECK(intersect({s, plane1}) == s);

  SubspaceFilter missing;
  missing.within = plane2;
  missing.disjoint_from = t;
  CHECK(enumerate_subspaces(f2, 5, 2, missing).size() == 4);

  SubspaceFilter inside;
  inside.within = plane1;
  CHECK(enumerate_subspaces(f2, 5, 2, inside).size() == 7);

  // The within-route agrees with filtering the full enumeration.
  std::vector<Subspace> by_hand;
  for (const auto& s : enumerate_subspaces(f2, 5, 2)) {
    if (plane1.contains(s)) by_hand.push_back(s);
  }
  CHECK(by_hand == enumerate_subspaces(f2, 5, 2, inside));

  const Field f3 = Field::make(3, 1);
  SubspaceFilter pencil3;
  pencil3.within = span(f3, {{1, 0, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}});
  pencil3.through = span(f3, {{1, 0, 0, 0, 0}});
  CHECK(enumerate_subspaces(f3, 5, 2, pencil3).size() == 4);

  SubspaceFilter foreign;
  foreign.within = Subspace::full(f2, 4);
  CHECK_THROWS_AS(enumerate_subspaces(f2, 5, 2, foreign), std::invalid_argument);
}
