#include <doctest.h>

#include <set>

#include "common/helpers.hpp"

using namespace wallfact;
using testutil::mat;
using testutil::vec;

TEST_CASE("solve") {
  const Field r = Field::rational();
  Vector b = vec(r, {3, -1});
  CHECK(*solve(Matrix::identity(r, 2), b) == b);
  CHECK_FALSE(solve(Matrix(r, 2, 2), b).has_value());
  const Field f3 = Field::prime(3);
  CHECK(*solve(mat(f3, {{1, 2}, {2, 1}}), vec(f3, {0, 0})) == vec(f3, {0, 0}));
  CHECK_THROWS_AS(solve(Matrix::identity(r, 2), vec(r, {1})), Error);
}

TEST_CASE("kernel, image, rank, det") {
  const Field r = Field::rational();
  CHECK(kernel(Matrix(r, 3, 3)) == Subspace::full(r, 3));
  CHECK(rank(mat(r, {{1, 0, 0}, {0, 0, 1}, {0, -1, 0}})) == 3);
  const Field f5 = Field::prime(5);
  CHECK(det(mat(f5, {{2, 0}, {0, 3}})) == f5.one());
  CHECK_THROWS_AS(det(Matrix(r, 2, 3)), Error);
  CHECK_THROWS_AS(inverse(Matrix(r, 2, 2)), Error);
  Matrix a = mat(r, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(image(a).dim() == 2);
  CHECK(kernel(a).dim() == 1);
}

TEST_CASE("subspace sum, intersection, containment") {
  const Field r = Field::rational();
  Subspace u = Subspace::span(r, 3, {vec(r, {1, 1, 0})});
  Subspace z = Subspace::zero(r, 3);
  CHECK(subspace_sum(u, z) == u);
  CHECK(subspace_intersection(u, u) == u);
  Subspace full = Subspace::full(r, 3);
  CHECK(full.contains(vec(r, {0, 1, 0})));
  CHECK_FALSE(u.contains(vec(r, {0, 1, 0})));
}

TEST_CASE("subspace enumeration counts match Gaussian binomials") {
  const Field f3 = Field::prime(3);
  CHECK(enumerate_subspaces(Subspace::full(f3, 1)).size() == 2);
  auto two = enumerate_subspaces(Subspace::full(f3, 2));
  CHECK(two.size() == 6);
  auto three = enumerate_subspaces(Subspace::full(f3, 3));
  CHECK(three.size() == 28);
  std::set<std::string> keys;
  for (const auto& s : three) keys.insert(s.key());
  CHECK(keys.size() == 28);
  CHECK(count_subspaces(3, 3) == 28);
  CHECK(count_subspaces(4, 5) == 1 + 156 + 806 + 156 + 1);
  CHECK_THROWS_AS(SubspaceEnumerator(Subspace::full(f3, 6), 100), Error);
  CHECK_THROWS_AS(SubspaceEnumerator(Subspace::full(Field::rational(), 2)), Error);

  // Enumerating inside a proper subspace stays inside it.
  Subspace plane = Subspace::span(f3, 3, {vec(f3, {1, 1, 0}), vec(f3, {0, 1, 2})});
  auto inside = enumerate_subspaces(plane);
  CHECK(inside.size() == 6);
  for (const auto& s : inside) CHECK(plane.contains(s));
}

TEST_CASE("random linear algebra identities") {
  std::mt19937_64 rng(17);
  for (const Field f : {Field::rational(), Field::prime(3), Field::prime(5)}) {
    for (int i = 0; i < 60; ++i) {
      std::uniform_int_distribution<std::size_t> d(1, 4);
      std::size_t rows = d(rng), cols = d(rng);
      Matrix a = testutil::random_matrix(f, rows, cols, rng, 2);
      CHECK(rank(a) + kernel(a).dim() == cols);
      Vector x = testutil::random_vector(f, cols, rng);
      Vector b = a * x;
      auto sol = solve(a, b);
      REQUIRE(sol.has_value());
      CHECK(a * *sol == b);

      Matrix bu = testutil::random_matrix(f, d(rng), 4, rng, 2);
      Matrix bw = testutil::random_matrix(f, d(rng), 4, rng, 2);
      Subspace u = Subspace::row_span(bu), w = Subspace::row_span(bw);
      CHECK(subspace_sum(u, w).dim() + subspace_intersection(u, w).dim() == u.dim() + w.dim());
      // Basis independence: a random invertible change of basis gives the same subspace.
      Matrix p = testutil::random_matrix(f, bu.rows(), bu.rows(), rng, 3);
      if (!det(p).is_zero()) CHECK(Subspace::row_span(p * bu) == u);
      if (f.is_rational() && rows == cols && !det(a).is_zero()) CHECK((a * inverse(a)).is_identity());
    }
  }
}
