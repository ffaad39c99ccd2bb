#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "wallfact/isometry.hpp"

namespace testutil {

using namespace wallfact;

inline Vector vec(const Field& f, std::initializer_list<std::int64_t> xs) {
  Vector v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

inline Vector qvec(std::initializer_list<const char*> xs) {
  Vector v;
  for (auto x : xs) v.push_back(Field::rational().parse(x));
  return v;
}

inline Matrix mat(const Field& f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<Vector> rs;
  for (auto r : rows) rs.push_back(vec(f, r));
  return Matrix::from_rows(f, rs);
}

inline Matrix qmat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<Vector> rs;
  for (auto r : rows) rs.push_back(qvec(r));
  return Matrix::from_rows(Field::rational(), rs);
}

inline Scalar q(const char* s) { return Field::rational().parse(s); }

/// Small random rational n/d with |n| <= range and 1 <= d <= den.
inline Scalar random_rational(std::mt19937_64& rng, int range, int den = 4) {
  std::uniform_int_distribution<int> num(-range, range), dd(1, den);
  mpq_class r(num(rng), dd(rng));
  r.canonicalize();
  return Field::rational().from_mpq(r);
}

inline Scalar random_element(const Field& f, std::mt19937_64& rng, int range = 5) {
  if (f.is_rational()) return random_rational(rng, range);
  std::uniform_int_distribution<std::int64_t> d(0, f.characteristic() - 1);
  return f.from_int(d(rng));
}

inline Vector random_vector(const Field& f, std::size_t n, std::mt19937_64& rng, int range = 5) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_element(f, rng, range));
  return v;
}

inline Vector random_nonsingular(const SpacePtr& space, std::mt19937_64& rng, int range = 3) {
  for (;;) {
    Vector v = random_vector(space->field(), space->dim(), rng, range);
    if (!space->q(v).is_zero()) return v;
  }
}

/// Product of k random reflections.
inline Isometry random_isometry(const SpacePtr& space, std::size_t k, std::mt19937_64& rng) {
  Isometry f = Isometry::identity(space);
  for (std::size_t i = 0; i < k; ++i) f = f * reflection(space, random_nonsingular(space, rng));
  return f;
}

inline Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int range = 4) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_element(f, rng, range);
  return m;
}

}  // namespace testutil
