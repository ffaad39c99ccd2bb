#pragma once

// Post-conditions of the constructive lemmas, evaluated directly, and the
// 3x3 forms whose standard basis realizes each branch of the positive pair
// construction.

#include "common/helpers.hpp"
#include "wallfact/bilinear.hpp"
#include "wallfact/positive.hpp"

namespace testutil {

inline Scalar self(const Matrix& chi, const Vector& v) { return form_value(chi, v, v); }

/// Basis with chi(e_i, e_i) != 0 and chi(e_i, e_j) = 0 for i < j.
inline bool is_triangular_basis(const Matrix& chi, const std::vector<Vector>& e) {
  if (e.size() != chi.rows()) return false;
  if (rank(Matrix::from_rows(chi.field(), e, chi.rows())) != e.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (self(chi, e[i]).is_zero()) return false;
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (!form_value(chi, e[i], e[j]).is_zero()) return false;
  }
  return true;
}

inline bool is_positive_triangular(const Matrix& chi, const std::vector<Vector>& e) {
  if (!is_triangular_basis(chi, e)) return false;
  for (const auto& v : e)
    if (self(chi, v).sign() <= 0) return false;
  return true;
}

inline bool valid_pair(const Matrix& chi, const PositivePair& p) {
  return self(chi, p.v1).sign() > 0 && self(chi, p.v2).sign() > 0 && form_value(chi, p.v1, p.v2).is_zero();
}

inline Scalar positive_rational(std::mt19937_64& rng) {
  Scalar x = random_rational(rng, 6, 3).abs();
  return x.is_zero() ? Field::rational().one() : x;
}

inline Scalar nonzero_rational(std::mt19937_64& rng) {
  for (;;) {
    Scalar x = random_rational(rng, 6, 3);
    if (!x.is_zero()) return x;
  }
}

// chi(e2, e2) = 0 branch. Rows/columns: e1, e2, e3.
inline Matrix case1_form(const Scalar& gamma, const Scalar& delta, const Scalar& a, const Scalar& b, const Scalar& c) {
  Matrix m(Field::rational(), 3, 3);
  m(0, 0) = gamma;
  m(1, 2) = c;
  m(2, 0) = a;
  m(2, 1) = b;
  m(2, 2) = -delta;
  return m;
}

// chi(e2, e2) < 0 branch.
inline Matrix case2_form(const Scalar& gamma, const Scalar& delta, const Scalar& eps, const Scalar& a, const Scalar& b) {
  Matrix m(Field::rational(), 3, 3);
  m(0, 0) = gamma;
  m(1, 1) = -delta;
  m(2, 0) = a;
  m(2, 1) = b;
  m(2, 2) = -eps;
  return m;
}

}  // namespace testutil
