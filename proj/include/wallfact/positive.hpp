#pragma once

// Factorizations into positive reflections (Q(v) > 0) over Q. Q is
// square-dense, which is all the constructions below rely on.

#include <optional>
#include <utility>
#include <vector>

#include "wallfact/factor.hpp"

namespace wallfact {

/// True iff the spinor norm of f has a positive representative.
bool is_positive_isometry(const Isometry& f);

struct PositivityReport {
  bool spinor_positive = false;
  Definiteness mov_definiteness = Definiteness::PosDef;
  bool is_involution = false;
  std::size_t positive_length = 0;  // only meaningful when spinor_positive
};

PositivityReport positivity_report(const Isometry& f);

/// Some u with chi(u, u) > 0 in F^m: basis vectors, pairwise sums and
/// differences, then the diagonalized symmetric part. nullopt if none.
std::optional<Vector> find_chi_positive(const Matrix& chi);

/// Triangular basis with chi(e_1, e_1) > 0. Starts from `hint` when given.
/// Throws NoPositiveVector, DegenerateChi.
std::vector<Vector> basis_with_one_positive_vector(const Matrix& chi, std::optional<Vector> hint = std::nullopt);

enum class PairCase {
  Direct,        // e_1 together with a positive vector from the complement
  SumNonzero,    // chi(e_2, e_2) = 0 and b + c != 0
  SumZero,       // chi(e_2, e_2) = 0 and b + c = 0
  WideInterval,  // chi(e_2, e_2) < 0 and b^2 >= 4 delta epsilon
  SquareSearch,  // chi(e_2, e_2) < 0 and q^2 found by rational_square_in_interval
};

struct PositivePair {
  Vector v1;
  Vector v2;
  PairCase branch;
};

/// v1, v2 in F^3 with chi(v1, v1) > 0, chi(v2, v2) > 0 and chi(v1, v2) = 0.
/// Throws SymmetricChi, NoPositiveVector, DegenerateChi.
PositivePair orthogonal_positive_pair_3d(const Matrix& chi);

/// w with chi(v1 + a u, v2 + a w) = 0 for every a; w = 0 when u lies in <v1>.
Vector perturb_orthogonal_pair(const Matrix& chi, const Vector& v1, const Vector& v2, const Vector& u);

/// delta = min(1, chi(v,v) / 3M), M = max(|chi(u,v)|, |chi(v,u)|, |chi(u,u)|, 1).
/// chi(v + a u, v + a u) > 0 whenever |a| < delta. Throws NoPositiveVector
/// unless chi(v, v) > 0.
Scalar perturb_positive_vector(const Matrix& chi, const Vector& v, const Vector& u);

/// Triangular basis of chi-positive vectors.
/// Throws DegenerateChi, NegativeDeterminant, NoPositiveVector, or
/// SymmetricChi (symmetric chi that is not positive definite).
std::vector<Vector> positive_basis(const Matrix& chi, std::optional<Vector> hint = std::nullopt);

/// Throws UnorderedField, NegativeSpinor, NegativeDefiniteSpace.
std::size_t positive_reflection_length(const Isometry& f);

/// A factorization into positive_reflection_length(f) positive reflections.
Factorization positive_factorization(const Isometry& f);

bool positive_less_equal(const Isometry& g, const Isometry& f);

}  // namespace wallfact
