#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wallfact/wall.hpp"

namespace wallfact {

/// A certified reflection factorization f = r_{v_1} ... r_{v_k}.
class Factorization {
 public:
  /// Multiplies the reflections out and throws InternalError unless the
  /// product is `target`. Throws SingularVector for a singular v_i.
  Factorization(const Isometry& target, std::vector<Vector> vectors);

  std::size_t length() const { return vectors_.size(); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  /// Vectors scaled so the first nonzero coordinate is 1.
  std::vector<Vector> normalized() const;

 private:
  std::vector<Vector> vectors_;
};

/// A basis e_1..e_m of F^m (rows, coordinates) with chi(e_i, e_i) != 0 and
/// chi(e_i, e_j) = 0 for i < j.
///
/// Throws DegenerateChi for singular chi and AlternatingForm when no vector
/// with chi(u, u) != 0 exists.
std::vector<Vector> triangular_basis(const Matrix& chi);

/// The same construction restricted to a subspace S of F^m, optionally
/// starting from a given vector `first` in S with chi(first, first) != 0.
/// With `positive_first`, the repair step keeps chi(e_1, e_1) > 0 (Q only;
/// `first` must then be positive).
std::vector<Vector> triangular_basis_from(const Matrix& chi, const Subspace& s, std::optional<Vector> first,
                                          bool positive_first);

enum class Side { Right, Left };

/// Splits f along U1 (a subspace of Mov(f) with chi_f|U1 non-degenerate).
/// Right: U2 = U1^>, f = f1 f2. Left: U2 = U1^<, f = f2 f1.
/// Throws NotSubspace or DegenerateRestriction.
std::pair<Isometry, Isometry> split(const Isometry& f, const Subspace& u1, Side side);

std::size_t reflection_length(const Isometry& f);
bool is_minimal(const Isometry& f);

/// A factorization of length reflection_length(f); direct when f is minimal.
/// The identity yields the empty factorization.
Factorization minimal_factorization(const Isometry& f);

/// First non-singular vector among e_i, then e_i + e_j (i < j).
Vector first_nonsingular_vector(const QuadraticSpace& space);

}  // namespace wallfact
