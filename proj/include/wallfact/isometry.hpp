#pragma once

#include <string>

#include "wallfact/quadspace.hpp"

namespace wallfact {

/// An element of O(V, Q), acting on column vectors: f(v) = F v.
class Isometry {
 public:
  /// Checks F^T B F = B; throws NotIsometry otherwise.
  Isometry(SpacePtr space, Matrix mat);

  static Isometry identity(const SpacePtr& space);
  /// Skips the preservation check; for products of known isometries.
  static Isometry trusted(SpacePtr space, Matrix mat);

  const SpacePtr& space() const { return space_; }
  const Matrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }
  const Field& field() const { return mat_.field(); }

  Vector apply(const Vector& v) const { return mat_ * v; }
  Isometry inverse() const;
  bool is_identity() const { return mat_.is_identity(); }
  bool is_involution() const;

  std::string key() const { return mat_.key(); }

  /// Composition (f * g)(v) = f(g(v)).
  friend Isometry operator*(const Isometry& f, const Isometry& g);
  friend bool operator==(const Isometry& a, const Isometry& b) { return a.mat_ == b.mat_; }
  friend bool operator!=(const Isometry& a, const Isometry& b) { return !(a == b); }

 private:
  struct TrustedTag {};
  Isometry(SpacePtr space, Matrix mat, TrustedTag) : space_(std::move(space)), mat_(std::move(mat)) {}

  SpacePtr space_;
  Matrix mat_;
};

/// r_v(u) = u - beta(u, v)/Q(v) v. Throws SingularVector if Q(v) = 0.
Isometry reflection(const SpacePtr& space, const Vector& v);

/// r_{v_1} r_{v_2} ... r_{v_k}.
Isometry reflection_product(const SpacePtr& space, const std::vector<Vector>& vectors);

}  // namespace wallfact
