#pragma once

// Wall's parametrization of O(V): an isometry f is determined by its moved
// space Mov(f) = im(id - f) together with the Wall form
//
//   chi_f(u, v) = beta(w, v)   for any w with u = w - f(w),
//
// a non-degenerate bilinear form on Mov(f) with chi_f(u, u) = Q(u).
// Conversely every such pair (W, chi) comes from exactly one isometry.

#include <string>
#include <vector>

#include "wallfact/isometry.hpp"

namespace wallfact {

Subspace fixed_space(const Isometry& f);
Subspace moved_space(const Isometry& f);

/// The Wall form of an isometry, as a Gram matrix on the canonical (RREF)
/// basis of Mov(f). Canonical per isometry.
struct WallData {
  Subspace mov;
  Matrix chi;  // chi(i, j) = chi_f(u_i, u_j), u_i = i-th row of mov.basis()

  std::size_t dim() const { return mov.dim(); }
  const Matrix& basis() const { return mov.basis(); }
  /// Gram matrix of chi_f restricted to a subspace U of Mov(f), on U's
  /// canonical basis. Throws NotSubspace.
  Matrix restricted(const Subspace& u) const;
  /// Coordinates (relative to the Mov basis) of a subspace of Mov(f).
  Subspace to_coordinates(const Subspace& u) const;
  Subspace from_coordinates(const Subspace& c) const;

  friend bool operator==(const WallData&, const WallData&) = default;
};

WallData wall_form(const Isometry& f);

/// Builds f(w) = w - phi^{-1}(alpha_w), where phi(u) = chi(u, .) and
/// alpha_w = beta(w, .) restricted to W. `chi` is a Gram matrix on the
/// canonical basis of W.
///
/// Throws DegenerateChi if det(chi) = 0, ChiQMismatch unless chi_ii = Q(u_i)
/// and chi + chi^T equals the beta-Gram matrix of W.
Isometry isometry_from_wall(const SpacePtr& space, const Subspace& w, const Matrix& chi);

/// Complements inside Mov(f) with respect to chi_f; U must lie in Mov(f).
Subspace chi_right_complement(const WallData& wd, const Subspace& u);
Subspace chi_left_complement(const WallData& wd, const Subspace& u);

/// theta(f) = [det chi_f].
SquareClass spinor_norm(const Isometry& f);

struct WallPropertiesReport {
  bool symmetrization = false;        // chi(u,v) + chi(v,u) = beta(u,v)
  bool twisted_antisymmetry = false;  // chi(f(u), v) = -chi(v, u)
  bool inverse_transposes = false;    // Mov(f^-1) = Mov(f), chi_{f^-1} = chi^T
  bool conjugation = false;           // chi_{gfg^-1}(g u, g v) = chi_f(u, v)
  bool symmetric_iff_involution = false;

  bool all() const {
    return symmetrization && twisted_antisymmetry && inverse_transposes && conjugation &&
           symmetric_iff_involution;
  }
};

WallPropertiesReport check_wall_properties(const Isometry& f, const Isometry& g);

}  // namespace wallfact
