#pragma once

// Isometries of hyperbolic n-space in the hyperboloid model, over Q: the
// Lorentz space diag(1, ..., 1, -1) and its positive isometries. All
// operations throw NotLorentz on any other space.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wallfact/positive.hpp"

namespace wallfact {

enum class HyperbolicType { Elliptic, Parabolic, Hyperbolic };

std::string to_string(HyperbolicType t);

/// f preserves the upper sheet Q(x) = -1, x_{n+1} > 0, i.e. f is positive.
bool fixes_hyperbolic_space(const Isometry& f);

/// From Fix(f): has a negative vector / degenerate / positive definite.
HyperbolicType classify_by_fix(const Isometry& f);
/// From Mov(f): positive definite / semi-definite / has a negative vector.
HyperbolicType classify_by_mov(const Isometry& f);

/// Both criteria; throws InternalError if they disagree, NotPositive for
/// non-positive f.
HyperbolicType classify(const Isometry& f);

/// dim Mov(f) positive reflections, peeling v in Mov(f) with x_{n+1} = 0.
Factorization hyperbolic_positive_factorization(const Isometry& f);

/// det(chi_f|U) > 0 for a subspace U of Mov(f). Throws NotSubspace.
bool interval_subspace_test(const Isometry& f, const Subspace& u);

/// g in [id, f] for the positive order: Mov(g) in Mov(f), chi_g is the
/// restriction of chi_f, and that restriction has positive determinant.
bool interval_membership(const Isometry& g, const Isometry& f);

/// Simplified description of [id, f] in terms of subspaces of Mov(f).
struct IntervalDescription {
  HyperbolicType type = HyperbolicType::Elliptic;
  Subspace mov;
  // Parabolic only: the fixed singular line <v> (last coordinate 1 when
  // nonzero), some w with w - f(w) = v, and <v>^> = <w>^perp inside Mov(f).
  std::optional<Vector> singular_line;
  std::optional<Vector> w;
  std::optional<Subspace> hyperplane;

  /// Elliptic: "all subspaces"; parabolic: "not (<v> in U in <v>^>)";
  /// hyperbolic: "det(chi_f|U) > 0".
  std::string predicate() const;
};

IntervalDescription parabolic_interval_description(const Isometry& f);

/// Membership of U (a subspace of Mov(f)) under the description. The
/// hyperbolic case has no simplified form and evaluates the determinant.
bool description_admits(const IntervalDescription& d, const Isometry& f, const Subspace& u);

/// Sampling harness for the isomorphism-type question on hyperbolic f:
/// per dimension k of Mov(f), how many sampled k-dimensional subspaces
/// (spanned by small integer coordinate vectors) pass the determinant test.
struct IntervalSample {
  std::vector<std::size_t> sampled;   // index k = dim U
  std::vector<std::size_t> accepted;
};

IntervalSample sample_interval(const Isometry& f, std::size_t per_dim, std::uint64_t seed, int range = 2);

}  // namespace wallfact
