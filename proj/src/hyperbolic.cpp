#include "wallfact/hyperbolic.hpp"

#include <random>

#include "wallfact/bilinear.hpp"

namespace wallfact {

namespace {

void require_lorentz(const Isometry& f) {
  if (!f.space()->is_lorentzian()) throw Error(ErrorCode::NotLorentz, "expected the form diag(1, ..., 1, -1) over Q");
}

void require_positive(const Isometry& f) {
  require_lorentz(f);
  if (!is_positive_isometry(f)) throw Error(ErrorCode::NotPositive, "isometry does not preserve hyperbolic space");
}

Vector normalize_line(Vector v) {
  std::size_t pivot = v.size() - 1;
  if (v[pivot].is_zero())
    for (pivot = 0; v[pivot].is_zero(); ++pivot) {
    }
  const Scalar inv = v[pivot].inverse();
  for (auto& x : v) x = x * inv;
  return v;
}

}  // namespace

std::string to_string(HyperbolicType t) {
  switch (t) {
    case HyperbolicType::Elliptic: return "elliptic";
    case HyperbolicType::Parabolic: return "parabolic";
    case HyperbolicType::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

bool fixes_hyperbolic_space(const Isometry& f) {
  require_lorentz(f);
  return is_positive_isometry(f);
}

HyperbolicType classify_by_fix(const Isometry& f) {
  switch (f.space()->definiteness(fixed_space(f))) {
    case Definiteness::PosDef: return HyperbolicType::Hyperbolic;
    case Definiteness::PosSemi: return HyperbolicType::Parabolic;
    default: return HyperbolicType::Elliptic;
  }
}

HyperbolicType classify_by_mov(const Isometry& f) {
  switch (f.space()->definiteness(moved_space(f))) {
    case Definiteness::PosDef: return HyperbolicType::Elliptic;
    case Definiteness::PosSemi: return HyperbolicType::Parabolic;
    default: return HyperbolicType::Hyperbolic;
  }
}

HyperbolicType classify(const Isometry& f) {
  require_positive(f);
  const HyperbolicType by_mov = classify_by_mov(f);
  if (classify_by_fix(f) != by_mov) throw Error(ErrorCode::InternalError, "Fix and Mov classifications disagree");
  return by_mov;
}

Factorization hyperbolic_positive_factorization(const Isometry& f) {
  require_positive(f);
  const auto& space = f.space();
  const std::size_t n = space->dim();
  const Subspace spacelike = kernel(Matrix::from_rows(space->field(), {unit_vector(space->field(), n, n - 1)}, n));
  std::vector<Vector> vs;
  Isometry g = f;
  for (;;) {
    const Subspace mov = moved_space(g);
    if (mov.dim() == 0) break;
    Vector v = mov.dim() == 1 ? mov.basis().row(0) : subspace_intersection(mov, spacelike).basis().row(0);
    if (space->q(v).sign() <= 0) throw Error(ErrorCode::InternalError, "peeled vector is not positive");
    g = reflection(space, v) * g;
    if (moved_space(g).dim() + 1 != mov.dim()) throw Error(ErrorCode::InternalError, "peeling did not lower dim Mov");
    vs.push_back(std::move(v));
  }
  return Factorization(f, std::move(vs));
}

bool interval_subspace_test(const Isometry& f, const Subspace& u) {
  require_positive(f);
  const WallData wd = wall_form(f);
  if (!wd.mov.contains(u)) throw Error(ErrorCode::NotSubspace, "U is not contained in Mov(f)");
  return det(wd.restricted(u)).sign() > 0;
}

bool interval_membership(const Isometry& g, const Isometry& f) {
  require_positive(f);
  require_lorentz(g);
  const WallData wf = wall_form(f);
  const WallData wg = wall_form(g);
  if (!wf.mov.contains(wg.mov)) return false;
  const Matrix restricted = wf.restricted(wg.mov);
  return restricted == wg.chi && det(restricted).sign() > 0;
}

std::string IntervalDescription::predicate() const {
  switch (type) {
    case HyperbolicType::Elliptic: return "all subspaces";
    case HyperbolicType::Parabolic: return "not (<v> <= U <= <v>^>)";
    case HyperbolicType::Hyperbolic: return "det(chi_f|U) > 0";
  }
  return "";
}

IntervalDescription parabolic_interval_description(const Isometry& f) {
  IntervalDescription d;
  d.type = classify(f);
  const WallData wd = wall_form(f);
  d.mov = wd.mov;
  if (d.type != HyperbolicType::Parabolic) return d;

  const auto& space = f.space();
  const Subspace line = subspace_intersection(fixed_space(f), wd.mov);
  if (line.dim() != 1 || !space->q(line.basis().row(0)).is_zero())
    throw Error(ErrorCode::InternalError, "Fix and Mov do not meet in a singular line");
  const Vector v = normalize_line(line.basis().row(0));
  const std::size_t n = space->dim();
  auto w = solve(Matrix::identity(space->field(), n) - f.matrix(), v);
  if (!w) throw Error(ErrorCode::InternalError, "v is not in the image of id - f");
  const Subspace right = chi_right_complement(wd, line);
  const Subspace perp = subspace_intersection(space->orthogonal_complement(Subspace::span(space->field(), n, {*w})), wd.mov);
  if (!(right == perp)) throw Error(ErrorCode::InternalError, "<v>^> differs from <w>^perp");
  d.singular_line = v;
  d.w = *w;
  d.hyperplane = right;
  return d;
}

bool description_admits(const IntervalDescription& d, const Isometry& f, const Subspace& u) {
  if (!d.mov.contains(u)) throw Error(ErrorCode::NotSubspace, "U is not contained in Mov(f)");
  switch (d.type) {
    case HyperbolicType::Elliptic: return true;
    case HyperbolicType::Parabolic: return !(u.contains(*d.singular_line) && d.hyperplane->contains(u));
    case HyperbolicType::Hyperbolic: return interval_subspace_test(f, u);
  }
  return false;
}

IntervalSample sample_interval(const Isometry& f, std::size_t per_dim, std::uint64_t seed, int range) {
  require_positive(f);
  const WallData wd = wall_form(f);
  const Field q = f.field();
  const std::size_t m = wd.dim();
  IntervalSample s;
  s.sampled.assign(m + 1, 0);
  s.accepted.assign(m + 1, 0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-range, range);
  for (std::size_t k = 0; k <= m; ++k) {
    for (std::size_t t = 0; t < per_dim; ++t) {
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < k; ++i) {
        Vector c;
        for (std::size_t j = 0; j < m; ++j) c.push_back(q.from_int(coord(rng)));
        rows.push_back(wd.mov.from_coordinates(c));
      }
      const Subspace u = Subspace::span(q, f.dim(), rows);
      if (u.dim() != k) continue;
      ++s.sampled[k];
      if (det(wd.restricted(u)).sign() > 0) ++s.accepted[k];
    }
  }
  return s;
}

}  // namespace wallfact
