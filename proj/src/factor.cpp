#include "wallfact/factor.hpp"

#include "wallfact/bilinear.hpp"

namespace wallfact {

Factorization::Factorization(const Isometry& target, std::vector<Vector> vectors)
    : vectors_(std::move(vectors)) {
  if (reflection_product(target.space(), vectors_) != target)
    throw Error(ErrorCode::InternalError, "reflection product does not reproduce the isometry");
}

std::vector<Vector> Factorization::normalized() const {
  std::vector<Vector> out;
  out.reserve(vectors_.size());
  for (const auto& v : vectors_) out.push_back(projective_normalize(v));
  return out;
}

namespace {

Scalar self_value(const Matrix& chi, const Vector& x) { return form_value(chi, x, x); }

// {y in S : chi(u, y) = 0}
Subspace right_complement_in(const Matrix& chi, const Subspace& s, const Vector& u) {
  Matrix row = Matrix::from_rows(chi.field(), {chi.transpose() * u}, chi.rows());
  return embed(kernel(row * s.basis().transpose()), s.basis());
}

Subspace left_complement_in(const Matrix& chi, const Subspace& s, const Vector& u) {
  Matrix row = Matrix::from_rows(chi.field(), {chi * u}, chi.rows());
  return embed(kernel(row * s.basis().transpose()), s.basis());
}

bool alternating_on(const Matrix& chi, const Subspace& s) {
  return is_alternating(restrict_form(chi, s.basis()));
}

std::optional<Vector> probe_nonisotropic(const Matrix& chi, const Subspace& s) {
  const auto basis = s.vectors();
  for (const auto& b : basis)
    if (!self_value(chi, b).is_zero()) return b;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Vector v = basis[i] + basis[j];
      if (!self_value(chi, v).is_zero()) return v;
    }
  return std::nullopt;
}

// Smallest a in {start, start+1, ...} with pred(a); over F_p bounded by p.
template <class Pred>
Scalar first_scalar(const Field& f, std::int64_t start, Pred pred) {
  const std::int64_t limit = f.is_prime() ? f.characteristic() : 1 << 20;
  for (std::int64_t a = start; a < limit; ++a) {
    Scalar s = f.from_int(a);
    if (pred(s)) return s;
  }
  throw Error(ErrorCode::InternalError, "scalar search exhausted");
}

void triangular_step(const Matrix& chi, const Subspace& s, std::optional<Vector> hint, bool positive_first,
                     std::vector<Vector>& out) {
  if (s.dim() == 0) return;
  const Field f = chi.field();
  std::optional<Vector> u = hint;
  if (!u) u = probe_nonisotropic(chi, s);
  if (!u) throw Error(ErrorCode::AlternatingForm, "form is alternating");
  if (s.dim() == 1) {
    out.push_back(*u);
    return;
  }
  Subspace r = right_complement_in(chi, s, *u);
  if (!alternating_on(chi, r)) {
    out.push_back(*u);
    triangular_step(chi, r, std::nullopt, false, out);
    return;
  }

  // chi|R alternating: replace u by u + v for a suitable v in R.
  const auto rbasis = r.vectors();
  Subspace l = left_complement_in(chi, s, *u);
  Vector v = rbasis.front();
  if (l != r) {
    for (const auto& cand : rbasis)
      if (!form_value(chi, cand, *u).is_zero()) {
        v = cand;
        break;
      }
  }
  const Scalar uu = self_value(chi, *u);
  const Scalar vu = form_value(chi, v, *u);
  Scalar a = positive_first ? (vu.is_zero() ? f.one() : vu)
                            : first_scalar(f, 1, [&](const Scalar& x) { return !(uu + x * vu).is_zero(); });
  v = a * v;

  std::optional<Vector> w;
  for (const auto& cand : rbasis) {
    Scalar t = form_value(chi, v, cand);
    if (!t.is_zero()) {
      w = t.inverse() * cand;
      break;
    }
  }
  if (!w) throw Error(ErrorCode::InternalError, "no w with chi(v, w) = 1");
  const Vector e1 = *u + v;
  const Scalar c = self_value(chi, e1);
  const Scalar wu = form_value(chi, *w, *u);
  const Scalar vu_scaled = form_value(chi, v, *u);
  Scalar b = first_scalar(f, 0, [&](const Scalar& x) { return !(uu + x * vu_scaled - c * wu).is_zero(); });
  // u + b v - c w lies in <e1>^> and is not isotropic.
  Vector next = *u + b * v - c * *w;
  out.push_back(e1);
  triangular_step(chi, right_complement_in(chi, s, e1), next, false, out);
}

}  // namespace

std::vector<Vector> triangular_basis_from(const Matrix& chi, const Subspace& s, std::optional<Vector> first,
                                          bool positive_first) {
  std::vector<Vector> out;
  triangular_step(chi, s, std::move(first), positive_first, out);
  return out;
}

std::vector<Vector> triangular_basis(const Matrix& chi) {
  if (!chi.is_square()) throw Error(ErrorCode::NonSquare, "chi must be square");
  if (is_degenerate(chi)) throw Error(ErrorCode::DegenerateChi, "chi is degenerate");
  return triangular_basis_from(chi, Subspace::full(chi.field(), chi.rows()), std::nullopt, false);
}

std::pair<Isometry, Isometry> split(const Isometry& f, const Subspace& u1, Side side) {
  const WallData wd = wall_form(f);
  if (!wd.mov.contains(u1)) throw Error(ErrorCode::NotSubspace, "U1 is not inside Mov(f)");
  Matrix chi1 = wd.restricted(u1);
  if (is_degenerate(chi1)) throw Error(ErrorCode::DegenerateRestriction, "chi restricted to U1 is degenerate");
  Subspace u2 = side == Side::Right ? chi_right_complement(wd, u1) : chi_left_complement(wd, u1);
  Isometry f1 = isometry_from_wall(f.space(), u1, chi1);
  Isometry f2 = isometry_from_wall(f.space(), u2, wd.restricted(u2));
  return {std::move(f1), std::move(f2)};
}

std::size_t reflection_length(const Isometry& f) {
  Subspace mov = moved_space(f);
  if (mov.dim() == 0) return 0;
  return f.space()->is_totally_singular(mov) ? mov.dim() + 2 : mov.dim();
}

bool is_minimal(const Isometry& f) {
  Subspace mov = moved_space(f);
  return mov.dim() == 0 || !f.space()->is_totally_singular(mov);
}

Vector first_nonsingular_vector(const QuadraticSpace& space) {
  const std::size_t n = space.dim();
  const Field f = space.field();
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = unit_vector(f, n, i);
    if (!space.q(e).is_zero()) return e;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector e = unit_vector(f, n, i) + unit_vector(f, n, j);
      if (!space.q(e).is_zero()) return e;
    }
  throw Error(ErrorCode::InternalError, "no non-singular vector in a non-degenerate space");
}

Factorization minimal_factorization(const Isometry& f) {
  const WallData wd = wall_form(f);
  if (wd.dim() == 0) return Factorization(f, {});
  std::vector<Vector> vectors;
  if (!f.space()->is_totally_singular(wd.mov)) {
    for (const auto& e : triangular_basis(wd.chi)) vectors.push_back(wd.mov.from_coordinates(e));
    return Factorization(f, std::move(vectors));
  }
  Vector v = first_nonsingular_vector(*f.space());
  Factorization rest = minimal_factorization(reflection(f.space(), v) * f);
  vectors.push_back(v);
  for (const auto& x : rest.vectors()) vectors.push_back(x);
  return Factorization(f, std::move(vectors));
}

}  // namespace wallfact
