#include "wallfact/quadspace.hpp"

#include "wallfact/isometry.hpp"

namespace wallfact {

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PosDef: return "positive_definite";
    case Definiteness::PosSemi: return "positive_semidefinite";
    case Definiteness::NegDef: return "negative_definite";
    case Definiteness::NegSemi: return "negative_semidefinite";
    case Definiteness::Indefinite: return "indefinite";
  }
  return "unknown";
}

Diagonalization diagonalize_symmetric(const Matrix& g) {
  if (!g.is_square()) throw Error(ErrorCode::NonSquare, "diagonalize: non-square matrix");
  const std::size_t n = g.rows();
  const Field f = g.field();
  Matrix a = g;
  Matrix p = Matrix::identity(f, n);
  // Congruence by an elementary row operation E: a <- E a E^T, p <- E p.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Scalar& c) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += c * a(src, j);
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += c * a(i, src);
    for (std::size_t j = 0; j < n; ++j) p(dst, j) += c * p(src, j);
  };
  auto swap_index = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(i, j), a(k, j));
    for (std::size_t j = 0; j < n; ++j) std::swap(a(j, i), a(j, k));
    for (std::size_t j = 0; j < n; ++j) std::swap(p(i, j), p(k, j));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv).is_zero()) ++piv;
    if (piv == n) {
      // Zero diagonal on the remaining block; an off-diagonal entry a_ij
      // makes e_i + e_j non-isotropic (value 2 a_ij, char != 2).
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (!a(i, j).is_zero()) {
            add_multiple(i, j, f.one());
            piv = i;
            found = true;
          }
      if (!found) break;
    }
    swap_index(piv, k);
    Scalar inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      add_multiple(i, k, -(a(i, k) * inv));
    }
  }
  Vector diag;
  diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) diag.push_back(a(i, i));
  return {std::move(p), std::move(diag)};
}

QuadraticSpace::QuadraticSpace(const Matrix& form) {
  if (!form.is_square()) throw Error(ErrorCode::NonSquare, "quadratic form matrix must be square");
  if (form.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "quadratic space of dimension 0");
  const Field f = form.field();
  Scalar half = f.from_int(2).inverse();
  form_ = (form + form.transpose()) * half;
  polar_ = form_ * f.from_int(2);
  if (det(polar_).is_zero()) throw Error(ErrorCode::DegenerateForm, "polar form is degenerate");
}

QuadraticSpace QuadraticSpace::diagonal(const Field& f, const std::vector<std::int64_t>& entries) {
  Vector d;
  for (auto e : entries) d.push_back(f.from_int(e));
  return QuadraticSpace(Matrix::diagonal(d));
}

Scalar QuadraticSpace::q(const Vector& v) const { return dot(v, form_ * v); }

Scalar QuadraticSpace::beta(const Vector& u, const Vector& v) const { return dot(u, polar_ * v); }

Matrix QuadraticSpace::beta_gram(const Matrix& rows) const { return rows * polar_ * rows.transpose(); }

Matrix QuadraticSpace::form_gram(const Matrix& rows) const { return rows * form_ * rows.transpose(); }

Subspace QuadraticSpace::orthogonal_complement(const Subspace& w) const {
  if (w.ambient_dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "subspace of another space");
  return kernel(w.basis() * polar_);
}

bool QuadraticSpace::is_totally_singular(const Subspace& w) const {
  if (w.ambient_dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "subspace of another space");
  return form_gram(w.basis()).is_zero();
}

Signature QuadraticSpace::signature() const { return signature(Subspace::full(field(), dim())); }

Signature QuadraticSpace::signature(const Subspace& w) const {
  if (!field().is_ordered()) throw Error(ErrorCode::UnorderedField, "signature needs an ordered field");
  if (w.ambient_dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "subspace of another space");
  Signature s;
  if (w.dim() == 0) return s;
  for (const auto& d : diagonalize_symmetric(form_gram(w.basis())).diagonal) {
    int sg = d.sign();
    if (sg > 0) ++s.positives;
    else if (sg < 0) ++s.negatives;
    else ++s.zeros;
  }
  return s;
}

Definiteness classify_signature(const Signature& s) {
  if (s.negatives == 0) return s.zeros == 0 ? Definiteness::PosDef : Definiteness::PosSemi;
  if (s.positives == 0) return s.zeros == 0 ? Definiteness::NegDef : Definiteness::NegSemi;
  return Definiteness::Indefinite;
}

Definiteness QuadraticSpace::definiteness(const Subspace& w) const { return classify_signature(signature(w)); }

bool QuadraticSpace::is_lorentzian() const {
  if (!field().is_rational() || dim() < 2) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      long expect = i != j ? 0 : (i + 1 == dim() ? -1 : 1);
      if (form_(i, j) != field().from_int(expect)) return false;
    }
  return true;
}

SpacePtr make_space(const Matrix& form) { return std::make_shared<const QuadraticSpace>(form); }

SpacePtr make_diagonal_space(const Field& f, const std::vector<std::int64_t>& entries) {
  return std::make_shared<const QuadraticSpace>(QuadraticSpace::diagonal(f, entries));
}

SpacePtr make_lorentz_space(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "Lorentz space needs n >= 1");
  std::vector<std::int64_t> d(n, 1);
  d.push_back(-1);
  return make_diagonal_space(Field::rational(), d);
}

std::optional<Vector> find_positive_vector(const QuadraticSpace& space, const Subspace& w) {
  if (!space.field().is_ordered()) throw Error(ErrorCode::UnorderedField, "positivity needs an ordered field");
  const auto basis = w.vectors();
  for (const auto& b : basis)
    if (space.q(b).sign() > 0) return b;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Vector s = basis[i] + basis[j];
      if (space.q(s).sign() > 0) return s;
      Vector d = basis[i] - basis[j];
      if (space.q(d).sign() > 0) return d;
    }
  if (w.dim() == 0) return std::nullopt;
  Diagonalization dg = diagonalize_symmetric(space.form_gram(w.basis()));
  for (std::size_t i = 0; i < dg.diagonal.size(); ++i)
    if (dg.diagonal[i].sign() > 0) return w.from_coordinates(dg.basis.row(i));
  return std::nullopt;
}

// ---------------------------------------------------------------- Isometry

Isometry::Isometry(SpacePtr space, Matrix mat) : space_(std::move(space)), mat_(std::move(mat)) {
  if (!space_) throw Error(ErrorCode::InternalError, "isometry without a space");
  if (!mat_.is_square() || mat_.rows() != space_->dim())
    throw Error(ErrorCode::DimensionMismatch, "isometry matrix shape does not match the space");
  if (mat_.field() != space_->field()) throw Error(ErrorCode::FieldMismatch, "isometry over another field");
  if (mat_.transpose() * space_->polar() * mat_ != space_->polar())
    throw Error(ErrorCode::NotIsometry, "matrix does not preserve the quadratic form");
}

Isometry Isometry::identity(const SpacePtr& space) {
  return Isometry(space, Matrix::identity(space->field(), space->dim()), TrustedTag{});
}

Isometry Isometry::trusted(SpacePtr space, Matrix mat) { return Isometry(std::move(space), std::move(mat), TrustedTag{}); }

Isometry Isometry::inverse() const {
  // F^-1 = B^-1 F^T B for F^T B F = B.
  return Isometry(space_, wallfact::inverse(mat_), TrustedTag{});
}

bool Isometry::is_involution() const { return (mat_ * mat_).is_identity(); }

Isometry operator*(const Isometry& f, const Isometry& g) {
  if (f.space_ != g.space_ && f.space_->form() != g.space_->form())
    throw Error(ErrorCode::FieldMismatch, "composition of isometries of different spaces");
  return Isometry(f.space_, f.mat_ * g.mat_, Isometry::TrustedTag{});
}

Isometry reflection(const SpacePtr& space, const Vector& v) {
  if (v.size() != space->dim()) throw Error(ErrorCode::DimensionMismatch, "reflection vector length");
  Scalar qv = space->q(v);
  if (qv.is_zero()) throw Error(ErrorCode::SingularVector, "cannot reflect in a singular vector");
  // F = I - v (B v)^T / Q(v)
  const Field f = space->field();
  Vector bv = space->polar() * v;
  Scalar inv = qv.inverse();
  Matrix m = Matrix::identity(f, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Scalar vi = v[i] * inv;
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) -= vi * bv[j];
  }
  return Isometry::trusted(space, std::move(m));
}

Isometry reflection_product(const SpacePtr& space, const std::vector<Vector>& vectors) {
  Isometry r = Isometry::identity(space);
  for (const auto& v : vectors) r = r * reflection(space, v);
  return r;
}

}  // namespace wallfact
