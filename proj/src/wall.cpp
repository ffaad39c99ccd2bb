#include "wallfact/wall.hpp"

#include "wallfact/bilinear.hpp"

namespace wallfact {

namespace {

Matrix id_minus(const Isometry& f) { return Matrix::identity(f.field(), f.dim()) - f.matrix(); }

}  // namespace

Subspace fixed_space(const Isometry& f) { return kernel(id_minus(f)); }

Subspace moved_space(const Isometry& f) { return image(id_minus(f)); }

Matrix WallData::restricted(const Subspace& u) const {
  Matrix c = mov.coordinates_of(u);
  return restrict_form(chi, c);
}

Subspace WallData::to_coordinates(const Subspace& u) const { return Subspace::row_span(mov.coordinates_of(u)); }

Subspace WallData::from_coordinates(const Subspace& c) const { return embed(c, mov.basis()); }

WallData wall_form(const Isometry& f) {
  const Matrix a = id_minus(f);
  Subspace mov = image(a);
  const std::size_t m = mov.dim();
  Matrix preimages(f.field(), m, f.dim());
  for (std::size_t i = 0; i < m; ++i) {
    auto w = solve(a, mov.basis().row(i));
    if (!w) throw Error(ErrorCode::InternalError, "moved-space vector without a preimage");
    preimages.set_row(i, *w);
  }
  Matrix chi = preimages * f.space()->polar() * mov.basis().transpose();
  return {std::move(mov), std::move(chi)};
}

Isometry isometry_from_wall(const SpacePtr& space, const Subspace& w, const Matrix& chi) {
  if (w.ambient_dim() != space->dim()) throw Error(ErrorCode::DimensionMismatch, "subspace of another space");
  const std::size_t m = w.dim();
  if (chi.rows() != m || chi.cols() != m)
    throw Error(ErrorCode::DimensionMismatch, "chi must be dim(W) x dim(W)");
  if (m == 0) return Isometry::identity(space);
  if (chi.field() != space->field()) throw Error(ErrorCode::FieldMismatch, "chi over another field");
  if (det(chi).is_zero()) throw Error(ErrorCode::DegenerateChi, "chi is degenerate");
  const Matrix& ub = w.basis();
  Matrix sym = chi + chi.transpose();
  if (sym != space->beta_gram(ub)) {
    throw Error(ErrorCode::ChiQMismatch, "chi + chi^T differs from the polar form on W");
  }
  Matrix qgram = space->form_gram(ub);
  for (std::size_t i = 0; i < m; ++i)
    if (chi(i, i) != qgram(i, i)) throw Error(ErrorCode::ChiQMismatch, "chi(u, u) differs from Q(u)");

  // F = I - U^T X^{-T} U B
  Matrix correction = ub.transpose() * inverse(chi.transpose()) * ub * space->polar();
  return Isometry(space, Matrix::identity(space->field(), space->dim()) - correction);
}

Subspace chi_right_complement(const WallData& wd, const Subspace& u) {
  return wd.from_coordinates(right_complement(wd.chi, wd.to_coordinates(u)));
}

Subspace chi_left_complement(const WallData& wd, const Subspace& u) {
  return wd.from_coordinates(left_complement(wd.chi, wd.to_coordinates(u)));
}

SquareClass spinor_norm(const Isometry& f) {
  WallData wd = wall_form(f);
  if (wd.dim() == 0) return square_class(f.field().one());
  return square_class(det(wd.chi));
}

WallPropertiesReport check_wall_properties(const Isometry& f, const Isometry& g) {
  WallPropertiesReport r;
  const WallData wd = wall_form(f);
  const auto& space = *f.space();
  const std::size_t m = wd.dim();

  r.symmetrization = wd.chi + wd.chi.transpose() == space.beta_gram(wd.basis());

  r.twisted_antisymmetry = true;
  for (std::size_t i = 0; i < m && r.twisted_antisymmetry; ++i) {
    Vector fu = wd.mov.coordinates(f.apply(wd.basis().row(i)));
    for (std::size_t j = 0; j < m; ++j) {
      if (form_value(wd.chi, fu, unit_vector(f.field(), m, j)) != -wd.chi(j, i)) {
        r.twisted_antisymmetry = false;
        break;
      }
    }
  }

  const WallData inv = wall_form(f.inverse());
  r.inverse_transposes = inv.mov == wd.mov && inv.chi == wd.chi.transpose();

  const Isometry h = g * f * g.inverse();
  const WallData hd = wall_form(h);
  Matrix moved_basis = (g.matrix() * wd.basis().transpose()).transpose();
  Subspace g_mov = Subspace::row_span(moved_basis);
  if (g_mov == hd.mov) {
    Matrix c(f.field(), m, m);
    for (std::size_t i = 0; i < m; ++i) c.set_row(i, hd.mov.coordinates(moved_basis.row(i)));
    r.conjugation = restrict_form(hd.chi, c) == wd.chi;
  }

  r.symmetric_iff_involution = wd.chi.is_symmetric() == f.is_involution();
  return r;
}

}  // namespace wallfact
