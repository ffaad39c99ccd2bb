#include "wallfact/bilinear.hpp"

namespace wallfact {

Scalar form_value(const Matrix& chi, const Vector& x, const Vector& y) { return dot(x, chi * y); }

Matrix restrict_form(const Matrix& chi, const Matrix& rows) { return rows * chi * rows.transpose(); }

Subspace right_complement(const Matrix& chi, const Subspace& u) {
  if (u.ambient_dim() != chi.rows()) throw Error(ErrorCode::DimensionMismatch, "complement: dimension mismatch");
  return kernel(u.basis() * chi);
}

Subspace left_complement(const Matrix& chi, const Subspace& u) {
  if (u.ambient_dim() != chi.rows()) throw Error(ErrorCode::DimensionMismatch, "complement: dimension mismatch");
  return kernel(u.basis() * chi.transpose());
}

bool is_degenerate(const Matrix& chi) { return chi.rows() > 0 && det(chi).is_zero(); }

bool is_alternating(const Matrix& chi) {
  for (std::size_t i = 0; i < chi.rows(); ++i) {
    if (!chi(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < chi.cols(); ++j)
      if (!(chi(i, j) + chi(j, i)).is_zero()) return false;
  }
  return true;
}

}  // namespace wallfact
