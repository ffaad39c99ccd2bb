#pragma once

// Helpers for a (not necessarily symmetric) bilinear form chi on F^m given by
// its Gram matrix X, chi(x, y) = x^T X y. Subspaces here live in coordinate
// space F^m.

#include "wallfact/linalg.hpp"

namespace wallfact {

Scalar form_value(const Matrix& chi, const Vector& x, const Vector& y);

/// Gram matrix of chi on the given rows: R X R^T.
Matrix restrict_form(const Matrix& chi, const Matrix& rows);

/// U^> = {y : chi(u, y) = 0 for all u in U}.
Subspace right_complement(const Matrix& chi, const Subspace& u);
/// U^< = {y : chi(y, u) = 0 for all u in U}.
Subspace left_complement(const Matrix& chi, const Subspace& u);

bool is_degenerate(const Matrix& chi);
/// chi(x, x) = 0 for all x; with char != 2 this is diag = 0 and X = -X^T.
bool is_alternating(const Matrix& chi);

}  // namespace wallfact
