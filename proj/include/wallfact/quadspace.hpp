#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "wallfact/linalg.hpp"

namespace wallfact {

struct Signature {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t zeros = 0;  // radical dimension of the restricted form

  friend bool operator==(const Signature&, const Signature&) = default;
};

enum class Definiteness { PosDef, PosSemi, NegDef, NegSemi, Indefinite };

std::string to_string(Definiteness d);

/// Result of symmetric (Lagrange) diagonalization: rows of `basis` are a
/// basis of the domain in which the form is diag(`diagonal`).
struct Diagonalization {
  Matrix basis;
  Vector diagonal;
};

/// Congruence-diagonalize a symmetric matrix G: basis * G * basis^T is
/// diagonal. Works over any field of characteristic != 2.
Diagonalization diagonalize_symmetric(const Matrix& g);

/// A non-degenerate quadratic space (F^n, Q) with Q(v) = v^T S v, S symmetric,
/// and polar form beta(u, v) = u^T B v with B = 2S.
class QuadraticSpace {
 public:
  /// Accepts any square matrix M and stores S = (M + M^T)/2, which defines
  /// the same Q. Throws NonSquare, or DegenerateForm if det(B) = 0.
  explicit QuadraticSpace(const Matrix& form);

  static QuadraticSpace diagonal(const Field& f, const std::vector<std::int64_t>& entries);

  const Field& field() const { return form_.field(); }
  std::size_t dim() const { return form_.rows(); }
  const Matrix& form() const { return form_; }
  const Matrix& polar() const { return polar_; }

  Scalar q(const Vector& v) const;
  Scalar beta(const Vector& u, const Vector& v) const;
  /// Gram matrix of beta on the given rows.
  Matrix beta_gram(const Matrix& rows) const;
  /// Gram matrix of S (so the diagonal holds Q) on the given rows.
  Matrix form_gram(const Matrix& rows) const;

  Subspace orthogonal_complement(const Subspace& w) const;
  bool is_totally_singular(const Subspace& w) const;

  /// Ordered fields only; throws UnorderedField.
  Signature signature() const;
  Signature signature(const Subspace& w) const;
  Definiteness definiteness(const Subspace& w) const;

  bool is_lorentzian() const;
  std::string key() const { return form_.key(); }

 private:
  Matrix form_;
  Matrix polar_;
};

using SpacePtr = std::shared_ptr<const QuadraticSpace>;

SpacePtr make_space(const Matrix& form);
SpacePtr make_diagonal_space(const Field& f, const std::vector<std::int64_t>& entries);

/// The Lorentz form x_1^2 + ... + x_n^2 - x_{n+1}^2 over Q.
SpacePtr make_lorentz_space(std::size_t n);

Definiteness classify_signature(const Signature& s);

/// A vector with Q(v) > 0 in the subspace, if any; ordered fields only.
std::optional<Vector> find_positive_vector(const QuadraticSpace& space, const Subspace& w);

}  // namespace wallfact
