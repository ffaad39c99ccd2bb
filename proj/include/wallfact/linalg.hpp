#pragma once

// Exact dense linear algebra over a Field. Vectors are columns when acted on
// by a Matrix (F * v) and rows when stacked into a subspace basis.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wallfact/field.hpp"

namespace wallfact {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
Scalar dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
bool is_zero(const Vector& v);
/// Scale so that the first nonzero coordinate is 1 (the zero vector is
/// returned unchanged).
Vector projective_normalize(const Vector& v);

class Matrix {
 public:
  Matrix() : field_(Field::rational()) {}
  Matrix(const Field& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  /// Throws DimensionMismatch on ragged input. `cols` is used when `rows`
  /// is empty.
  static Matrix from_rows(const Field& f, const std::vector<Vector>& rows, std::size_t cols = 0);
  static Matrix diagonal(const Vector& d);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  std::vector<Vector> row_vectors() const;
  void set_row(std::size_t i, const Vector& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Scalar& c) const;
  Vector operator*(const Vector& v) const;
  /// Stack rows of `this` above rows of `o`.
  Matrix vstack(const Matrix& o) const;

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_identity() const;

  /// Canonical serialization; equal matrices over the same field give equal
  /// keys. Used for hashing group elements.
  std::string key() const;
  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                    // RREF with zero rows removed
  std::vector<std::size_t> pivots;   // pivot column per row
};

Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Throws NonSquare.
Scalar det(const Matrix& a);
/// Throws NonSquare or SingularMatrix.
Matrix inverse(const Matrix& a);
/// Some x with A x = b, or nullopt. Throws DimensionMismatch.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// A linear subspace of F^n stored by its RREF basis, so that equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const Field& f, std::size_t n);
  static Subspace full(const Field& f, std::size_t n);
  /// Row span of `rows`.
  static Subspace row_span(const Matrix& rows);
  static Subspace span(const Field& f, std::size_t n, const std::vector<Vector>& vectors);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  /// RREF basis rows (dim x ambient_dim).
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> vectors() const { return basis_.row_vectors(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& w) const;
  /// Coordinates of v in the RREF basis; throws NotSubspace if v is outside.
  Vector coordinates(const Vector& v) const;
  /// Ambient vector with the given coordinates.
  Vector from_coordinates(const Vector& c) const;
  /// Coordinate matrix (w.dim x dim) of a subspace w contained in this one.
  Matrix coordinates_of(const Subspace& w) const;

  std::string key() const { return basis_.key(); }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  explicit Subspace(Echelon e) : basis_(std::move(e.reduced)), pivots_(std::move(e.pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : A x = 0} in F^cols.
Subspace kernel(const Matrix& a);
/// Column space of A in F^rows.
Subspace image(const Matrix& a);
/// {x : <x, u> = 0 for all u in U} for the standard dot product.
Subspace annihilator(const Subspace& u);
Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersection(const Subspace& u, const Subspace& w);
/// Image of a subspace of F^m under the rows of `basis` (m x n), i.e. the
/// subspace of F^n with coordinates `coords` relative to `basis`.
Subspace embed(const Subspace& coords, const Matrix& basis);

constexpr std::uint64_t kDefaultEnumerationCap = 1000000;

/// Number of subspaces of F_p^m (sum of Gaussian binomials), saturating at
/// UINT64_MAX.
std::uint64_t count_subspaces(std::size_t m, std::int64_t p);

/// Streams every subspace of `of_space` exactly once, ordered by dimension,
/// then pivot-column set, then free entries (all lexicographic) of the RREF
/// coordinate pattern. Throws RequiresPrimeField over Q and TooLarge if the
/// total count exceeds `cap`.
class SubspaceEnumerator {
 public:
  explicit SubspaceEnumerator(Subspace of_space, std::uint64_t cap = kDefaultEnumerationCap);

  std::optional<Subspace> next();
  std::uint64_t total() const { return total_; }

 private:
  bool advance_free();
  bool advance_pivots();
  void reset_pattern();
  Subspace current() const;

  Subspace of_;
  std::size_t m_;
  std::int64_t p_;
  std::uint64_t total_;
  std::size_t k_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_slots_;
  std::vector<std::int64_t> free_values_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Subspace> enumerate_subspaces(const Subspace& of_space,
                                          std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace wallfact
