#include "wallfact/linalg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace wallfact {

// ---------------------------------------------------------------- vectors

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = f.one();
  return v;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product of unequal lengths");
  if (a.empty()) return Scalar();
  Scalar s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum of unequal lengths");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference of unequal lengths");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Vector projective_normalize(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return x.inverse() * v;
  }
  return v;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vector>& rows, std::size_t cols) {
  std::size_t c = rows.empty() ? cols : rows[0].size();
  Matrix m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j].field() != f) throw Error(ErrorCode::FieldMismatch, "matrix entry from another field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  if (d.empty()) throw Error(ErrorCode::DimensionMismatch, "empty diagonal");
  Matrix m(d[0].field(), d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "matrix product across fields");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::operator*(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  Vector r = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) r[i] += a * v[j];
    }
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
  Matrix r(field_, rows_ + o.rows_, cols_);
  std::copy(data_.begin(), data_.end(), r.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), r.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

std::string Matrix::key() const {
  std::string k = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (i) k += ',';
    k += data_[i].to_string();
  }
  return k;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------- elimination

Echelon rref(const Matrix& a) {
  Matrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(a.field(), r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Scalar det(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix m = a;
  Scalar d = a.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return a.field().zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return d;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = a.field().one();
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  }
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw Error(ErrorCode::DimensionMismatch, "solve: A.rows != len(b)");
  const std::size_t n = a.cols();
  Matrix aug(a.field(), a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vector x = zero_vector(a.field(), n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, n);
  return x;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(const Field& f, std::size_t n) { return row_span(Matrix(f, 0, n)); }
Subspace Subspace::full(const Field& f, std::size_t n) { return row_span(Matrix::identity(f, n)); }
Subspace Subspace::row_span(const Matrix& rows) { return Subspace(rref(rows)); }

Subspace Subspace::span(const Field& f, std::size_t n, const std::vector<Vector>& vectors) {
  return row_span(Matrix::from_rows(f, vectors, n));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "vector length != ambient dimension");
  // Subtract the pivot combination; v is inside iff nothing remains.
  Vector rest = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    Scalar c = rest[pivots_[r]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < rest.size(); ++j)
      if (!basis_(r, j).is_zero()) rest[j] -= c * basis_(r, j);
  }
  return wallfact::is_zero(rest);
}

bool Subspace::contains(const Subspace& w) const {
  for (std::size_t i = 0; i < w.dim(); ++i)
    if (!contains(w.basis_.row(i))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(ErrorCode::NotSubspace, "vector is not in the subspace");
  Vector c;
  c.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) c.push_back(v[pivots_[r]]);
  return c;
}

Vector Subspace::from_coordinates(const Vector& c) const {
  if (c.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate vector length != dim");
  Vector v = zero_vector(field(), ambient_dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    if (c[r].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += c[r] * basis_(r, j);
  }
  return v;
}

Matrix Subspace::coordinates_of(const Subspace& w) const {
  Matrix m(field(), w.dim(), dim());
  for (std::size_t i = 0; i < w.dim(); ++i) m.set_row(i, coordinates(w.basis().row(i)));
  return m;
}

Subspace kernel(const Matrix& a) {
  Echelon e = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(a.field(), n, free);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(a.field(), n, basis);
}

Subspace image(const Matrix& a) { return Subspace::row_span(a.transpose()); }

Subspace annihilator(const Subspace& u) { return kernel(u.basis()); }

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "subspaces of different spaces");
  return Subspace::row_span(u.basis().vstack(w.basis()));
}

Subspace subspace_intersection(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "subspaces of different spaces");
  return kernel(annihilator(u).basis().vstack(annihilator(w).basis()));
}

Subspace embed(const Subspace& coords, const Matrix& basis) {
  if (coords.ambient_dim() != basis.rows()) throw Error(ErrorCode::DimensionMismatch, "embed: coordinate length mismatch");
  return Subspace::row_span(coords.basis() * basis);
}

// ---------------------------------------------------------------- enumeration

std::uint64_t count_subspaces(std::size_t m, std::int64_t p) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return std::uint64_t{0};
    return a > kMax / b ? kMax : a * b;
  };
  // binom[k] = Gaussian binomial [n choose k]_p, built row by row.
  std::vector<std::uint64_t> binom(m + 1, 0);
  binom[0] = 1;
  for (std::size_t n = 1; n <= m; ++n) {
    for (std::size_t k = n; k >= 1; --k) {
      std::uint64_t pk = 1;
      for (std::size_t t = 0; t < k; ++t) pk = sat_mul(pk, static_cast<std::uint64_t>(p));
      binom[k] = sat_add(binom[k - 1], sat_mul(pk, binom[k]));
    }
  }
  std::uint64_t total = 0;
  for (auto b : binom) total = sat_add(total, b);
  return total;
}

SubspaceEnumerator::SubspaceEnumerator(Subspace of_space, std::uint64_t cap)
    : of_(std::move(of_space)), m_(of_.dim()), p_(of_.field().characteristic()), total_(0) {
  if (!of_.field().is_prime()) {
    throw Error(ErrorCode::RequiresPrimeField, "subspace enumeration needs a finite field");
  }
  total_ = count_subspaces(m_, p_);
  if (total_ > cap) {
    throw Error(ErrorCode::TooLarge, "subspace count " + std::to_string(total_) +
                                         " exceeds cap " + std::to_string(cap));
  }
}

void SubspaceEnumerator::reset_pattern() {
  free_slots_.clear();
  for (std::size_t r = 0; r < k_; ++r)
    for (std::size_t c = pivots_[r] + 1; c < m_; ++c)
      if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end()) free_slots_.emplace_back(r, c);
  free_values_.assign(free_slots_.size(), 0);
}

bool SubspaceEnumerator::advance_free() {
  for (std::size_t i = free_values_.size(); i-- > 0;) {
    if (++free_values_[i] < p_) return true;
    free_values_[i] = 0;
  }
  return false;
}

bool SubspaceEnumerator::advance_pivots() {
  // Next k-combination of {0..m-1} in lexicographic order.
  for (std::size_t i = k_; i-- > 0;) {
    if (pivots_[i] < m_ - k_ + i) {
      ++pivots_[i];
      for (std::size_t j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Subspace SubspaceEnumerator::current() const {
  const Field f = of_.field();
  Matrix coords(f, k_, m_);
  for (std::size_t r = 0; r < k_; ++r) coords(r, pivots_[r]) = f.one();
  for (std::size_t i = 0; i < free_slots_.size(); ++i)
    coords(free_slots_[i].first, free_slots_[i].second) = f.from_int(free_values_[i]);
  if (k_ == 0) return Subspace::zero(f, of_.ambient_dim());
  return Subspace::row_span(coords * of_.basis());
}

std::optional<Subspace> SubspaceEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    k_ = 0;
    pivots_.clear();
    reset_pattern();
    return current();
  }
  if (advance_free()) return current();
  if (advance_pivots()) {
    reset_pattern();
    return current();
  }
  if (++k_ > m_) {
    done_ = true;
    return std::nullopt;
  }
  pivots_.resize(k_);
  for (std::size_t i = 0; i < k_; ++i) pivots_[i] = i;
  reset_pattern();
  return current();
}

std::vector<Subspace> enumerate_subspaces(const Subspace& of_space, std::uint64_t cap) {
  SubspaceEnumerator it(of_space, cap);
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(it.total()));
  while (auto s = it.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace wallfact
