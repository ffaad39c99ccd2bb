#pragma once

// Exact scalars over Q (GMP rationals) and F_p for odd primes p.
//
// A Scalar carries its field with it, so mixing elements of different fields
// is detected at the point of the arithmetic rather than silently producing
// garbage. Prime-field elements are plain 64-bit residues; p is restricted to
// p < 2^31 so that products never overflow.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "wallfact/error.hpp"

namespace wallfact {

class Scalar;
class SquareClass;

enum class FieldKind { Rational, Prime };

class Field {
 public:
  static Field rational() { return Field(0); }
  /// Throws InvalidField unless p is an odd prime below 2^31.
  static Field prime(std::int64_t p);

  FieldKind kind() const { return p_ == 0 ? FieldKind::Rational : FieldKind::Prime; }
  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  bool is_ordered() const { return p_ == 0; }
  /// 0 for Q.
  std::int64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_mpq(const mpq_class& q) const;
  /// "n", "-n", "p/q" (any sign placement on the numerator); over F_p the
  /// rational value is reduced modulo p.
  Scalar parse(std::string_view text) const;

  /// Least positive quadratic non-residue; F_p only.
  std::int64_t least_nonresidue() const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

class Scalar {
 public:
  /// Rational zero.
  Scalar() : p_(0), value_(mpq_class(0)) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; throws FieldMismatch for prime-field elements.
  const mpq_class& rational() const;
  /// Residue in [0, p); throws FieldMismatch for rationals.
  std::int64_t residue() const;

  /// Sign in the field order; throws UnorderedField over F_p.
  int sign() const;
  bool is_positive() const { return sign() > 0; }
  Scalar abs() const;

  /// Throws ZeroElement for 0.
  Scalar inverse() const;

  /// "p/q", "n" over Q; the residue over F_p.
  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Order comparisons are only defined over Q.
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  friend class Field;
  Scalar(std::int64_t p, std::int64_t residue) : p_(p), value_(residue) {}
  explicit Scalar(mpq_class q) : p_(0), value_(std::move(q)) {}

  void require_same_field(const Scalar& o) const;

  std::int64_t p_;
  std::variant<mpq_class, std::int64_t> value_;
};

/// Class of a nonzero scalar in F^x / (F^x)^2.
///
/// Over Q the representative is the square-free integer (sign included) in
/// the class. Over F_p it is 1 or the least non-residue n0.
class SquareClass {
 public:
  const Field& field() const { return field_; }
  const mpz_class& representative() const { return rep_; }
  bool is_trivial() const { return rep_ == 1; }
  /// Sign of the representative; Q only.
  bool is_positive() const;
  std::string to_string() const { return rep_.get_str(); }

  friend SquareClass operator*(const SquareClass& a, const SquareClass& b);
  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.field_ == b.field_ && a.rep_ == b.rep_;
  }
  friend bool operator!=(const SquareClass& a, const SquareClass& b) { return !(a == b); }

 private:
  friend SquareClass square_class(const Scalar& a);
  SquareClass(Field f, mpz_class rep) : field_(f), rep_(std::move(rep)) {}

  Field field_;
  mpz_class rep_;
};

/// Throws ZeroElement for a = 0.
SquareClass square_class(const Scalar& a);

/// True iff a > 0; throws UnorderedField over F_p.
bool is_positive(const Scalar& a);

/// A positive q with a < q^2 < b, found by the doubling search
/// N = 1, 2, 4, ...: k = isqrt(floor(a N^2)) + 1, accept k/N once k^2 < b N^2.
///
/// Requires b > a and b > 0. For a <= 0 < b the search runs with a clamped
/// to 0 and returns a small positive q. Throws EmptyInterval otherwise.
Scalar rational_square_in_interval(const Scalar& a, const Scalar& b);

/// Square-free part of a nonzero integer (sign kept). Trial division up to
/// 10^6, then Miller-Rabin and Pollard rho on the cofactor.
mpz_class squarefree_part(const mpz_class& n);

}  // namespace wallfact
