#include "wallfact/field.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace wallfact {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t powmod(std::int64_t base, std::int64_t e, std::int64_t p) {
  std::int64_t result = 1;
  base = mod(base, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  // p is prime, so Fermat.
  return powmod(a, p - 2, p);
}

std::int64_t reduce_mpz(const mpz_class& z, std::int64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

void collect_prime_factors(const mpz_class& n, std::vector<mpz_class>& out);

mpz_class pollard_rho(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto step = [&](mpz_class& v) {
      v = (v * v + c) % n;
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void collect_prime_factors(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.push_back(n);
    return;
  }
  mpz_class d = pollard_rho(n);
  collect_prime_factors(d, out);
  collect_prime_factors(n / d, out);
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::int64_t p) {
  if (p < 3 || p >= (std::int64_t{1} << 31)) {
    throw Error(ErrorCode::InvalidField,
                "prime field characteristic must be an odd prime below 2^31, got " +
                    std::to_string(p));
  }
  mpz_class z(static_cast<long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (p_ == 0) return Scalar(mpq_class(static_cast<long>(n)));
  return Scalar(p_, mod(n, p_));
}

Scalar Field::from_mpq(const mpq_class& q) const {
  if (p_ == 0) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(c));
  }
  std::int64_t den = reduce_mpz(q.get_den(), p_);
  if (den == 0) {
    throw Error(ErrorCode::ParseError,
                "denominator of " + q.get_str() + " vanishes modulo " + std::to_string(p_));
  }
  std::int64_t num = reduce_mpz(q.get_num(), p_);
  return Scalar(p_, mulmod(num, invmod(den, p_), p_));
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  std::size_t slash = s.find('/');
  mpq_class q;
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorCode::ParseError, "malformed scalar '" + s + "'");
    q = mpq_class(mpz_class(strip_plus(s)));
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
      throw Error(ErrorCode::ParseError, "malformed scalar '" + s + "'");
    mpz_class d(strip_plus(den));
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    q = mpq_class(mpz_class(strip_plus(num)), d);
    q.canonicalize();
  }
  return from_mpq(q);
}

std::int64_t Field::least_nonresidue() const {
  if (p_ == 0) throw Error(ErrorCode::RequiresPrimeField, "least non-residue needs F_p");
  for (std::int64_t a = 2; a < p_; ++a) {
    if (powmod(a, (p_ - 1) / 2, p_) == p_ - 1) return a;
  }
  throw Error(ErrorCode::InternalError, "no quadratic non-residue found");
}

std::string Field::to_string() const {
  return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

// ---------------------------------------------------------------- Scalar

Field Scalar::field() const { return Field(p_); }

bool Scalar::is_zero() const {
  if (p_ == 0) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::int64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (p_ == 0) return std::get<mpq_class>(value_) == 1;
  return std::get<std::int64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw Error(ErrorCode::FieldMismatch, "rational value requested from F_p element");
  return std::get<mpq_class>(value_);
}

std::int64_t Scalar::residue() const {
  if (p_ == 0) throw Error(ErrorCode::FieldMismatch, "residue requested from a rational");
  return std::get<std::int64_t>(value_);
}

int Scalar::sign() const {
  if (p_ != 0) throw Error(ErrorCode::UnorderedField, "F_" + std::to_string(p_) + " is not ordered");
  return sgn(std::get<mpq_class>(value_));
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  if (p_ == 0) {
    mpq_class q = 1 / std::get<mpq_class>(value_);
    return Scalar(std::move(q));
  }
  return Scalar(p_, invmod(std::get<std::int64_t>(value_), p_));
}

std::string Scalar::to_string() const {
  if (p_ == 0) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::int64_t>(value_));
}

void Scalar::require_same_field(const Scalar& o) const {
  if (p_ != o.p_) {
    throw Error(ErrorCode::FieldMismatch, "arithmetic between elements of different fields");
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (p_ == 0) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<std::int64_t>(value_);
    r += std::get<std::int64_t>(o.value_);
    if (r >= p_) r -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (p_ == 0) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<std::int64_t>(value_);
    r -= std::get<std::int64_t>(o.value_);
    if (r < 0) r += p_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (p_ == 0) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<std::int64_t>(value_);
    r = mulmod(r, std::get<std::int64_t>(o.value_), p_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  if (p_ == 0) return Scalar(mpq_class(-std::get<mpq_class>(value_)));
  std::int64_t r = std::get<std::int64_t>(value_);
  return Scalar(p_, r == 0 ? 0 : p_ - r);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  if (a.p_ == 0) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::get<std::int64_t>(a.value_) == std::get<std::int64_t>(b.value_);
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (a.p_ != 0) throw Error(ErrorCode::UnorderedField, "F_p is not ordered");
  return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

// ---------------------------------------------------------------- square classes

mpz_class squarefree_part(const mpz_class& n) {
  if (n == 0) throw Error(ErrorCode::ZeroElement, "square-free part of zero");
  mpz_class rest = abs(n);
  mpz_class result = sgn(n) < 0 ? -1 : 1;
  constexpr unsigned long kTrialBound = 1000000;
  unsigned long d = 2;
  for (; d <= kTrialBound; d += (d == 2 ? 1 : 2)) {
    if (mpz_class(d) * d > rest) break;
    int exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++exponent;
    }
    if (exponent % 2 == 1) result *= d;
  }
  if (rest == 1) return result;
  if (mpz_class(d) * d > rest) return result * rest;  // rest is prime

  std::vector<mpz_class> primes;
  collect_prime_factors(rest, primes);
  std::map<mpz_class, int> counts;
  for (const auto& q : primes) ++counts[q];
  for (const auto& [q, c] : counts)
    if (c % 2 == 1) result *= q;
  return result;
}

SquareClass square_class(const Scalar& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "square class of zero");
  Field f = a.field();
  if (f.is_rational()) {
    const mpq_class& q = a.rational();
    return SquareClass(f, squarefree_part(q.get_num() * q.get_den()));
  }
  std::int64_t p = f.characteristic();
  bool square = powmod(a.residue(), (p - 1) / 2, p) == 1;
  return SquareClass(f, mpz_class(static_cast<long>(square ? 1 : f.least_nonresidue())));
}

bool SquareClass::is_positive() const {
  if (!field_.is_ordered()) throw Error(ErrorCode::UnorderedField, "F_p is not ordered");
  return sgn(rep_) > 0;
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "square classes of different fields");
  if (a.field_.is_rational()) {
    // Both representatives are square-free, so dividing out gcd^2 suffices.
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.rep_.get_mpz_t(), b.rep_.get_mpz_t());
    return SquareClass(a.field_, (a.rep_ / g) * (b.rep_ / g));
  }
  bool same = a.rep_ == b.rep_;
  return SquareClass(a.field_, same ? mpz_class(1) : mpz_class(static_cast<long>(a.field_.least_nonresidue())));
}

bool is_positive(const Scalar& a) { return a.sign() > 0; }

Scalar rational_square_in_interval(const Scalar& a, const Scalar& b) {
  if (!a.field().is_rational() || !b.field().is_rational()) {
    throw Error(ErrorCode::UnorderedField, "square search needs an ordered field");
  }
  const mpq_class& lo_in = a.rational();
  const mpq_class& hi = b.rational();
  if (lo_in >= hi || sgn(hi) <= 0) {
    throw Error(ErrorCode::EmptyInterval,
                "no positive square in (" + lo_in.get_str() + ", " + hi.get_str() + ")");
  }
  mpq_class lo = sgn(lo_in) > 0 ? lo_in : mpq_class(0);
  for (mpz_class n = 1;; n *= 2) {
    mpz_class n2 = n * n;
    mpz_class floor_lo;
    mpz_fdiv_q(floor_lo.get_mpz_t(), mpz_class(lo.get_num() * n2).get_mpz_t(), lo.get_den().get_mpz_t());
    mpz_class k = sqrt(floor_lo) + 1;
    // k^2 < hi * n^2  <=>  k^2 * den(hi) < num(hi) * n^2
    if (k * k * hi.get_den() < hi.get_num() * n2) {
      return Field::rational().from_mpq(mpq_class(k, n));
    }
  }
}

}  // namespace wallfact
