#include <doctest.h>

#include <set>

#include "common/helpers.hpp"

using namespace wallfact;
using testutil::q;

TEST_CASE("square classes over Q") {
  CHECK(square_class(q("18")).representative() == 2);
  CHECK(square_class(q("-1/4")).representative() == -1);
  CHECK(square_class(q("1")).is_trivial());
  CHECK(square_class(q("-12/7")).representative() == -21);
  CHECK_THROWS_AS(square_class(q("0")), Error);
}

TEST_CASE("square classes over F_5 agree with a Legendre-symbol table") {
  const Field f = Field::prime(5);
  CHECK(f.least_nonresidue() == 2);
  // Squares mod 5, computed by listing x^2.
  std::set<std::int64_t> squares;
  for (int x = 1; x < 5; ++x) squares.insert((x * x) % 5);
  for (int a = 1; a < 5; ++a) {
    auto rep = square_class(f.from_int(a)).representative();
    CHECK(rep == (squares.count(a) ? 1 : 2));
  }
  CHECK(square_class(f.from_int(4)).representative() == 1);
  CHECK(square_class(f.from_int(3)).representative() == 2);
}

TEST_CASE("square_class is a homomorphism with kernel the squares") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Scalar a = testutil::random_rational(rng, 50, 30);
    Scalar b = testutil::random_rational(rng, 50, 30);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(square_class(a * a * b) == square_class(b));
    CHECK(square_class(a * b) == square_class(a) * square_class(b));
  }
  for (std::int64_t p : {3, 5, 7, 11}) {
    const Field f = Field::prime(p);
    for (std::int64_t a = 1; a < p; ++a)
      for (std::int64_t b = 1; b < p; ++b) {
        Scalar x = f.from_int(a), y = f.from_int(b);
        CHECK(square_class(x * y) == square_class(x) * square_class(y));
        CHECK(square_class(x * x * y) == square_class(y));
      }
  }
}

TEST_CASE("squarefree part of large integers") {
  mpz_class big("1000000000039");  // prime beyond the trial-division bound
  CHECK(squarefree_part(big * big * 6) == 6);
  CHECK(squarefree_part(-big * 3 * 3) == -big);
  CHECK(squarefree_part(mpz_class(72)) == 2);
}

TEST_CASE("order on Q") {
  CHECK(is_positive(q("3/7")));
  CHECK_FALSE(is_positive(q("0")));
  CHECK_FALSE(is_positive(q("-2")));
  CHECK_THROWS_AS(is_positive(Field::prime(3).one()), Error);
  try {
    (void)Field::prime(5).one().sign();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnorderedField);
  }
}

TEST_CASE("rational_square_in_interval") {
  auto check = [](const Scalar& a, const Scalar& b) {
    Scalar r = rational_square_in_interval(a, b);
    CHECK(r.sign() > 0);
    CHECK(a < r * r);
    CHECK(r * r < b);
    return r;
  };
  CHECK(check(q("2"), q("3")) == q("3/2"));
  check(q("1/4"), q("1/2"));
  check(q("1000000"), q("1000000000001/1000000"));
  check(q("-5"), q("1/100"));
  CHECK_THROWS_AS(rational_square_in_interval(q("3"), q("2")), Error);
  CHECK_THROWS_AS(rational_square_in_interval(q("-3"), q("0")), Error);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Scalar a = testutil::random_rational(rng, 100, 50).abs();
    Scalar gap = testutil::random_rational(rng, 10, 1000).abs();
    if (gap.is_zero()) continue;
    check(a, a + gap);
  }
}

TEST_CASE("field axioms hold exhaustively over F_3 and F_5") {
  for (std::int64_t p : {3, 5}) {
    const Field f = Field::prime(p);
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b)
        for (std::int64_t c = 0; c < p; ++c) {
          Scalar x = f.from_int(a), y = f.from_int(b), z = f.from_int(c);
          CHECK((x + y) + z == x + (y + z));
          CHECK((x * y) * z == x * (y * z));
          CHECK(x * (y + z) == x * y + x * z);
        }
    for (std::int64_t a = 1; a < p; ++a) CHECK((f.from_int(a) * f.from_int(a).inverse()).is_one());
  }
}

TEST_CASE("field axioms on random rational triples") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    Scalar x = testutil::random_rational(rng, 40, 9), y = testutil::random_rational(rng, 40, 9),
           z = testutil::random_rational(rng, 40, 9);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK((x / x).is_one());
  }
}

TEST_CASE("prime fields reject characteristic 2 and composites") {
  CHECK_THROWS_AS(Field::prime(2), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK_NOTHROW(Field::prime(7));
  CHECK(Field::prime(7).parse("1/2") == Field::prime(7).from_int(4));
  CHECK_THROWS_AS(Field::rational().one() + Field::prime(3).one(), Error);
}
