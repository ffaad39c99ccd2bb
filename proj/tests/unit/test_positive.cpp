#include <doctest.h>

#include <map>

#include "common/lemma_checks.hpp"
#include "wallfact/bilinear.hpp"
#include "wallfact/order.hpp"
#include "wallfact/positive.hpp"

using namespace wallfact;
using testutil::mat;
using testutil::vec;

namespace {

const Field Q = Field::rational();

using testutil::case1_form;
using testutil::case2_form;
using testutil::is_positive_triangular;
using testutil::nonzero_rational;
using testutil::positive_rational;
using testutil::self;
using testutil::valid_pair;

void check_positive_factorization(const Isometry& f) {
  Factorization fac = positive_factorization(f);
  CHECK(fac.length() == positive_reflection_length(f));
  for (const auto& v : fac.vectors()) CHECK(f.space()->q(v).sign() > 0);
  CHECK(fac.length() >= reflection_length(f));
  CHECK((fac.length() - reflection_length(f)) % 2 == 0);
}

}  // namespace

TEST_CASE("find_chi_positive") {
  CHECK(find_chi_positive(mat(Q, {{-1, 0}, {0, 2}})) == vec(Q, {0, 1}));
  CHECK_FALSE(find_chi_positive(mat(Q, {{-1, 0}, {0, -1}})).has_value());
  // Only the diagonalized symmetric part finds this one: e_i, e_i +- e_j all fail.
  Matrix hidden = mat(Q, {{-1, 2, 1}, {0, -1, 1}, {1, 1, -1}});
  auto v = find_chi_positive(hidden);
  REQUIRE(v.has_value());
  CHECK(self(hidden, *v).sign() > 0);
  CHECK_THROWS_AS(find_chi_positive(mat(Field::prime(5), {{1}})), Error);
}

TEST_CASE("basis_with_one_positive_vector") {
  Matrix chi = mat(Q, {{-1, 2, 0}, {0, -1, 1}, {1, 0, 0}});
  auto e = basis_with_one_positive_vector(chi);
  CHECK(self(chi, e[0]).sign() > 0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(form_value(chi, e[i], e[j]).is_zero());

  try {
    basis_with_one_positive_vector(mat(Q, {{-1, 0}, {0, -2}}));
    FAIL("expected NoPositiveVector");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NoPositiveVector);
  }

  std::mt19937_64 rng(11);
  int tested = 0;
  while (tested < 80) {
    std::size_t m = 2 + rng() % 4;
    Matrix x = testutil::random_matrix(Q, m, m, rng, 3);
    if (is_degenerate(x) || !find_chi_positive(x)) continue;
    auto b = basis_with_one_positive_vector(x);
    REQUIRE(b.size() == m);
    CHECK(self(x, b[0]).sign() > 0);
    CHECK(rank(Matrix::from_rows(Q, b)) == m);
    for (std::size_t i = 0; i < m; ++i) {
      CHECK_FALSE(self(x, b[i]).is_zero());
      for (std::size_t j = i + 1; j < m; ++j) CHECK(form_value(x, b[i], b[j]).is_zero());
    }
    ++tested;
  }
}

TEST_CASE("orthogonal positive pair: fixed branch instances") {
  const Scalar one = Q.one();
  // chi(e2, e2) = 0, gamma = delta = a = 1, b = 2, c = 1.
  Matrix c1 = case1_form(one, one, one, Q.from_int(2), one);
  auto p1 = orthogonal_positive_pair_3d(c1);
  CHECK(p1.branch == PairCase::SumNonzero);
  CHECK(valid_pair(c1, p1));
  CHECK(p1.v1 == vec(Q, {1, 0, 0}));
  CHECK(p1.v2 == vec(Q, {0, 2, 3}));

  // b + c = 0.
  Matrix c0 = case1_form(one, one, one, one, -one);
  auto p0 = orthogonal_positive_pair_3d(c0);
  CHECK(p0.branch == PairCase::SumZero);
  CHECK(valid_pair(c0, p0));
  CHECK(p0.v1 == vec(Q, {1, 1, 0}));
  CHECK(p0.v2 == vec(Q, {1, 0, 1}));

  // chi(e2, e2) < 0 with gamma = delta = eps = 1, a = 1, b = 0.
  Matrix c2 = case2_form(one, one, one, one, Q.zero());
  auto p2 = orthogonal_positive_pair_3d(c2);
  CHECK(p2.branch == PairCase::SquareSearch);
  CHECK(valid_pair(c2, p2));

  Matrix wide = case2_form(one, one, one, one, Q.from_int(2));
  auto pw = orthogonal_positive_pair_3d(wide);
  CHECK(pw.branch == PairCase::WideInterval);
  CHECK(valid_pair(wide, pw));

  Matrix direct = mat(Q, {{1, 0, 0}, {0, 1, 0}, {0, 1, -1}});
  auto pd = orthogonal_positive_pair_3d(direct);
  CHECK(pd.branch == PairCase::Direct);
  CHECK(valid_pair(direct, pd));

  try {
    orthogonal_positive_pair_3d(mat(Q, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
    FAIL("expected SymmetricChi");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::SymmetricChi);
  }
  CHECK_THROWS_AS(orthogonal_positive_pair_3d(mat(Q, {{1, 0}, {1, 1}})), Error);
}

TEST_CASE("orthogonal positive pair: randomized branches") {
  std::mt19937_64 rng(2024);
  std::map<PairCase, int> seen;
  for (int i = 0; i < 60; ++i) {
    Scalar gamma = positive_rational(rng), delta = positive_rational(rng), a = nonzero_rational(rng);
    Scalar b = testutil::random_rational(rng, 6, 3);
    Scalar c = (i % 2 == 0) ? -b : testutil::random_rational(rng, 6, 3);
    Matrix chi = case1_form(gamma, delta, a, b, c);
    if (chi.is_symmetric() || is_degenerate(chi)) continue;
    auto p = orthogonal_positive_pair_3d(chi);
    CHECK(valid_pair(chi, p));
    ++seen[p.branch];
  }
  for (int i = 0; i < 60; ++i) {
    Scalar gamma = positive_rational(rng), delta = positive_rational(rng), eps = positive_rational(rng);
    Scalar a = testutil::random_rational(rng, 6, 3), b = testutil::random_rational(rng, 6, 3);
    Matrix chi = case2_form(gamma, delta, eps, a, b);
    if (chi.is_symmetric()) continue;
    auto p = orthogonal_positive_pair_3d(chi);
    CHECK(valid_pair(chi, p));
    ++seen[p.branch];
  }
  CHECK(seen[PairCase::SumNonzero] > 0);
  CHECK(seen[PairCase::SumZero] > 0);
  CHECK(seen[PairCase::WideInterval] > 0);
  CHECK(seen[PairCase::SquareSearch] > 0);

  // Arbitrary non-symmetric forms with a positive vector.
  int tested = 0;
  while (tested < 100) {
    Matrix chi = testutil::random_matrix(Q, 3, 3, rng, 4);
    if (chi.is_symmetric() || is_degenerate(chi) || !find_chi_positive(chi)) continue;
    CHECK(valid_pair(chi, orthogonal_positive_pair_3d(chi)));
    ++tested;
  }
}

TEST_CASE("perturbation identities") {
  std::mt19937_64 rng(77);
  int tested = 0;
  while (tested < 60) {
    std::size_t m = 3 + rng() % 3;
    Matrix chi = testutil::random_matrix(Q, m, m, rng, 3);
    if (is_degenerate(chi)) continue;
    Vector v1 = testutil::random_vector(Q, m, rng, 3);
    if (self(chi, v1).sign() <= 0) continue;
    // v2 in <v1>^> through the right complement.
    Subspace r = kernel(Matrix::from_rows(Q, {chi.transpose() * v1}, m));
    Vector v2 = r.from_coordinates(testutil::random_vector(Q, r.dim(), rng, 3));
    if (is_zero(v2)) continue;
    Vector u = testutil::random_vector(Q, m, rng, 3);
    Vector w = perturb_orthogonal_pair(chi, v1, v2, u);
    for (int a : {1, -1, 5}) {
      Scalar s = Q.from_int(a);
      CHECK(form_value(chi, v1 + s * u, v2 + s * w).is_zero());
    }
    Scalar s = testutil::random_rational(rng, 9, 7);
    CHECK(form_value(chi, v1 + s * u, v2 + s * w).is_zero());

    Scalar d = perturb_positive_vector(chi, v1, u);
    CHECK(d.sign() > 0);
    CHECK(d <= Q.one());
    for (const char* frac : {"99/100", "-99/100", "1/2", "-1/3"}) {
      Scalar a = d * testutil::q(frac);
      CHECK(self(chi, v1 + a * u).sign() > 0);
    }
    ++tested;
  }
  Matrix id = mat(Q, {{1, 0}, {0, 1}});
  CHECK(is_zero(perturb_orthogonal_pair(id, vec(Q, {1, 0}), vec(Q, {0, 1}), vec(Q, {3, 0}))));
  CHECK_THROWS_AS(perturb_positive_vector(id, vec(Q, {0, 0}), vec(Q, {1, 0})), Error);
}

TEST_CASE("positive_basis") {
  Matrix chi = mat(Q, {{1, 0, 0}, {0, -1, 0}, {1, 3, -1}});
  auto e = positive_basis(chi);
  CHECK(is_positive_triangular(chi, e));

  CHECK(is_positive_triangular(mat(Q, {{2, 1}, {1, 3}}), positive_basis(mat(Q, {{2, 1}, {1, 3}}))));
  try {
    positive_basis(mat(Q, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
    FAIL("expected SymmetricChi");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::SymmetricChi);
  }
  try {
    positive_basis(mat(Q, {{1, 0}, {0, -1}}));
    FAIL("expected NegativeDeterminant");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NegativeDeterminant);
  }
  try {
    positive_basis(mat(Q, {{1, 1}, {1, 1}}));
    FAIL("expected DegenerateChi");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::DegenerateChi);
  }

  std::mt19937_64 rng(5);
  int tested = 0;
  while (tested < 80) {
    std::size_t m = 2 + rng() % 4;
    Matrix x = testutil::random_matrix(Q, m, m, rng, 3);
    if (x.is_symmetric() || det(x).sign() <= 0 || !find_chi_positive(x)) continue;
    CHECK(is_positive_triangular(x, positive_basis(x)));
    ++tested;
  }
}

TEST_CASE("positive length of small examples") {
  auto lorentz = make_diagonal_space(Q, {1, -1});
  Isometry boost(lorentz, testutil::qmat({{"5/3", "4/3"}, {"4/3", "5/3"}}));
  CHECK(is_positive_isometry(boost));
  CHECK(reflection_length(boost) == 2);
  CHECK(positive_reflection_length(boost) == 2);
  check_positive_factorization(boost);

  auto s = make_diagonal_space(Q, {1, -1, -1});
  Isometry f = reflection(s, vec(Q, {0, 1, 0})) * reflection(s, vec(Q, {0, 0, 1}));
  CHECK(reflection_length(f) == 2);
  CHECK(positive_reflection_length(f) == 4);
  Factorization fac = positive_factorization(f);
  REQUIRE(fac.length() == 4);
  check_positive_factorization(f);

  // The suffix r_{b2} r_{b3} lies below f in the positive order only.
  const auto& b = fac.vectors();
  Isometry g = reflection(s, b[2]) * reflection(s, b[3]);
  CHECK(positive_reflection_length(g) == 2);
  CHECK(positive_less_equal(g, f));
  CHECK_FALSE(less_equal(g, f));

  PositivityReport rep = positivity_report(f);
  CHECK(rep.spinor_positive);
  CHECK(rep.is_involution);
  CHECK(rep.mov_definiteness == Definiteness::NegDef);
  CHECK(rep.positive_length == 4);

  CHECK(positive_reflection_length(Isometry::identity(s)) == 0);
  CHECK(positive_factorization(Isometry::identity(s)).length() == 0);
}

TEST_CASE("positive length errors") {
  auto s = make_diagonal_space(Q, {1, -1});
  try {
    positive_reflection_length(reflection(s, vec(Q, {0, 1})));
    FAIL("expected NegativeSpinor");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NegativeSpinor);
  }
  auto neg = make_diagonal_space(Q, {-1, -1});
  try {
    positive_reflection_length(reflection(neg, vec(Q, {1, 0})) * reflection(neg, vec(Q, {0, 1})));
    FAIL("expected NegativeDefiniteSpace");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NegativeDefiniteSpace);
  }
  const Field f5 = Field::prime(5);
  auto s5 = make_diagonal_space(f5, {1, 1});
  try {
    positive_reflection_length(reflection(s5, vec(f5, {1, 0})));
    FAIL("expected UnorderedField");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::UnorderedField);
  }
}

TEST_CASE("positive factorizations of random isometries") {
  std::mt19937_64 rng(99);
  const std::vector<std::vector<int>> diags{{1, -1, -1}, {1, 1, -1}, {1, -1, 1, -1}, {2, -3, 1, -1}, {1, 1, 1, -1, -2}};
  std::map<std::size_t, int> excess;
  int tested = 0;
  for (int round = 0; tested < 120; ++round) {
    const auto& d = diags[round % diags.size()];
    auto space = make_diagonal_space(Q, std::vector<std::int64_t>(d.begin(), d.end()));
    std::size_t k = 1 + rng() % space->dim();
    Isometry f = testutil::random_isometry(space, k, rng);
    if (!is_positive_isometry(f)) continue;
    check_positive_factorization(f);
    ++excess[positive_reflection_length(f) - reflection_length(f)];
    ++tested;
  }
  CHECK(excess[0] > 0);

  // Products of negative reflections: involutions with negative definite
  // moved space, and non-involutions with negative semidefinite moved space.
  for (int i = 0; i < 40; ++i) {
    auto space = make_diagonal_space(Q, {1, 1, -1, -1});
    Vector n1 = vec(Q, {0, 0, 1, 0}), n2 = vec(Q, {0, 0, 0, 1});
    n1 = n1 + testutil::random_rational(rng, 1, 5) * vec(Q, {1, 0, 0, 0});
    n2 = n2 + testutil::random_rational(rng, 1, 5) * vec(Q, {0, 1, 0, 0});
    if (space->q(n1).sign() >= 0 || space->q(n2).sign() >= 0) continue;
    Isometry f = reflection(space, n1) * reflection(space, n2);
    if (!is_positive_isometry(f)) continue;
    check_positive_factorization(f);
    ++excess[positive_reflection_length(f) - reflection_length(f)];
  }
  CHECK(excess[2] > 0);
}
