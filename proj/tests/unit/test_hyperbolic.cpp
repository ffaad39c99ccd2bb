#include <doctest.h>

#include "common/lorentz.hpp"
#include "wallfact/bilinear.hpp"
#include "wallfact/hyperbolic.hpp"

using namespace wallfact;
using testutil::vec;

namespace {

const Field Q = Field::rational();

Isometry boost(std::size_t n) {
  auto space = make_lorentz_space(n);
  Matrix m = Matrix::identity(Q, n + 1);
  m(0, 0) = m(n, n) = testutil::q("5/3");
  m(0, n) = m(n, 0) = testutil::q("4/3");
  return Isometry(space, m);
}

using testutil::is_sandwich;

}  // namespace

TEST_CASE("fixes_hyperbolic_space") {
  auto s = make_lorentz_space(3);
  CHECK(fixes_hyperbolic_space(reflection(s, vec(Q, {1, 0, 0, 0}))));
  CHECK_FALSE(fixes_hyperbolic_space(reflection(s, vec(Q, {0, 0, 0, 1}))));
  CHECK(fixes_hyperbolic_space(boost(3)));
  auto e = make_diagonal_space(Q, {1, 1, 1});
  CHECK_THROWS_AS(fixes_hyperbolic_space(Isometry::identity(e)), Error);
}

TEST_CASE("classification examples") {
  auto s = make_lorentz_space(2);
  CHECK(classify(Isometry::identity(s)) == HyperbolicType::Elliptic);
  CHECK(classify(boost(2)) == HyperbolicType::Hyperbolic);
  CHECK(classify(reflection(s, vec(Q, {1, 0, 0})) * reflection(s, vec(Q, {0, 1, 0}))) == HyperbolicType::Elliptic);
  try {
    classify(reflection(s, vec(Q, {0, 0, 1})));
    FAIL("expected NotPositive");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotPositive);
  }

  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    auto p = testutil::random_parabolic(2 + i % 3, 2 + i % 2, rng);
    CHECK(classify(p.f) == HyperbolicType::Parabolic);
    Subspace meet = subspace_intersection(fixed_space(p.f), moved_space(p.f));
    REQUIRE(meet.dim() == 1);
    CHECK(p.f.space()->q(meet.basis().row(0)).is_zero());
    CHECK(meet.contains(p.radical));
  }
}

TEST_CASE("classification trichotomy on random positive isometries") {
  std::mt19937_64 rng(8);
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < 120; ++i) {
    auto s = make_lorentz_space(2 + i % 3);
    Isometry f = testutil::random_positive_isometry(s, 1 + rng() % s->dim(), rng);
    HyperbolicType t = classify(f);
    CHECK(classify_by_fix(f) == classify_by_mov(f));
    ++counts[static_cast<int>(t)];
    if (t != HyperbolicType::Parabolic) CHECK(subspace_intersection(fixed_space(f), moved_space(f)).dim() == 0);
  }
  CHECK(counts[0] > 0);
  CHECK(counts[2] > 0);
}

TEST_CASE("hyperbolic positive factorization") {
  auto s = make_lorentz_space(3);
  Vector v = vec(Q, {1, 2, 0, 1});
  auto one = hyperbolic_positive_factorization(reflection(s, v));
  REQUIRE(one.length() == 1);
  CHECK(Subspace::span(Q, 4, one.vectors()).contains(v));
  CHECK(hyperbolic_positive_factorization(boost(3)).length() == 2);
  CHECK(hyperbolic_positive_factorization(Isometry::identity(s)).length() == 0);

  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    auto sp = make_lorentz_space(2 + i % 3);
    Isometry f = testutil::random_positive_isometry(sp, 1 + rng() % sp->dim(), rng);
    Factorization fac = hyperbolic_positive_factorization(f);
    CHECK(fac.length() == moved_space(f).dim());
    CHECK(fac.length() == positive_reflection_length(f));
    for (const auto& x : fac.vectors()) CHECK(sp->q(x).sign() > 0);
  }
  for (int i = 0; i < 10; ++i) {
    auto p = testutil::random_parabolic(3, 2 + i % 2, rng);
    CHECK(hyperbolic_positive_factorization(p.f).length() == p.basis.size());
  }
}

TEST_CASE("interval subspace test basics") {
  auto s = make_lorentz_space(3);
  Isometry b = boost(3);
  CHECK(interval_subspace_test(b, Subspace::zero(Q, 4)));
  // Positive definite subspaces of Mov always pass.
  CHECK(interval_subspace_test(b, Subspace::span(Q, 4, {vec(Q, {1, 0, 0, 0})})));
  CHECK_FALSE(interval_subspace_test(b, Subspace::span(Q, 4, {vec(Q, {0, 0, 0, 1})})));
  CHECK_THROWS_AS(interval_subspace_test(b, Subspace::span(Q, 4, {vec(Q, {0, 1, 0, 0})})), Error);
}

TEST_CASE("interval membership agrees with the positive order") {
  std::mt19937_64 rng(34);
  int members = 0, non_members = 0;
  for (int i = 0; i < 40; ++i) {
    auto sp = make_lorentz_space(2 + i % 3);
    Isometry f = testutil::random_positive_isometry(sp, 2 + rng() % (sp->dim() - 1), rng);
    const auto vs = hyperbolic_positive_factorization(f).vectors();
    Isometry g = Isometry::identity(sp);
    for (std::size_t j = 0; j <= vs.size(); ++j) {
      const bool in = interval_membership(g, f);
      CHECK(in == positive_less_equal(g, f));
      CHECK(in);
      Isometry h = g * reflection(sp, testutil::random_positive_vector(sp, rng));
      const bool in_h = interval_membership(h, f);
      CHECK(in_h == positive_less_equal(h, f));
      (in_h ? members : non_members)++;
      if (j < vs.size()) g = g * reflection(sp, vs[j]);
    }
  }
  CHECK(non_members > 0);
}

TEST_CASE("elliptic description accepts every subspace") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 20; ++i) {
    auto sp = make_lorentz_space(3 + i % 2);
    Isometry f = testutil::random_elliptic(sp, 1 + rng() % (sp->dim() - 1), rng);
    REQUIRE(classify(f) == HyperbolicType::Elliptic);
    auto d = parabolic_interval_description(f);
    CHECK(d.predicate() == "all subspaces");
    IntervalSample s = sample_interval(f, 10, i);
    for (std::size_t k = 0; k < s.sampled.size(); ++k) CHECK(s.accepted[k] == s.sampled[k]);
  }
}

TEST_CASE("parabolic description rejects exactly the sandwich subspaces") {
  std::mt19937_64 rng(89);
  int rejected = 0, accepted = 0;
  for (int i = 0; i < 20; ++i) {
    auto p = testutil::random_parabolic(2 + i % 3, 2 + (i / 3) % 2, rng);
    const auto& space = p.f.space();
    const std::size_t n = space->dim();
    auto d = parabolic_interval_description(p.f);
    REQUIRE(d.type == HyperbolicType::Parabolic);
    REQUIRE(d.singular_line.has_value());
    CHECK(Subspace::span(Q, n, {*d.singular_line}).contains(p.radical));
    if (!d.singular_line->back().is_zero()) CHECK(d.singular_line->back() == Q.one());
    // w - f(w) = v and <v>^> = <w>^perp inside Mov(f).
    CHECK(*d.w - p.f.apply(*d.w) == *d.singular_line);

    // Random subspaces of Mov plus constructed sandwich subspaces.
    const std::size_t m = p.basis.size();
    Subspace hyper = d.hyperplane.value();
    std::vector<Subspace> samples;
    for (int t = 0; t < 20; ++t) {
      std::vector<Vector> rows;
      std::size_t k = 1 + rng() % m;
      for (std::size_t j = 0; j < k; ++j) {
        Vector x = zero_vector(Q, n);
        for (std::size_t b = 0; b < m; ++b) x = x + testutil::random_element(Q, rng, 2) * p.basis[b];
        rows.push_back(x);
      }
      samples.push_back(Subspace::span(Q, n, rows));
      std::vector<Vector> sw{p.radical};
      for (const auto& y : hyper.vectors())
        if (rng() % 2) sw.push_back(y);
      samples.push_back(Subspace::span(Q, n, sw));
    }
    for (const auto& u : samples) {
      const bool test = interval_subspace_test(p.f, u);
      CHECK(test == !is_sandwich(p, u));
      CHECK(description_admits(d, p.f, u) == test);
      (test ? accepted : rejected)++;
    }
  }
  CHECK(rejected > 0);
  CHECK(accepted > 0);
}

TEST_CASE("hyperbolic description falls back to the determinant") {
  auto d = parabolic_interval_description(boost(2));
  CHECK(d.type == HyperbolicType::Hyperbolic);
  CHECK_FALSE(d.singular_line.has_value());
  CHECK(d.predicate() == "det(chi_f|U) > 0");
}
