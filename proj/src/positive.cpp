#include "wallfact/positive.hpp"

#include "wallfact/bilinear.hpp"

namespace wallfact {

namespace {

Scalar self_value(const Matrix& chi, const Vector& x) { return form_value(chi, x, x); }

void require_rational(const Field& f) {
  if (!f.is_ordered()) throw Error(ErrorCode::UnorderedField, "positivity needs an ordered field");
}

void require_nondegenerate(const Matrix& chi) {
  if (!chi.is_square()) throw Error(ErrorCode::NonSquare, "chi must be square");
  if (is_degenerate(chi)) throw Error(ErrorCode::DegenerateChi, "chi is degenerate");
}

Subspace right_of(const Matrix& chi, const std::vector<Vector>& us) {
  std::vector<Vector> rows;
  for (const auto& u : us) rows.push_back(chi.transpose() * u);
  return kernel(Matrix::from_rows(chi.field(), rows, chi.rows()));
}

Subspace left_of(const Matrix& chi, const std::vector<Vector>& us) {
  std::vector<Vector> rows;
  for (const auto& u : us) rows.push_back(chi * u);
  return kernel(Matrix::from_rows(chi.field(), rows, chi.rows()));
}

Vector combine(const Vector& coeffs, const std::vector<Vector>& basis) {
  Vector out = zero_vector(basis.front()[0].field(), basis.front().size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) out = out + coeffs[i] * basis[i];
  return out;
}

bool all_positive(const Matrix& chi, const std::vector<Vector>& vs) {
  for (const auto& v : vs)
    if (self_value(chi, v).sign() <= 0) return false;
  return true;
}

PositivePair finish_pair(const Matrix& chi, Vector v1, Vector v2, PairCase branch) {
  if (self_value(chi, v1).sign() <= 0 || self_value(chi, v2).sign() <= 0 || !form_value(chi, v1, v2).is_zero())
    throw Error(ErrorCode::InternalError, "orthogonal positive pair construction failed");
  return {std::move(v1), std::move(v2), branch};
}

// chi(e1,e1) > 0, chi(e2,e2) < 0, e2 in <e1>^< and <e1>^>.
PositivePair case_negative(const Matrix& chi, const Vector& e1, const Vector& e2) {
  const Field f = chi.field();
  Subspace comp = right_of(chi, {e1, e2});
  const Vector e3 = comp.basis().row(0);
  if (self_value(chi, e3).sign() > 0) return finish_pair(chi, e1, e3, PairCase::Direct);
  const Scalar gamma = self_value(chi, e1);
  const Scalar delta = -self_value(chi, e2);
  const Scalar eps = -self_value(chi, e3);
  const Scalar a = form_value(chi, e3, e1);
  const Scalar b = form_value(chi, e3, e2);
  const Scalar ratio = delta / gamma;
  const Scalar sign = (a * b).sign() >= 0 ? f.one() : -f.one();
  const Scalar four = f.from_int(4);

  Scalar q;
  PairCase branch;
  if (b * b >= four * delta * eps) {
    q = sign * (ratio + f.one());
    branch = PairCase::WideInterval;
  } else {
    Scalar hi = (f.one() + a * a / (four * gamma * eps)) / (f.one() - b * b / (four * delta * eps)) * ratio;
    q = sign * rational_square_in_interval(ratio, hi);
    branch = PairCase::SquareSearch;
  }
  const Scalar g_over_d = gamma / delta;
  Vector v1 = q * e1 + e2;
  Vector v2 = e1 + (g_over_d * q) * e2 + ((a + g_over_d * b * q) / (f.from_int(2) * eps)) * e3;
  return finish_pair(chi, std::move(v1), std::move(v2), branch);
}

}  // namespace

bool is_positive_isometry(const Isometry& f) {
  require_rational(f.field());
  return spinor_norm(f).is_positive();
}

PositivityReport positivity_report(const Isometry& f) {
  PositivityReport r;
  r.spinor_positive = is_positive_isometry(f);
  r.mov_definiteness = f.space()->definiteness(moved_space(f));
  r.is_involution = f.is_involution();
  if (r.spinor_positive) r.positive_length = positive_reflection_length(f);
  return r;
}

std::optional<Vector> find_chi_positive(const Matrix& chi) {
  require_rational(chi.field());
  const Field f = chi.field();
  const std::size_t m = chi.rows();
  for (std::size_t i = 0; i < m; ++i) {
    Vector e = unit_vector(f, m, i);
    if (self_value(chi, e).sign() > 0) return e;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector s = unit_vector(f, m, i) + unit_vector(f, m, j);
      if (self_value(chi, s).sign() > 0) return s;
      Vector d = unit_vector(f, m, i) - unit_vector(f, m, j);
      if (self_value(chi, d).sign() > 0) return d;
    }
  if (m == 0) return std::nullopt;
  Diagonalization dg = diagonalize_symmetric((chi + chi.transpose()) * f.from_int(2).inverse());
  for (std::size_t i = 0; i < dg.diagonal.size(); ++i)
    if (dg.diagonal[i].sign() > 0) return dg.basis.row(i);
  return std::nullopt;
}

std::vector<Vector> basis_with_one_positive_vector(const Matrix& chi, std::optional<Vector> hint) {
  require_rational(chi.field());
  require_nondegenerate(chi);
  if (hint && self_value(chi, *hint).sign() <= 0) hint.reset();
  if (!hint) hint = find_chi_positive(chi);
  if (!hint) throw Error(ErrorCode::NoPositiveVector, "chi(u, u) <= 0 for every u");
  return triangular_basis_from(chi, Subspace::full(chi.field(), chi.rows()), hint, true);
}

PositivePair orthogonal_positive_pair_3d(const Matrix& chi) {
  require_rational(chi.field());
  if (chi.rows() != 3 || chi.cols() != 3) throw Error(ErrorCode::DimensionMismatch, "expected a 3x3 form");
  require_nondegenerate(chi);
  if (chi.is_symmetric()) throw Error(ErrorCode::SymmetricChi, "chi is symmetric");
  const Vector e1 = basis_with_one_positive_vector(chi).front();
  Subspace right = right_of(chi, {e1});
  Subspace both = subspace_intersection(right, left_of(chi, {e1}));
  const Vector e2 = both.basis().row(0);
  const int s2 = self_value(chi, e2).sign();
  if (s2 > 0) return finish_pair(chi, e1, e2, PairCase::Direct);
  if (s2 < 0) return case_negative(chi, e1, e2);

  // chi(e2, e2) = 0: pick e3 in <e1>^> with chi(e3, e3) != 0.
  std::optional<Vector> e3;
  const auto rb = right.vectors();
  for (const auto& cand : {rb[0], rb[1], rb[0] + rb[1]})
    if (!self_value(chi, cand).is_zero()) {
      e3 = cand;
      break;
    }
  if (!e3) throw Error(ErrorCode::InternalError, "restriction to <e1>^> is alternating");
  if (self_value(chi, *e3).sign() > 0) return finish_pair(chi, e1, *e3, PairCase::Direct);
  const Scalar a = form_value(chi, *e3, e1);
  if (a.is_zero()) return case_negative(chi, e1, *e3);
  const Scalar gamma = self_value(chi, e1);
  const Scalar delta = -self_value(chi, *e3);
  const Scalar b = form_value(chi, *e3, e2);
  const Scalar c = form_value(chi, e2, *e3);
  if (!(b + c).is_zero())
    return finish_pair(chi, e1, (chi.field().from_int(2) * delta) * e2 + (b + c) * *e3, PairCase::SumNonzero);
  return finish_pair(chi, (a * b) * e1 + (gamma * delta) * e2, delta * e1 + a * *e3, PairCase::SumZero);
}

Vector perturb_orthogonal_pair(const Matrix& chi, const Vector& v1, const Vector& v2, const Vector& u) {
  const Field f = chi.field();
  if (Subspace::span(f, chi.rows(), {v1}).contains(u)) return zero_vector(f, chi.rows());
  // chi(v1, w) = -chi(u, v2) and chi(u, w) = 0.
  Matrix a = Matrix::from_rows(f, {chi.transpose() * v1, chi.transpose() * u}, chi.rows());
  auto w = solve(a, Vector{-form_value(chi, u, v2), f.zero()});
  if (!w) throw Error(ErrorCode::DegenerateChi, "chi is degenerate");
  return *w;
}

Scalar perturb_positive_vector(const Matrix& chi, const Vector& v, const Vector& u) {
  require_rational(chi.field());
  const Field f = chi.field();
  const Scalar vv = self_value(chi, v);
  if (vv.sign() <= 0) throw Error(ErrorCode::NoPositiveVector, "chi(v, v) must be positive");
  Scalar m = f.one();
  for (const Scalar& x : {form_value(chi, u, v), form_value(chi, v, u), self_value(chi, u)})
    if (x.abs() > m) m = x.abs();
  Scalar delta = vv / (f.from_int(3) * m);
  return delta < f.one() ? delta : f.one();
}

std::vector<Vector> positive_basis(const Matrix& chi, std::optional<Vector> hint) {
  require_rational(chi.field());
  require_nondegenerate(chi);
  const Field f = chi.field();
  const std::size_t m = chi.rows();
  if (det(chi).sign() < 0) throw Error(ErrorCode::NegativeDeterminant, "det(chi) < 0");
  const std::vector<Vector> e = basis_with_one_positive_vector(chi, hint);
  if (all_positive(chi, e)) return e;
  if (chi.is_symmetric()) throw Error(ErrorCode::SymmetricChi, "symmetric chi that is not positive definite");

  // Indices 0 < i < j with a non-symmetric 3x3 restriction to <e_0, e_i, e_j>.
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 1; i < m && bj == 0; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!form_value(chi, e[i], e[0]).is_zero() || !form_value(chi, e[j], e[0]).is_zero() ||
          !form_value(chi, e[j], e[i]).is_zero()) {
        bi = i;
        bj = j;
        break;
      }
  if (bj == 0) throw Error(ErrorCode::InternalError, "no non-symmetric index pair");
  const std::vector<Vector> u3{e[0], e[bi], e[bj]};
  PositivePair pair = orthogonal_positive_pair_3d(restrict_form(chi, Matrix::from_rows(f, u3)));
  const Vector v1 = combine(pair.v1, u3);
  const Vector v2 = combine(pair.v2, u3);

  std::vector<Vector> ws;
  Scalar bound = f.one();
  for (std::size_t k = 0; k < m; ++k) {
    Vector ek = unit_vector(f, m, k);
    Vector wk = perturb_orthogonal_pair(chi, v1, v2, ek);
    for (const Scalar& d : {perturb_positive_vector(chi, v1, ek), perturb_positive_vector(chi, v2, wk)})
      if (d < bound) bound = d;
    ws.push_back(std::move(wk));
  }
  const Scalar a = bound * f.from_int(2).inverse();

  std::vector<std::pair<Vector, Vector>> probes{{v1, v2}};
  for (std::size_t k = 0; k < m; ++k) probes.emplace_back(v1 + a * unit_vector(f, m, k), v2 + a * ws[k]);
  for (const auto& [u, p] : probes) {
    Subspace r = right_of(chi, {u});
    Matrix gram = restrict_form(chi, r.basis());
    if (gram.is_symmetric()) continue;
    std::vector<Vector> out{u};
    for (const auto& c : positive_basis(gram, r.coordinates(p))) out.push_back(r.from_coordinates(c));
    return out;
  }
  throw Error(ErrorCode::InternalError, "no probe with a non-symmetric complement");
}

std::size_t positive_reflection_length(const Isometry& f) {
  require_rational(f.field());
  if (!is_positive_isometry(f)) throw Error(ErrorCode::NegativeSpinor, "isometry has negative spinor norm");
  const auto& space = *f.space();
  const Definiteness whole = space.definiteness(Subspace::full(space.field(), space.dim()));
  if (whole == Definiteness::NegDef) throw Error(ErrorCode::NegativeDefiniteSpace, "space is negative definite");
  const Subspace mov = moved_space(f);
  const std::size_t m = mov.dim();
  if (m == 0) return 0;
  const Definiteness d = space.definiteness(mov);
  if (d == Definiteness::PosDef) return m;
  const bool neg_semi = d == Definiteness::NegDef || d == Definiteness::NegSemi;
  if (!f.is_involution() && !neg_semi) return m;
  return m + 2;
}

namespace {

std::vector<Vector> to_ambient(const WallData& wd, const std::vector<Vector>& coords) {
  std::vector<Vector> out;
  for (const auto& c : coords) out.push_back(wd.mov.from_coordinates(c));
  return out;
}

// A positive vector outside Fix(f): positive coordinate probes, then small
// perturbations of one positive vector along every standard direction.
Vector positive_vector_off(const Isometry& f) {
  const auto& space = *f.space();
  const Field fld = space.field();
  const std::size_t n = space.dim();
  const Subspace fix = fixed_space(f);
  std::vector<Vector> probes;
  for (std::size_t i = 0; i < n; ++i) probes.push_back(unit_vector(fld, n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      probes.push_back(unit_vector(fld, n, i) + unit_vector(fld, n, j));
      probes.push_back(unit_vector(fld, n, i) - unit_vector(fld, n, j));
    }
  for (const auto& v : probes)
    if (space.q(v).sign() > 0 && !fix.contains(v)) return v;
  auto p0 = find_positive_vector(space, Subspace::full(fld, n));
  if (!p0) throw Error(ErrorCode::NegativeDefiniteSpace, "space is negative definite");
  for (std::size_t k = 0; k < n; ++k) {
    Vector ek = unit_vector(fld, n, k);
    Scalar a = perturb_positive_vector(space.form(), *p0, ek) * fld.from_int(2).inverse();
    Vector v = *p0 + a * ek;
    if (!fix.contains(v)) return v;
  }
  throw Error(ErrorCode::InternalError, "every probe is fixed by f");
}

std::vector<Vector> positive_vectors(const Isometry& f) {
  const auto& space = f.space();
  const WallData wd = wall_form(f);
  if (wd.dim() == 0) return {};
  const Definiteness d = space->definiteness(wd.mov);
  const bool involution = f.is_involution();
  const bool neg_semi = d == Definiteness::NegDef || d == Definiteness::NegSemi;

  if (involution && d == Definiteness::PosDef) return to_ambient(wd, triangular_basis(wd.chi));
  if (!involution && !neg_semi) {
    Vector hint = wd.mov.coordinates(*find_positive_vector(*space, wd.mov));
    return to_ambient(wd, positive_basis(wd.chi, hint));
  }
  if (neg_semi) {
    Vector v = positive_vector_off(f);
    const WallData wg = wall_form(reflection(space, v) * f);
    std::vector<Vector> out{v};
    for (auto& x : to_ambient(wg, positive_basis(wg.chi, wg.mov.coordinates(v)))) out.push_back(std::move(x));
    return out;
  }
  // Involution with indefinite moved space: peel one positive vector.
  Vector u = *find_positive_vector(*space, wd.mov);
  std::vector<Vector> out{u};
  for (auto& x : positive_vectors(reflection(space, u) * f)) out.push_back(std::move(x));
  return out;
}

}  // namespace

Factorization positive_factorization(const Isometry& f) {
  const std::size_t expected = positive_reflection_length(f);
  std::vector<Vector> vs = positive_vectors(f);
  for (const auto& v : vs)
    if (f.space()->q(v).sign() <= 0) throw Error(ErrorCode::InternalError, "non-positive reflection in output");
  if (vs.size() != expected) throw Error(ErrorCode::InternalError, "positive factorization has the wrong length");
  return Factorization(f, std::move(vs));
}

bool positive_less_equal(const Isometry& g, const Isometry& f) {
  return positive_reflection_length(g) + positive_reflection_length(g.inverse() * f) ==
         positive_reflection_length(f);
}

}  // namespace wallfact
