// Python bindings. Scalars cross the boundary as ints (F_p) or
// fractions.Fraction (Q); on input anything whose str() parses is accepted.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wallfact/hyperbolic.hpp"
#include "wallfact/oracle.hpp"

namespace py = pybind11;
using namespace wallfact;

namespace {

Scalar to_scalar(const Field& f, const py::handle& x) {
  if (py::isinstance<py::int_>(x)) return f.from_int(x.cast<std::int64_t>());
  return f.parse(py::str(x).cast<std::string>());
}

py::object from_scalar(const Scalar& s) {
  if (s.field().is_prime()) return py::int_(s.residue());
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(s.to_string());
}

Vector to_vector(const Field& f, const py::iterable& xs) {
  Vector v;
  for (auto x : xs) v.push_back(to_scalar(f, x));
  return v;
}

py::list from_vector(const Vector& v) {
  py::list out;
  for (const auto& x : v) out.append(from_scalar(x));
  return out;
}

Matrix to_matrix(const Field& f, const py::iterable& rows) {
  std::vector<Vector> rs;
  for (auto r : rows) rs.push_back(to_vector(f, r.cast<py::iterable>()));
  return Matrix::from_rows(f, rs);
}

py::list from_matrix(const Matrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.append(from_vector(m.row(i)));
  return out;
}

py::list from_vectors(const std::vector<Vector>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(from_vector(v));
  return out;
}

py::list basis_of(const Subspace& s) { return from_vectors(s.vectors()); }

Subspace to_subspace(const Isometry& f, const py::iterable& rows) {
  std::vector<Vector> rs;
  for (auto r : rows) rs.push_back(to_vector(f.field(), r.cast<py::iterable>()));
  return Subspace::span(f.field(), f.dim(), rs);
}

py::dict report_dict(const OracleReport& r) {
  py::dict d;
  d["check"] = r.check;
  d["checked"] = r.checked;
  d["violations"] = r.violations;
  d["witnesses"] = r.witnesses;
  return d;
}

}  // namespace

PYBIND11_MODULE(_wallfact, m) {
  m.doc() = "Exact reflection factorizations in orthogonal groups";

  static py::exception<Error> error_type(m, "WallfactError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(e.code_name()), std::string(e.what()));
      PyErr_SetObject(error_type.ptr(), args.ptr());
    }
  });

  py::class_<Field>(m, "Field")
      .def_static("rational", &Field::rational)
      .def_static("prime", &Field::prime)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("is_rational", &Field::is_rational)
      .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
      .def("__repr__", [](const Field& f) {
        return f.is_rational() ? std::string("Field.rational()") : "Field.prime(" + std::to_string(f.characteristic()) + ")";
      });

  py::class_<QuadraticSpace, std::shared_ptr<QuadraticSpace>>(m, "QuadraticSpace")
      .def(py::init([](const Field& f, const py::iterable& form) {
             Matrix mm = to_matrix(f, form);
             if (!mm.is_square()) throw Error(ErrorCode::NonSquare, "form must be square");
             return std::make_shared<QuadraticSpace>((mm + mm.transpose()) * f.from_int(2).inverse());
           }),
           py::arg("field"), py::arg("form"))
      .def_property_readonly("field", &QuadraticSpace::field)
      .def_property_readonly("dim", &QuadraticSpace::dim)
      .def_property_readonly("form", [](const QuadraticSpace& s) { return from_matrix(s.form()); })
      .def("q", [](const QuadraticSpace& s, const py::iterable& v) { return from_scalar(s.q(to_vector(s.field(), v))); })
      .def("signature",
           [](const QuadraticSpace& s) {
             Signature sig = s.signature();
             return py::make_tuple(sig.positives, sig.negatives);
           })
      .def_property_readonly("is_lorentzian", &QuadraticSpace::is_lorentzian);

  m.def("diagonal_space", [](const Field& f, const std::vector<std::int64_t>& d) {
    return std::const_pointer_cast<QuadraticSpace>(make_diagonal_space(f, d));
  });
  m.def("lorentz_space", [](std::size_t n) { return std::const_pointer_cast<QuadraticSpace>(make_lorentz_space(n)); });

  py::class_<Isometry>(m, "Isometry")
      .def(py::init([](std::shared_ptr<QuadraticSpace> s, const py::iterable& mat) {
             return Isometry(s, to_matrix(s->field(), mat));
           }),
           py::arg("space"), py::arg("matrix"))
      .def_static("identity", [](std::shared_ptr<QuadraticSpace> s) { return Isometry::identity(s); })
      .def_property_readonly("matrix", [](const Isometry& f) { return from_matrix(f.matrix()); })
      .def_property_readonly("dim", &Isometry::dim)
      .def("inverse", &Isometry::inverse)
      .def("is_involution", &Isometry::is_involution)
      .def("apply", [](const Isometry& f, const py::iterable& v) { return from_vector(f.apply(to_vector(f.field(), v))); })
      .def("__mul__", [](const Isometry& a, const Isometry& b) { return a * b; })
      .def("__eq__", [](const Isometry& a, const Isometry& b) { return a == b; })
      .def("__hash__", [](const Isometry& a) { return std::hash<std::string>{}(a.key()); });

  m.def("reflection", [](std::shared_ptr<QuadraticSpace> s, const py::iterable& v) {
    return reflection(s, to_vector(s->field(), v));
  });

  m.def("moved_space", [](const Isometry& f) { return basis_of(moved_space(f)); });
  m.def("fixed_space", [](const Isometry& f) { return basis_of(fixed_space(f)); });
  m.def("wall_form", [](const Isometry& f) {
    WallData wd = wall_form(f);
    return py::make_tuple(basis_of(wd.mov), from_matrix(wd.chi));
  });
  m.def("isometry_from_wall", [](std::shared_ptr<QuadraticSpace> s, const py::iterable& basis, const py::iterable& chi) {
    std::vector<Vector> rs;
    for (auto r : basis) rs.push_back(to_vector(s->field(), r.cast<py::iterable>()));
    Subspace w = Subspace::span(s->field(), s->dim(), rs);
    Matrix c = w.dim() ? to_matrix(s->field(), chi) : Matrix(s->field(), 0, 0);
    return isometry_from_wall(s, w, c);
  });
  m.def("spinor_norm", [](const Isometry& f) { return spinor_norm(f).to_string(); });
  m.def("reflection_length", &reflection_length);
  m.def("is_minimal", &is_minimal);
  m.def("minimal_factorization", [](const Isometry& f) { return from_vectors(minimal_factorization(f).normalized()); });
  m.def("less_equal", &less_equal);
  m.def(
      "interval",
      [](const Isometry& f, std::uint64_t cap) {
        IntervalPoset p = interval(f, cap);
        py::dict d;
        d["elements"] = py::cast(p.elements);
        d["rank"] = p.rank;
        d["covers"] = p.covers;
        d["minimal"] = p.minimal_top;
        d["graded"] = interval_is_graded_check(p).ok();
        d["dot"] = p.to_dot();
        return d;
      },
      py::arg("f"), py::arg("cap") = kDefaultEnumerationCap);

  m.def("is_positive_isometry", &is_positive_isometry);
  m.def("positive_reflection_length", &positive_reflection_length);
  m.def("positive_factorization", [](const Isometry& f) { return from_vectors(positive_factorization(f).normalized()); });
  m.def("positive_less_equal", &positive_less_equal);

  m.def("classify", [](const Isometry& f) { return to_string(classify(f)); });
  m.def("hyperbolic_positive_factorization",
        [](const Isometry& f) { return from_vectors(hyperbolic_positive_factorization(f).normalized()); });
  m.def("interval_subspace_test",
        [](const Isometry& f, const py::iterable& u) { return interval_subspace_test(f, to_subspace(f, u)); });
  m.def("interval_membership", &interval_membership);

  m.def(
      "oracle",
      [](std::shared_ptr<QuadraticSpace> s, std::uint64_t cap) {
        GroupCensus c = enumerate_group(s, cap);
        py::dict d;
        d["group_order"] = c.size();
        py::list checks;
        checks.append(report_dict(verify_length_formula(c)));
        checks.append(report_dict(verify_spinor_homomorphism(c)));
        checks.append(report_dict(verify_wall_bijection(c, false)));
        checks.append(report_dict(verify_intervals(c)));
        d["checks"] = checks;
        return d;
      },
      py::arg("space"), py::arg("cap") = kDefaultGroupCap);
}
