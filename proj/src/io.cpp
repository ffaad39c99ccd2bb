#include "wallfact/io.hpp"

#include <fstream>
#include <sstream>

namespace wallfact::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (const auto& v : s.vectors()) rows.push_back(vector_to_json(v));
  return rows;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Field parse_field_name(const std::string& name) {
  if (name == "rational" || name == "Q" || name == "q") return Field::rational();
  std::size_t used = 0;
  long long p = 0;
  try {
    p = std::stoll(name, &used);
  } catch (const std::exception&) {
    bad("unknown field '" + name + "'");
  }
  if (used != name.size()) bad("unknown field '" + name + "'");
  return Field::prime(p);
}

Field field_from_json(const json& j) {
  if (j.is_string()) return parse_field_name(j.get<std::string>());
  if (!j.is_object() || !j.contains("field")) bad("field spec must be an object with \"field\"");
  const json& kind = j.at("field");
  if (kind.is_number_integer()) return Field::prime(kind.get<std::int64_t>());
  if (!kind.is_string()) bad("\"field\" must be a string");
  const std::string name = kind.get<std::string>();
  if (name == "prime") {
    if (!j.contains("p") || !j.at("p").is_number_integer()) bad("prime field needs an integer \"p\"");
    return Field::prime(j.at("p").get<std::int64_t>());
  }
  return parse_field_name(name);
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return {{"field", "rational"}};
  return {{"field", "prime"}, {"p", f.characteristic()}};
}

Scalar scalar_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (j.is_string()) return f.parse(j.get<std::string>());
  bad("scalar must be an integer or a string, got " + j.dump());
}

json scalar_to_json(const Scalar& s) {
  if (s.field().is_prime()) return s.residue();
  return s.to_string();
}

Vector vector_from_json(const Field& f, const json& j) {
  if (!j.is_array()) bad("vector must be an array");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(f, x));
  return v;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

Matrix matrix_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(f, r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) bad("ragged matrix");
  return Matrix::from_rows(f, rows);
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

SpacePtr space_from_json(const json& j, std::optional<Field> field) {
  if (!j.is_object() || !j.contains("form")) bad("space file needs \"form\"");
  Field f = field ? *field : (j.contains("field") ? field_from_json(j) : Field::rational());
  Matrix m = matrix_from_json(f, j.at("form"));
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "form must be square");
  return make_space((m + m.transpose()) * f.from_int(2).inverse());
}

json space_to_json(const QuadraticSpace& s) {
  json out = field_to_json(s.field());
  out["form"] = matrix_to_json(s.form());
  return out;
}

Isometry isometry_from_json(const SpacePtr& space, const json& j) {
  const json& m = j.is_object() ? (j.contains("matrix") ? j.at("matrix") : json()) : j;
  if (m.is_null()) bad("isometry file needs \"matrix\"");
  Matrix mat = matrix_from_json(space->field(), m);
  if (mat.rows() != space->dim() || mat.cols() != space->dim())
    throw Error(ErrorCode::DimensionMismatch, "isometry and space dimensions differ");
  return Isometry(space, mat);
}

json isometry_to_json(const Isometry& f) { return {{"matrix", matrix_to_json(f.matrix())}}; }

json wall_to_json(const WallData& wd) {
  return {{"basis", subspace_to_json(wd.mov)}, {"chi", wd.dim() ? matrix_to_json(wd.chi) : json::array()}};
}

json factorization_to_json(const Factorization& fac, bool positive) {
  json refl = json::array();
  for (const auto& v : fac.normalized()) refl.push_back(vector_to_json(v));
  json out = {{"length", fac.length()}, {"reflections", refl}};
  if (positive) out["positive"] = true;
  return out;
}

std::vector<Vector> reflections_from_json(const Field& f, const json& j) {
  if (!j.is_object() || !j.contains("reflections") || !j.at("reflections").is_array())
    bad("factorization file needs \"reflections\"");
  std::vector<Vector> out;
  for (const auto& v : j.at("reflections")) out.push_back(vector_from_json(f, v));
  return out;
}

json poset_to_json(const IntervalPoset& p) {
  json elems = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json e = {{"index", i}, {"rank", p.rank[i]}, {"matrix", matrix_to_json(p.elements[i].matrix())},
              {"mov", subspace_to_json(p.moved[i])}};
    if (!p.minimal_top) e["block"] = p.block[i];
    elems.push_back(std::move(e));
  }
  json covers = json::array();
  for (const auto& [a, b] : p.covers) covers.push_back({a, b});
  json out = {{"elements", elems}, {"covers", covers}, {"size", p.size()}, {"minimal", p.minimal_top}};
  if (!p.minimal_top) {
    json blocks = json::array();
    for (const auto& w : p.block_spaces) blocks.push_back(subspace_to_json(w));
    out["blocks"] = blocks;
  }
  return out;
}

json description_to_json(const IntervalDescription& d) {
  json out = {{"type", to_string(d.type)}, {"predicate", d.predicate()}, {"mov", subspace_to_json(d.mov)}};
  if (d.singular_line) out["singular_line"] = vector_to_json(*d.singular_line);
  if (d.w) out["w"] = vector_to_json(*d.w);
  if (d.hyperplane) out["hyperplane"] = subspace_to_json(*d.hyperplane);
  return out;
}

json report_to_json(const OracleReport& r) {
  return {{"check", r.check}, {"checked", r.checked}, {"violations", r.violations}, {"witnesses", r.witnesses}};
}

json error_to_json(const Error& e) {
  return {{"error", std::string(error_code_name(e.code()))}, {"detail", std::string(e.what())}};
}

}  // namespace wallfact::io
