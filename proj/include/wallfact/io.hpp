#pragma once

// JSON encodings. Scalars: rationals as "p/q" strings (plain integers are
// also accepted on input), F_p elements as integers. Fields:
// {"field": "rational"} or {"field": "prime", "p": 5}. A space file is a
// field spec plus "form": any square matrix M, read as S = (M + M^T)/2.
// Parse failures throw Error(ParseError).

#include <optional>
#include <string>

#include <json.hpp>

#include "wallfact/hyperbolic.hpp"
#include "wallfact/oracle.hpp"

namespace wallfact::io {

using json = nlohmann::json;

json read_json_file(const std::string& path);
json parse_json(const std::string& text);

/// "rational", "Q", or a prime given as a string.
Field parse_field_name(const std::string& name);
Field field_from_json(const json& j);
json field_to_json(const Field& f);

Scalar scalar_from_json(const Field& f, const json& j);
json scalar_to_json(const Scalar& s);
Vector vector_from_json(const Field& f, const json& j);
json vector_to_json(const Vector& v);
Matrix matrix_from_json(const Field& f, const json& j);
json matrix_to_json(const Matrix& m);

/// `field` overrides (or supplies) the field of the file.
SpacePtr space_from_json(const json& j, std::optional<Field> field = std::nullopt);
json space_to_json(const QuadraticSpace& s);

Isometry isometry_from_json(const SpacePtr& space, const json& j);
json isometry_to_json(const Isometry& f);

json wall_to_json(const WallData& wd);

/// {"length": k, "reflections": [...]} with projectively normalized vectors,
/// plus {"positive": true} when requested.
json factorization_to_json(const Factorization& fac, bool positive = false);
/// The reflection vectors of a factorization file.
std::vector<Vector> reflections_from_json(const Field& f, const json& j);

json poset_to_json(const IntervalPoset& p);
json description_to_json(const IntervalDescription& d);
json report_to_json(const OracleReport& r);
json error_to_json(const Error& e);

}  // namespace wallfact::io
