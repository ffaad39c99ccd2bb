// Command-line front end: JSON in, JSON out.
//
// Exit codes: 0 success, 1 domain error (or an invalid certificate for
// `verify`), 2 malformed input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "wallfact/io.hpp"

using namespace wallfact;
using io::json;

namespace {

struct Options {
  std::string field;
  std::string form;
  std::vector<std::string> isometries;
  std::string factorization;
  std::string out;
  std::string cache;
  std::string check = "all";
  std::uint64_t cap = 0;
  std::size_t dim = 0;
  bool positive = false;
  bool describe = false;
  bool dot = false;
};

std::uint64_t resolve_cap(const Options& o, std::uint64_t fallback) {
  if (o.cap) return o.cap;
  if (const char* env = std::getenv("WALLFACT_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "WALLFACT_CAP must be a positive integer");
    }
  }
  return fallback;
}

std::optional<Field> field_override(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return io::parse_field_name(o.field);
}

SpacePtr load_space(const Options& o) {
  if (o.form.empty()) throw Error(ErrorCode::ParseError, "--form is required");
  return io::space_from_json(io::read_json_file(o.form), field_override(o));
}

Isometry load_isometry(const SpacePtr& s, const std::string& path) {
  return io::isometry_from_json(s, io::read_json_file(path));
}

Isometry single_isometry(const Options& o, const SpacePtr& s) {
  if (o.isometries.size() != 1) throw Error(ErrorCode::ParseError, "expected exactly one --isometry");
  return load_isometry(s, o.isometries.front());
}

json cmd_length(const Options& o) {
  auto s = load_space(o);
  Isometry f = single_isometry(o, s);
  if (o.positive) return {{"length", positive_reflection_length(f)}, {"positive", true}};
  return {{"length", reflection_length(f)}, {"mov_dim", moved_space(f).dim()}, {"minimal", is_minimal(f)}};
}

json cmd_factor(const Options& o) {
  auto s = load_space(o);
  Isometry f = single_isometry(o, s);
  if (o.positive) return io::factorization_to_json(positive_factorization(f), true);
  return io::factorization_to_json(minimal_factorization(f));
}

json cmd_spinor(const Options& o) {
  auto s = load_space(o);
  Isometry f = single_isometry(o, s);
  SquareClass theta = spinor_norm(f);
  json out = {{"square_class", theta.to_string()}, {"trivial", theta.is_trivial()}};
  if (s->field().is_rational()) out["positive"] = theta.is_positive();
  return out;
}

json cmd_classify(const Options& o) {
  auto s = load_space(o);
  Isometry f = single_isometry(o, s);
  HyperbolicType t = classify(f);
  const std::size_t m = moved_space(f).dim();
  return {{"type", to_string(t)}, {"mov_dim", m}, {"positive_length", hyperbolic_positive_factorization(f).length()}};
}

json cmd_leq(const Options& o) {
  auto s = load_space(o);
  if (o.isometries.size() != 2) throw Error(ErrorCode::ParseError, "leq expects --isometry g --isometry f");
  Isometry g = load_isometry(s, o.isometries[0]);
  Isometry f = load_isometry(s, o.isometries[1]);
  const bool le = o.positive ? positive_less_equal(g, f) : less_equal(g, f);
  return {{"leq", le}, {"order", o.positive ? "positive" : "reflection"}};
}

std::string cmd_interval(const Options& o) {
  auto s = load_space(o);
  Isometry f = single_isometry(o, s);
  if (o.describe) return io::description_to_json(parabolic_interval_description(f)).dump(2);
  IntervalPoset p = interval(f, resolve_cap(o, kDefaultEnumerationCap));
  if (o.dot) return p.to_dot();
  return io::poset_to_json(p).dump(2);
}

json cmd_oracle(const Options& o) {
  if (o.field.empty()) throw Error(ErrorCode::ParseError, "oracle needs --field p");
  const Field f = io::parse_field_name(o.field);
  SpacePtr s;
  if (!o.form.empty()) {
    s = load_space(o);
  } else if (o.dim > 0) {
    s = make_diagonal_space(f, std::vector<std::int64_t>(o.dim, 1));
  } else {
    throw Error(ErrorCode::ParseError, "oracle needs --form or --dim");
  }
  const std::uint64_t cap = resolve_cap(o, kDefaultGroupCap);
  std::optional<GroupCensus> cached;
  if (!o.cache.empty()) cached = load_census(s, o.cache);
  GroupCensus c = cached ? std::move(*cached) : enumerate_group(s, cap);
  if (!o.cache.empty() && !cached) save_census(c, o.cache);

  const std::set<std::string> known{"all", "length", "spinor", "wall", "intervals"};
  if (!known.count(o.check)) throw Error(ErrorCode::ParseError, "unknown --check " + o.check);
  auto wants = [&](const char* name) { return o.check == "all" || o.check == name; };

  // Exhaustive (W, chi) enumeration costs p^(n^2) matrices; only done when small.
  std::uint64_t chi_count = 1;
  for (std::size_t i = 0; i < s->dim() * s->dim() && chi_count <= 20000; ++i)
    chi_count *= static_cast<std::uint64_t>(f.characteristic());
  std::vector<OracleReport> reports;
  if (wants("length")) reports.push_back(verify_length_formula(c));
  if (wants("spinor")) reports.push_back(verify_spinor_homomorphism(c));
  if (wants("wall")) reports.push_back(verify_wall_bijection(c, chi_count <= 20000));
  if (wants("intervals")) reports.push_back(verify_intervals(c));

  json checks = json::array();
  std::uint64_t total = 0;
  for (const auto& r : reports) {
    checks.push_back(io::report_to_json(r));
    total += r.violations;
  }
  return {{"field", f.characteristic()}, {"dim", s->dim()}, {"group_order", c.size()}, {"checks", checks},
          {"violations", total}};
}

json cmd_verify(const Options& o, bool& valid) {
  auto s = load_space(o);
  Isometry f = single_isometry(o, s);
  if (o.factorization.empty()) throw Error(ErrorCode::ParseError, "verify needs --factorization");
  const json fj = io::read_json_file(o.factorization);
  const std::vector<Vector> vs = io::reflections_from_json(s->field(), fj);
  Isometry product = Isometry::identity(s);
  for (const auto& v : vs) {
    if (v.size() != s->dim()) throw Error(ErrorCode::DimensionMismatch, "reflection vector of the wrong size");
    product = product * reflection(s, v);
  }
  valid = product == f;
  if (fj.contains("length") && fj.at("length") != vs.size()) valid = false;
  json out = {{"valid", valid}, {"length", vs.size()}};
  if (s->field().is_rational()) {
    bool all_positive = true;
    for (const auto& v : vs) all_positive = all_positive && s->q(v).sign() > 0;
    out["all_positive"] = all_positive;
    if (fj.value("positive", false) && !all_positive) valid = false;
    out["valid"] = valid;
  }
  return out;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + o.out);
  out << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflection factorizations in orthogonal groups"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool isometry) {
    sub->add_option("--field", o.field, "rational, Q, or an odd prime (overrides the form file)");
    sub->add_option("--form", o.form, "space JSON file");
    if (isometry) sub->add_option("--isometry", o.isometries, "isometry JSON file")->required();
    sub->add_option("--out", o.out, "write the result here instead of stdout");
  };

  auto* length = app.add_subcommand("length", "reflection length");
  common(length, true);
  length->add_flag("--positive", o.positive, "positive reflection length");
  auto* factor = app.add_subcommand("factor", "minimal reflection factorization");
  common(factor, true);
  factor->add_flag("--positive", o.positive, "factor into positive reflections (over Q)");
  auto* spinor = app.add_subcommand("spinor", "spinor norm");
  common(spinor, true);
  auto* cls = app.add_subcommand("classify", "elliptic / parabolic / hyperbolic");
  common(cls, true);
  auto* leq = app.add_subcommand("leq", "g <= f; pass --isometry g --isometry f");
  common(leq, true);
  leq->add_flag("--positive", o.positive, "use the positive reflection order");
  auto* iv = app.add_subcommand("interval", "the interval [id, f]");
  common(iv, true);
  iv->add_flag("--describe", o.describe, "simplified description (Lorentz spaces)");
  iv->add_flag("--dot", o.dot, "Hasse diagram in DOT format");
  iv->add_option("--cap", o.cap, "enumeration cap");
  auto* oracle = app.add_subcommand("oracle", "brute-force theorem checks over F_p");
  common(oracle, false);
  oracle->add_option("--dim", o.dim, "use diag(1, ..., 1) of this dimension");
  oracle->add_option("--check", o.check, "all | length | spinor | wall | intervals");
  oracle->add_option("--cap", o.cap, "group size cap");
  oracle->add_option("--cache", o.cache, "census cache directory");
  auto* verify = app.add_subcommand("verify", "check a factorization certificate");
  common(verify, true);
  verify->add_option("--factorization", o.factorization, "factorization JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << json{{"error", "ParseError"}, {"detail", e.what()}}.dump(2) << "\n";
    return 2;
  }

  try {
    bool valid = true;
    std::string text;
    if (*length) text = cmd_length(o).dump(2);
    else if (*factor) text = cmd_factor(o).dump(2);
    else if (*spinor) text = cmd_spinor(o).dump(2);
    else if (*cls) text = cmd_classify(o).dump(2);
    else if (*leq) text = cmd_leq(o).dump(2);
    else if (*iv) text = cmd_interval(o);
    else if (*oracle) text = cmd_oracle(o).dump(2);
    else if (*verify) text = cmd_verify(o, valid).dump(2);
    emit(o, text);
    return valid ? 0 : 1;
  } catch (const Error& e) {
    std::cout << io::error_to_json(e).dump(2) << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  }
}
