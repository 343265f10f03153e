#include "vlat/json_io.hpp"

#include "vlat/error.hpp"

namespace vlat {

Json to_json(const Scalar& s) { return format_scalar(s); }

Json to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(format_scalar(x));
  return j;
}

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

Json to_json(const LatticeSpace& space) {
  Json j{{"dim", space.dim()}, {"basis", to_json(space.cone().basis())}};
  if (!space.label().empty()) j["label"] = space.label();
  return j;
}

Json to_json(const RegularOperator& op) {
  return Json{{"space", to_json(op.space())}, {"matrix", to_json(op.matrix())}};
}

Json to_json(const DiagonalPart& d) {
  Json j{{"alpha_vector", to_json(d.alpha_vector)}, {"is_scalar", d.is_scalar}};
  j["alpha"] = d.alpha ? to_json(*d.alpha) : Json(nullptr);
  return j;
}

Json to_json(const OperatorNorm& norm) {
  Json j{{"value", norm.value}, {"method", norm.method}};
  if (norm.exact) j["exact"] = to_json(*norm.exact);
  if (norm.method == "power-iteration") {
    j["iterations"] = norm.iterations;
    j["tolerance"] = norm.tolerance;
  } else if (norm.method == "svd") {
    j["tolerance"] = norm.tolerance;
  }
  return j;
}

Json to_json(const Certificate& cert) {
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses) {
    witnesses.push_back(Json{{"functional", w.functional},
                             {"value", to_json(w.value)},
                             {"test", w.test},
                             {"bound", w.bound == WitnessBound::AtLeastZero ? ">=0" : "<=0"}});
  }
  Json j{{"claim", cert.claim}, {"holds", cert.holds}, {"witnesses", witnesses}};
  if (!cert.failures.empty()) j["failures"] = cert.failures;
  return j;
}

Json to_json(const Partition& p) {
  Json j = Json::array();
  for (const auto& block : p.blocks) {
    Json b = Json::array();
    for (auto i : block) b.push_back(i + 1);
    j.push_back(b);
  }
  return j;
}

namespace {

Json optional_scalar(const std::optional<Scalar>& s) { return s ? to_json(*s) : Json(nullptr); }

Json index_list(const std::vector<std::size_t>& idx) {
  Json j = Json::array();
  for (auto i : idx) j.push_back(i + 1);
  return j;
}

}  // namespace

Json to_json(const ProjectionReport& r) {
  Json j{{"dim", r.dim},
         {"is_positive", r.is_positive},
         {"is_idempotent", r.is_idempotent},
         {"alpha_vector", to_json(r.alpha_vector)},
         {"alpha", optional_scalar(r.alpha)},
         {"rank", r.rank},
         {"trace", to_json(r.trace)},
         {"divides_dim", r.divides_dim},
         {"violations", r.violations}};
  j["wickstead_m"] = r.wickstead_m ? Json(*r.wickstead_m) : Json(nullptr);
  return j;
}

Json to_json(const StructureReport& r) {
  Json rows = Json::array();
  for (std::size_t t = 0; t < r.j_sets.size(); ++t) {
    Json lambda = Json::object();
    for (const auto& [s, value] : r.lambda[t]) lambda[std::to_string(s + 1)] = to_json(value);
    rows.push_back(Json{{"t", t + 1},
                        {"J", index_list(r.j_sets[t])},
                        {"lambda", lambda},
                        {"row_sum", to_json(r.row_sums[t])}});
  }
  return Json{{"alpha", to_json(r.alpha)},
              {"rows", rows},
              {"partition", to_json(r.partition)},
              {"violations", r.violations}};
}

Json to_json(const LatticeAlgebra& a) {
  Json structure = Json::array();
  for (const auto& row : a.structure()) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(to_json(c));
    structure.push_back(r);
  }
  return Json{{"space", to_json(a.space())},
              {"structure", structure},
              {"unit", a.unit() ? to_json(*a.unit()) : Json(nullptr)}};
}

Json to_json(const PoisonVerdict& v) {
  Json log = Json::array();
  for (const auto& [name, holds] : v.hypothesis_log) log.push_back(Json{{"hypothesis", name}, {"holds", holds}});
  return Json{{"alpha", to_json(v.alpha)},
              {"classification", std::string(to_string(v.classification))},
              {"hypothesis_log", log},
              {"decomposition",
               Json{{"alpha", to_json(v.alpha)},
                    {"band_part", to_json(v.band_part)},
                    {"x", to_json(v.disjoint_part)}}}};
}

Json to_json(const SearchResult& r) {
  return Json{{"best_residual", r.best_residual},
              {"best_matrix", r.best_matrix},
              {"restarts_run", r.restarts_run}};
}

Json to_json(const SweepSummary& s) {
  Json violations = Json::array();
  for (const auto& rec : s.violations) {
    violations.push_back(Json{{"seed", rec.seed},
                              {"n", rec.n},
                              {"family", std::string(to_string(rec.family))},
                              {"report", to_json(rec.report)}});
  }
  return Json{{"instances", s.instances},
              {"constant_diagonal", s.constant_diagonal},
              {"zero_alpha", s.zero_alpha},
              {"alpha_histogram", s.alpha_histogram},
              {"violations", violations}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return parse_scalar(j.dump());
  throw Error(ErrorCode::ParseError, "rational must be a \"p/q\" string or an integer, got " + j.dump());
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "vector must be an array");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "matrix must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  try {
    return Matrix::from_rows(rows);
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, "ragged matrix");
  }
}

LatticeSpace space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis")) throw Error(ErrorCode::ParseError, "space needs a basis");
  Matrix basis = matrix_from_json(j.at("basis"));
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != basis.rows())
    throw Error(ErrorCode::DimensionMismatch, "dim does not match basis");
  return make_space(basis, j.value("label", std::string{}));
}

RegularOperator operator_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "operator must be an object");
  if (!j.contains("matrix")) {
    if (j.contains("operator")) return operator_from_json(j.at("operator"));
    if (j.contains("results") && j.at("results").is_object() && j.at("results").contains("operator"))
      return operator_from_json(j.at("results").at("operator"));
    throw Error(ErrorCode::ParseError, "operator needs a matrix");
  }
  Matrix m = matrix_from_json(j.at("matrix"));
  if (j.contains("space")) return RegularOperator(space_from_json(j.at("space")), std::move(m));
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "operator matrix must be square");
  return RegularOperator::standard(std::move(m));
}

LatticeAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("structure"))
    throw Error(ErrorCode::ParseError, "algebra needs space and structure");
  std::vector<std::vector<Vector>> structure;
  for (const auto& row : j.at("structure")) {
    std::vector<Vector> r;
    for (const auto& c : row) r.push_back(vector_from_json(c));
    structure.push_back(std::move(r));
  }
  std::optional<Vector> unit;
  if (j.contains("unit") && !j.at("unit").is_null()) unit = vector_from_json(j.at("unit"));
  return LatticeAlgebra(space_from_json(j.at("space")), std::move(structure), std::move(unit));
}

}  // namespace vlat
