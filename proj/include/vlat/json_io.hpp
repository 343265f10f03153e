#pragma once

// JSON forms of the library's values. Rationals are "p/q" strings (integers
// drop the "/1"); matrices are arrays of rows; a space's basis is row-major
// with the cone generators as its columns. Indices in partitions are 1-based.

#include "json.hpp"

#include "vlat/algebra_rep.hpp"
#include "vlat/certify.hpp"
#include "vlat/projection_lab.hpp"

namespace vlat {

using Json = nlohmann::json;

Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const LatticeSpace& space);
Json to_json(const RegularOperator& op);
Json to_json(const DiagonalPart& d);
Json to_json(const OperatorNorm& norm);
Json to_json(const Certificate& cert);
Json to_json(const Partition& p);
Json to_json(const ProjectionReport& r);
Json to_json(const StructureReport& r);
Json to_json(const LatticeAlgebra& a);
Json to_json(const PoisonVerdict& v);
Json to_json(const SearchResult& r);
Json to_json(const SweepSummary& s);

/// Accepts "p/q" strings and JSON integers. Throws Error{ParseError}.
Scalar scalar_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
LatticeSpace space_from_json(const Json& j);

/// Accepts an operator object, or any object whose "operator" or
/// "results.operator" member is one (so reports can be fed back in). A
/// missing "space" means the standard lattice.
RegularOperator operator_from_json(const Json& j);
LatticeAlgebra algebra_from_json(const Json& j);

}  // namespace vlat
