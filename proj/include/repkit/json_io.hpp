#pragma once

#include <variant>

#include <json.hpp>

#include "repkit/cocycle.hpp"
#include "repkit/rep.hpp"
#include "repkit/so44.hpp"

namespace repkit {

// ordered_json keeps key order stable, which the byte-identical-output
// guarantee of the CLI relies on
using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Json scalar_to_json(const CD& s);

/// Parses either the exact form ({"re":"p/q","im":"p/q"} or
/// {"root":{"N":n,"k":k},"coef":...}) or the float form {"re":x,"im":y}.
std::variant<Scalar, CD> scalar_from_json(const Json& j);

Json matrix_to_json(const CMat& m);
Json matrix_to_json(const FMat& m);
std::variant<CMat, FMat> matrix_from_json(const Json& j);

Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j);

Json rep_to_json(const MatrixRep& rho);
Json rep_to_json(const FloatRep& rho);
std::variant<MatrixRep, FloatRep> rep_from_json(const Json& j, double tol = 1e-9);

Json table_to_json(const CocycleTable& t);
CocycleTable table_from_json(const Json& j);

Json report_to_json(const DecompositionReport<Scalar>& r);
Json report_to_json(const DecompositionReport<CD>& r);

Json structure_constants_to_json(const LieAlgebraBasis& alg);

/// Plain-text rendering of a JSON report (the text output format of the CLI).
std::string render_text(const Json& j);

} // namespace repkit
