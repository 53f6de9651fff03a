#pragma once

#include "qea/lops.hpp"

// Single-header nlohmann/json from vendor/.
#include "json.hpp"

namespace qea {

using Json = nlohmann::json;

/// Scalar schema: {"a":{"num":[[exp,"p/q"],...],"den":[[exp,"p/q"],...]},"b":{...}}.
/// Round-trips bit-exactly (canonical forms are unique).
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const ScalarSpecPtr& spec, const Json& j);

/// NcExpr schema: [{"coeff": <scalar>, "word": ["e1","f2",...], "texp": ["p/q",...]}, ...].
Json ncexpr_to_json(const NcExpr& x);
NcExpr ncexpr_from_json(const AlgebraSpecPtr& spec, const Json& j);

/// Sparse triplet dump of a representation.
Json rep_to_json(const Representation& rep);

/// Sparse composite-index dump, 1-based indices (c, a, d, b).
Json rmatrix_to_json(const RMatrix& R);

Json dual_pair_set_to_json(const AlgebraSpecPtr& spec, const DualPairSet& dps);

Json lmatrix_to_json(const LMatrix& L);

}  // namespace qea
