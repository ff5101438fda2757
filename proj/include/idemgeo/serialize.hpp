#pragma once

#include <string>

#include "json.hpp"

#include "idemgeo/class_two.hpp"
#include "idemgeo/delta_sets.hpp"
#include "idemgeo/transport.hpp"

namespace idemgeo {

using Json = nlohmann::ordered_json;

/// {"kind":"Q"} or {"kind":"Fp","p":5}.
Json domain_to_json(const ScalarDomain& domain);
ScalarDomain domain_from_json(const Json& j);

/// "num/den" for rationals, decimal residue for F_p.
Json scalar_to_json(const Scalar& x);
/// Accepts strings ("3", "-1/2") and JSON integers.
Scalar scalar_from_json(const ScalarDomain& domain, const Json& j);

/// {"domain":..., "rows":[["1/1","0/1"],...]}.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
/// Row-major array of arrays of entries (strings or integers), no header.
Matrix matrix_from_rows_json(const ScalarDomain& domain, const Json& rows);
/// Parses "[[1,1],[0,1]]" (entries may be quoted, e.g. "1/2"); throws ParseError.
Matrix parse_matrix_literal(const ScalarDomain& domain, const std::string& text);

/// List of basis column vectors.
Json ideal_to_json(const RightIdeal& ideal);
Json delta_to_json(const DeltaSet& d);
/// {"n":..., "e":..., "g":..., "f":..., "k":...}.
Json frame_to_json(const NilpotentFrame& frame);
Json iso_to_json(const IsoSpec& f);
Json theorem_c_to_json(const TheoremC& c);

}  // namespace idemgeo
