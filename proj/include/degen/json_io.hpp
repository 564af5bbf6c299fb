#pragma once

#include <json.hpp>

#include "degen/cone.hpp"
#include "degen/fan.hpp"
#include "degen/linalg.hpp"
#include "degen/polyhedron.hpp"
#include "degen/stabilizer.hpp"

namespace degen {

using Json = nlohmann::json;

// Rationals are strings "p/q" (or "p"); integers are strings.  Parsers throw
// std::invalid_argument on malformed input.
Json to_json(const Rational& q);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const RatMatrix& m);  // {"rows","cols","entries"}, row-major
Json to_json(const Cone& c);       // {"ambient_rank","rays","lineality","facets"}
// {"ambient_rank","vertices","recession"} plus "facets" when with_facets is set.
Json to_json(const LatticePolyhedron& p, bool with_facets = false);
Json to_json(const Fan& f);
Json to_json(const FiniteAbelianGroup& g);  // {"invariant_factors":[...]}
Json to_json(const CycleConfiguration& c);
Json to_json(const UnitValue& u);

Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);
RatMatrix matrix_from_json(const Json& j);
Cone cone_from_json(const Json& j);
LatticePolyhedron polyhedron_from_json(const Json& j);
CycleConfiguration configuration_from_json(const Json& j);

}  // namespace degen
