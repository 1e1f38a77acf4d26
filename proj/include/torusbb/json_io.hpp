#pragma once

#include <json.hpp>

#include "torusbb/graded_algebra.hpp"
#include "torusbb/hilb_cells.hpp"
#include "torusbb/lattice_monoid.hpp"

// JSON schemas for the library types. Integers are written as decimal
// strings; readers accept either strings or JSON integers.
namespace torusbb::json_io {

using Json = nlohmann::ordered_json;

Integer read_integer(const Json& j, const char* what);
std::size_t read_size(const Json& j, const char* what);
IntVector read_vector(const Json& j, const char* what);

Json write(const Integer& value);
Json write(std::uint64_t value);
Json write(const IntVector& v);
Json write(const IntMatrix& m);

/// {"rank": n, "generators": [[...], ...]}
AffineMonoid read_monoid(const Json& j);
Json write(const AffineMonoid& s);
Json write(const LatticeProjection& p);

/// {"torus_rank": n, "variables": [{"name": "x", "weight": [..]}, ...]}
VariableWeighting read_weighting(const Json& j);
void write_weighting(Json& out, const VariableWeighting& w);

/// Weighting plus "relations": ["x*y - z^2", ...].
GradedPresentation read_presentation(const Json& j);
Json write(const GradedPresentation& p);

/// Weighting plus "monomial_generators": ["x^2", ...].
MonomialQuotient read_quotient(const Json& j);
Json write(const MonomialQuotient& q);

/// Sorted [[d1, d2, multiplicity], ...].
Json write(const hilb::BigradedCharacter& c);
Json write(const hilb::Partition& p);

}  // namespace torusbb::json_io
