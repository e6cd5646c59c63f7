#pragma once

#include <json.hpp>

#include "monoclosure/certificate.hpp"
#include "monoclosure/closures.hpp"
#include "monoclosure/monomial.hpp"
#include "monoclosure/polyhedra.hpp"
#include "monoclosure/structure.hpp"

namespace monoclosure {

using Json = nlohmann::ordered_json;

// Field order of every emitted object is fixed as written here. Rationals are
// strings "p/q" (or "p" when integral); exponents are bare integers.

/// {"vars": [...], "gens": [[...], ...]}
Json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

Json exponent_to_json(const ExponentVector& a);
ExponentVector exponent_from_json(const nlohmann::json& j);

/// {"w": [...], "c": "p/q"}
Json facet_to_json(const Facet& f);
/// {"vpoints": [...], "facets": [...]}
Json newton_to_json(const NewtonPolyhedron& np);

/// [["const", c], ["t1", [[k, coeff], ...]], ...] with k and coeff as strings;
/// only nonzero coefficients are listed.
Json ring_element_to_json(const AxesRingElement& e);
AxesRingElement ring_element_from_json(const nlohmann::json& j, GluedRingSpec spec);

/// {"ideal", "element", "branches", "truncation", "images"}
Json certificate_to_json(const ExclusionCertificate& c);
ExclusionCertificate certificate_from_json(const nlohmann::json& j);

Json decomposition_to_json(const StructureDecomposition& d, const std::vector<std::string>& vars);

/// Parses JSON text; InputError on malformed input.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace monoclosure
