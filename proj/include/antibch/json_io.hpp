#pragma once

#include <json.hpp>

#include "antibch/classifier.hpp"
#include "antibch/cyclic_code.hpp"
#include "antibch/designs.hpp"
#include "antibch/field.hpp"
#include "antibch/moebius.hpp"
#include "antibch/poly.hpp"
#include "antibch/weights.hpp"

namespace antibch {

using Json = nlohmann::json;

// {"p", "degree", "modulus"}
Json field_to_json(const GaloisField& f);
FieldPtr field_from_json(const Json& j);

// Array of element serials, lowest degree first.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const GaloisField& f, const Json& j);

// {"q", "n", "delta", "h", "dimension", "generator", "defining_set"};
// delta and h are null for codes not built as BCH codes.
Json code_to_json(const CyclicCode& c);

// Array of decimal strings.
Json weights_to_json(const WeightDistribution& w);
WeightDistribution weights_from_json(const Json& j);

// {"a", "b", "c", "d"} of the normalized matrix.
Json projmap_to_json(const ProjMap& g);
ProjMap projmap_from_json(const GaloisField& f, const Json& j);

// {"v", "t", "k", "lambda", "blocks"}
Json design_to_json(const IncidenceStructure& d, const DesignCertificate& cert);
IncidenceStructure design_from_json(const Json& j);

Json classification_to_json(const ClassificationReport& r);

}  // namespace antibch
