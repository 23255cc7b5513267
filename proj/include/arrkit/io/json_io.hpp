#pragma once

#include <string>

#include "json.hpp"

#include "arrkit/accuracy/accuracy.hpp"
#include "arrkit/arrangement/arrangement.hpp"
#include "arrkit/exactmath/int_poly.hpp"
#include "arrkit/graphic/graph.hpp"
#include "arrkit/matfree/mat.hpp"
#include "arrkit/rootsys/root_system.hpp"

namespace arrkit {

// nlohmann::json keeps object keys sorted, so dumps are canonical.
using Json = nlohmann::json;

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

// {"dim", "field", "hyperplanes": [[scalar strings]]}. Scalars use the
// Scalar::to_string syntax ("1/2", "z^2 + 1" with z the root of unity).
Json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);

// A flat as the rows of its canonical echelon form.
Json flat_to_json(const Flat& x);
Flat flat_from_json(const Arrangement& a, const Json& j);

// Integer coefficients, constant term first.
Json poly_to_json(const IntPoly& p);

Json certificate_to_json(const MatCertificate& c);
Json report_to_json(const AccuracyReport& r);

// {"n", "edges": [[u, v], ...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"type": "B3", "generators": [[simple coefficients], ...]} closed
// downward, or {"type": ..., "roots": [...]} given explicitly; roots may be
// coefficient vectors or indices into the positive roots.
Ideal ideal_from_json(const RootSystem& rs, const Json& j);
Json ideal_to_json(const RootSystem& rs, const Ideal& ideal);

// Two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace arrkit
