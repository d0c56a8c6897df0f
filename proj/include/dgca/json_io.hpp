#pragma once

#include <string>

#include "json.hpp"

#include "dgca/cohomology.hpp"
#include "dgca/coeff_matrix.hpp"
#include "dgca/isomorphism.hpp"
#include "dgca/orbits.hpp"

namespace dgca {

using Json = nlohmann::ordered_json;

/// Matrix document: {"dim": n, "entries": [{"i":, "j":, "value": "p/q"}...]}
/// with i <= j and canonical rational strings; entries in level order.
Json matrix_to_json(const CoeffMatrix& c);

/// Parses and validates a matrix document.
CoeffMatrix matrix_from_json(const Json& doc);

CoeffMatrix load_matrix_file(const std::string& path);

Json pattern_to_json(const SupportPattern& p);

Json iso_to_json(const IsoDecision& d);
Json rigidity_to_json(const RigidityReport& r);
Json aut_to_json(const AutDescription& a);
Json graph_to_json(const GradedGraph& g);
Json cocycle_space_to_json(const CocycleSpace& s);
Json extension_report_to_json(const ExtensionClassReport& r);

/// DOT rendering: contractible components get bold vertex labels and dashed
/// edges; ratio edges are labelled with their coefficient pair.
std::string graph_to_dot(const GradedGraph& g);

}  // namespace dgca
