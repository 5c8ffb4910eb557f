#pragma once

#include "tropolax/constraints.hpp"
#include "tropolax/lax.hpp"
#include "tropolax/matrix.hpp"
#include "tropolax/potential.hpp"

#include <json.hpp>

#include <string>

namespace tropolax {

using json = nlohmann::json;

// Potential wire format: {"support_lo": int, "values": ["p/q", ...]},
// rationals as reduced "p/q" or plain integer strings. Parsing throws
// std::invalid_argument on malformed input.
json potential_to_json(const Potential& u);
Potential potential_from_json(const json& j);
Potential load_potential(const std::string& path);

// Matrix wire format: {"offset": int, "entries": [["p/q"|null, ...], ...]}
// with null for bottom.
json matrix_to_json(const MaxPlusMatrix& a);
MaxPlusMatrix matrix_from_json(const json& j);

json eigenseq_to_json(const EigenSeq& phi);
json soliton_to_json(const Soliton& s);
json critical_graph_to_json(const CriticalGraph& g);
json report_to_json(const ConstraintReport& r);

// Deterministic serialization: keys in fixed (sorted) order, rationals in
// canonical reduced form.
std::string dump_json(const json& j);

}  // namespace tropolax
