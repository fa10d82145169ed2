#pragma once

#include <string>

#include "girth6/coloring.hpp"
#include "girth6/configurations.hpp"
#include "girth6/discharging.hpp"
#include "girth6/flexibility.hpp"
#include "girth6/plane_graph.hpp"
#include "girth6/reducibility.hpp"

#include "json.hpp"

namespace girth6 {

using json = nlohmann::json;

// graph file: {"vertices":[...], "rotation":{"0":[...]}, "outer_face":[...]?}
PlaneGraph graph_from_json(const json& j);
PlaneGraph graph_from_string(const std::string& text);
json graph_to_json(const PlaneGraph& g);

// list file: {"lists":{"0":[1,2,3], ...}}
ListAssignment lists_from_json(const json& j);
json lists_to_json(const ListAssignment& L);

// request file: {"requests":{"0":1,...}} or
// {"weighted":[{"v":0,"c":1,"w":"3/2"},...]}
WeightedRequest request_from_json(const json& j, const ListAssignment& L);

json coloring_to_json(const Coloring& c);
json certificate_to_json(const ReducibleCertificate& cert);
json hit_to_json(const ConfigurationHit& hit);
json ledger_to_json(const ChargeLedger& led);
json audit_to_json(const AuditVerdict& verdict, const PlaneGraph& g);
json epsilon_to_json(const EpsilonReport& report);

}  // namespace girth6
