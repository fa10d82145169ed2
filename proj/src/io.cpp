#include "girth6/io.hpp"

namespace girth6 {

PlaneGraph graph_from_json(const json& j) {
    try {
        std::vector<Vertex> vs = j.at("vertices").get<std::vector<Vertex>>();
        std::map<Vertex, std::vector<Vertex>> rot;
        for (const auto& [key, val] : j.at("rotation").items())
            rot[std::stoi(key)] = val.get<std::vector<Vertex>>();
        std::optional<std::vector<Vertex>> outer;
        if (j.contains("outer_face")) outer = j.at("outer_face").get<std::vector<Vertex>>();
        if (rot.size() != vs.size()) throw ParseError("rotation must cover every vertex");
        return PlaneGraph::from_rotation(vs, rot, outer);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad graph file: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("bad graph file: rotation keys must be integers");
    }
}

PlaneGraph graph_from_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("graph file is not valid JSON");
    return graph_from_json(j);
}

json graph_to_json(const PlaneGraph& g) {
    json rot = json::object();
    for (Vertex v : g.vertices()) rot[std::to_string(v)] = g.neighbors(v);
    json out{{"vertices", g.vertices()}, {"rotation", rot}};
    if (g.outer_face_id() >= 0)
        out["outer_face"] = canonical_cycle(g.face(g.outer_face_id()).vertex_walk());
    return out;
}

ListAssignment lists_from_json(const json& j) {
    try {
        ListAssignment L;
        for (const auto& [key, val] : j.at("lists").items()) {
            std::set<Color> s;
            for (const auto& c : val) s.insert(c.get<Color>());
            L.lists[std::stoi(key)] = std::move(s);
        }
        return L;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad list file: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("bad list file: keys must be integers");
    }
}

json lists_to_json(const ListAssignment& L) {
    json lists = json::object();
    for (const auto& [v, s] : L.lists) lists[std::to_string(v)] = s;
    return json{{"lists", lists}};
}

WeightedRequest request_from_json(const json& j, const ListAssignment& L) {
    try {
        WeightedRequest w;
        if (j.contains("requests")) {
            std::map<Vertex, Color> r;
            for (const auto& [key, val] : j.at("requests").items())
                r[std::stoi(key)] = val.get<Color>();
            w = WeightedRequest::from_request(r);
        } else if (j.contains("weighted")) {
            for (const auto& item : j.at("weighted")) {
                Vertex v = item.at("v").get<Vertex>();
                Color c = item.at("c").get<Color>();
                Rational weight = item.at("w").is_string()
                                      ? Rational::parse(item.at("w").get<std::string>())
                                      : Rational(item.at("w").get<long long>());
                w.weights[{v, c}] += weight;
            }
        } else {
            throw ParseError("request file needs a 'requests' or 'weighted' key");
        }
        w.validate_against(L);
        return w;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad request file: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("bad request file: keys must be integers");
    }
}

json coloring_to_json(const Coloring& c) {
    json out = json::object();
    for (const auto& [v, col] : c.colors) out[std::to_string(v)] = col;
    return out;
}

json certificate_to_json(const ReducibleCertificate& cert) {
    return json{{"kind", to_string(cert.kind)},
                {"vertices", cert.subgraph.verts},
                {"size", cert.subgraph_size},
                {"checked_fix", cert.checked_fix},
                {"degree_slack_ok", cert.degree_slack_ok},
                {"evidence", cert.evidence}};
}

json hit_to_json(const ConfigurationHit& hit) {
    json paths = json::array();
    for (const auto& p : hit.paths) paths.push_back(p);
    return json{{"family", to_string(hit.family)},
                {"vertices", hit.subgraph.verts},
                {"anchor_vertices", hit.anchor_vertices},
                {"anchor_faces", hit.anchor_faces},
                {"paths", paths},
                {"size_bound", hit.size_bound_claimed}};
}

json ledger_to_json(const ChargeLedger& led) {
    json initial = json::object(), final_ = json::object();
    for (const auto& [e, ch] : led.initial) initial[e.str()] = ch.str();
    for (const auto& [e, ch] : led.final_charge) final_[e.str()] = ch.str();
    json transfers = json::array();
    for (const Transfer& t : led.transfers) {
        json item{{"rule", to_string(t.rule)},
                  {"sender", t.sender.str()},
                  {"receiver", t.receiver},
                  {"amount", t.amount},
                  {"path", t.path}};
        if (t.through_edge)
            item["through_edge"] = std::vector<Vertex>{t.through_edge->first,
                                                       t.through_edge->second};
        transfers.push_back(std::move(item));
    }
    json z;
    switch (led.z.kind) {
        case ZMarker::Kind::SingleVertex: z = json{{"kind", "vertex"}, {"vertex", led.z.verts[0]}}; break;
        case ZMarker::Kind::SixCycle: z = json{{"kind", "six-cycle"}, {"cycle", led.z.verts}}; break;
        case ZMarker::Kind::Empty: z = json{{"kind", "empty"}}; break;
    }
    return json{{"z", z},
                {"delta", led.delta},
                {"initial", initial},
                {"transfers", transfers},
                {"final", final_},
                {"sum_initial", led.sum_initial().str()},
                {"sum_final", led.sum_final().str()}};
}

json audit_to_json(const AuditVerdict& verdict, const PlaneGraph& g) {
    json out{{"ledger", ledger_to_json(verdict.ledger)}};
    if (verdict.all_nonnegative) {
        out["outcome"] = "all-nonnegative";
        if (verdict.positive_witness) out["positive_witness"] = verdict.positive_witness->str();
    } else {
        out["outcome"] = "negative-entity";
        out["negative_entity"] = verdict.negative_entity->str();
        out["negative_charge"] = verdict.negative_charge->str();
        if (verdict.extracted) out["certificate"] = certificate_to_json(*verdict.extracted);
        out["extraction_failed"] = verdict.extraction_failed;
        if (verdict.extraction_failed) out["extraction_error"] = verdict.extraction_error;
    }
    json violations = json::array();
    for (const auto& v : face_charge_bound_check(verdict.ledger, g, verdict.ledger.z))
        violations.push_back(json{{"face", v.face_id},
                                  {"final", v.final_charge.str()},
                                  {"bound", v.bound.str()}});
    out["face_bound_violations"] = violations;
    return out;
}

json epsilon_to_json(const EpsilonReport& report) {
    json out = json::object();
    if (report.weighted) {
        const EpsilonWeighted& w = *report.weighted;
        json dist = json::array();
        for (const auto& [coloring, prob] : w.witness_distribution)
            dist.push_back(json{{"coloring", coloring_to_json(coloring)}, {"prob", prob.str()}});
        json duals = json::array();
        for (const auto& [pair, weight] : w.dual_weights)
            duals.push_back(
                json{{"v", pair.first}, {"c", pair.second}, {"w", weight.str()}});
        out["weighted"] = json{{"eps", w.eps.str()},
                               {"gap", w.gap.str()},
                               {"witness_distribution", dist},
                               {"worst_pair", json{{"v", w.worst_pair.first},
                                                   {"c", w.worst_pair.second}}},
                               {"dual_weights", duals},
                               {"coloring_count", w.coloring_count}};
    }
    if (report.unweighted) {
        const EpsilonUnweighted& u = *report.unweighted;
        json req = json::object();
        for (const auto& [v, c] : u.worst_request) req[std::to_string(v)] = c;
        out["unweighted"] = json{{"eps", u.eps.str()},
                                 {"worst_request", req},
                                 {"request_count", u.request_count},
                                 {"coloring_count", u.coloring_count}};
    }
    json unreal = json::array();
    for (const auto& [v, c] : report.unrealizable) unreal.push_back(json{{"v", v}, {"c", c}});
    out["unrealizable_pairs"] = unreal;
    return out;
}

}  // namespace girth6
