// girth6: plane-graph discharging and list-coloring flexibility toolkit.
//
// JSON results go to stdout, human-readable summaries to stderr.
// Exit codes: 0 success, 2 refusal (bad input, budget or cap), 3 theorem
// violation diagnostic.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "girth6/corpus.hpp"
#include "girth6/discharging.hpp"
#include "girth6/flexibility.hpp"
#include "girth6/io.hpp"

using namespace girth6;

namespace {

struct Settings {
    long long brute_budget = kDefaultNodeBudget;
    long long coloring_cap = 10000;
    std::string tolerance = "0";
};

// tiny INI-style config: [section] lines and key = value pairs
Settings load_settings(const std::string& config_path) {
    Settings s;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in.good()) throw ParseError("cannot read config file " + config_path);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto trim = [](std::string t) {
                t.erase(0, t.find_first_not_of(" \t"));
                auto last = t.find_last_not_of(" \t\r");
                t.erase(last == std::string::npos ? 0 : last + 1);
                return t;
            };
            std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
            if (key == "brute_force_budget") s.brute_budget = std::stoll(val);
            else if (key == "coloring_cap") s.coloring_cap = std::stoll(val);
            else if (key == "tolerance") s.tolerance = val;
        }
    }
    if (const char* env = std::getenv("GIRTH6_BUDGET")) s.brute_budget = std::atoll(env);
    return s;
}

PlaneGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw ParseError("cannot read graph file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_string(buf.str());
}

ListAssignment load_lists(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw ParseError("cannot read list file " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("list file is not valid JSON");
    return lists_from_json(j);
}

void emit(const json& j, const std::string& summary) {
    std::cout << j.dump(2) << "\n";
    std::cerr << summary << "\n";
}

void write_or_print(const json& j, const std::string& out_path, const std::string& summary) {
    if (out_path.empty()) {
        emit(j, summary);
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
        std::cerr << summary << " -> " << out_path << "\n";
    }
}

std::vector<Vertex> parse_vertex_list(const std::string& csv) {
    std::vector<Vertex> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

ZMarker parse_z(const PlaneGraph& g, int z_vertex, const std::string& z_cycle) {
    if (!z_cycle.empty()) return ZMarker::six_cycle(g, parse_vertex_list(z_cycle));
    if (z_vertex >= 0) return ZMarker::single(z_vertex);
    throw ParseError("either --z or --z-cycle is required");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"girth6: discharging and flexibility toolkit for plane graphs"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "INI-style config with budgets and caps");

    // validate
    auto* validate = app.add_subcommand("validate", "check a graph file and report basics");
    std::string validate_graph;
    validate->add_option("graph", validate_graph)->required();

    // gen
    auto* gen = app.add_subcommand("gen", "generate corpus graphs");
    gen->require_subcommand(1);
    auto* gen_honey = gen->add_subcommand("honeycomb", "hexagonal-lattice patch");
    int rows = 1, cols = 1;
    std::string gen_out;
    gen_honey->add_option("--rows", rows)->required();
    gen_honey->add_option("--cols", cols)->required();
    gen_honey->add_option("-o,--out", gen_out);
    auto* gen_sub = gen->add_subcommand("subdivided", "subdivided random planar graph");
    std::uint64_t seed = 1;
    int base_n = 8;
    gen_sub->add_option("--seed", seed)->required();
    gen_sub->add_option("--n", base_n)->required();
    gen_sub->add_option("-o,--out", gen_out);
    auto* gen_fix = gen->add_subcommand("fixture", "named fixture");
    std::string fixture_name;
    gen_fix->add_option("name", fixture_name)->required();
    gen_fix->add_option("-o,--out", gen_out);

    // find-reducible
    auto* findr = app.add_subcommand("find-reducible",
                                     "search the configuration families, Z-avoiding");
    std::string findr_graph, avoid_csv, avoid_cycle_csv;
    int max_size = 29;
    findr->add_option("graph", findr_graph)->required();
    findr->add_option("--avoid", avoid_csv, "vertex to avoid (single vertex Z)");
    findr->add_option("--avoid-cycle", avoid_cycle_csv, "6-cycle to avoid");
    findr->add_option("--max-size", max_size);

    // reducible check
    auto* reducible = app.add_subcommand("reducible", "reducibility checks");
    auto* red_check = reducible->add_subcommand("check", "decide 3-reducibility");
    std::string red_graph, red_subgraph, red_mode = "auto";
    long long red_budget = -1;
    red_check->add_option("graph", red_graph)->required();
    red_check->add_option("--subgraph", red_subgraph, "comma-separated vertices")->required();
    red_check->add_option("--mode", red_mode)
        ->check(CLI::IsMember({"auto", "brute", "structural"}));
    red_check->add_option("--budget", red_budget);

    // discharge audit
    auto* discharge = app.add_subcommand("discharge", "charge bookkeeping");
    auto* audit_cmd = discharge->add_subcommand("audit", "run rules T0-T2 and audit charges");
    std::string audit_graph, audit_zcycle;
    int audit_z = -1;
    audit_cmd->add_option("graph", audit_graph)->required();
    audit_cmd->add_option("--z", audit_z, "Z as a single vertex");
    audit_cmd->add_option("--z-cycle", audit_zcycle, "Z as a 6-cycle, comma-separated");

    // pipeline
    auto* pipeline_cmd = app.add_subcommand("pipeline", "theorem proof replay");
    std::string pipe_graph;
    pipeline_cmd->add_option("graph", pipe_graph)->required();

    // peel
    auto* peel_cmd = app.add_subcommand("peel", "repeated certificate extraction");
    std::string peel_graph;
    int rounds_cap = 100000;
    peel_cmd->add_option("graph", peel_graph)->required();
    peel_cmd->add_option("--rounds-cap", rounds_cap);

    // color
    auto* color_cmd = app.add_subcommand("color", "find a list coloring");
    std::string color_graph, color_lists;
    color_cmd->add_option("graph", color_graph)->required();
    color_cmd->add_option("lists", color_lists)->required();

    // request
    auto* request_cmd = app.add_subcommand("request", "maximize a weighted request");
    std::string req_graph, req_lists, req_file;
    request_cmd->add_option("graph", req_graph)->required();
    request_cmd->add_option("lists", req_lists)->required();
    request_cmd->add_option("request", req_file)->required();

    // epsilon
    auto* eps_cmd = app.add_subcommand("epsilon", "exact flexibility constants");
    std::string eps_graph, eps_lists, eps_tolerance;
    bool eps_weighted_flag = false;
    long long eps_cap = -1;
    eps_cmd->add_option("graph", eps_graph)->required();
    eps_cmd->add_option("lists", eps_lists)->required();
    eps_cmd->add_flag("--weighted", eps_weighted_flag);
    eps_cmd->add_option("--cap", eps_cap);
    eps_cmd->add_option("--tolerance", eps_tolerance);

    CLI11_PARSE(app, argc, argv);

    try {
        Settings settings = load_settings(config_path);

        if (*validate) {
            PlaneGraph g = load_graph(validate_graph);
            auto girth = g.girth();
            json faces = json::array();
            for (const Face& f : g.faces()) faces.push_back(f.length());
            json report{{"vertices", g.vertex_count()},
                        {"edges", g.edge_count()},
                        {"faces", g.face_count()},
                        {"face_lengths", faces},
                        {"girth", girth ? json(*girth) : json("acyclic")},
                        {"connected", g.connected()},
                        {"two_connected", g.two_connected()},
                        {"outer_face", g.outer_face_id()}};
            emit(report, "valid plane graph");
            return 0;
        }
        if (*gen_honey || *gen_sub || *gen_fix) {
            PlaneGraph g = *gen_honey  ? gen_honeycomb(rows, cols)
                           : *gen_sub ? gen_subdivided(seed, base_n)
                                      : named_fixture(fixture_name);
            std::ostringstream summary;
            summary << "generated graph with " << g.vertex_count() << " vertices, "
                    << g.edge_count() << " edges";
            write_or_print(graph_to_json(g), gen_out, summary.str());
            return 0;
        }
        if (*findr) {
            PlaneGraph g = load_graph(findr_graph);
            ZMarker z = ZMarker::empty();
            if (!avoid_cycle_csv.empty()) {
                z = ZMarker::six_cycle(g, parse_vertex_list(avoid_cycle_csv));
            } else if (!avoid_csv.empty()) {
                std::vector<Vertex> avoid = parse_vertex_list(avoid_csv);
                if (avoid.size() != 1)
                    throw ParseError("--avoid takes one vertex; use --avoid-cycle for a 6-cycle");
                z = ZMarker::single(avoid[0]);
            }
            auto hit = find_any(g, z, max_size);
            if (!hit) {
                emit(json{{"hit", nullptr}}, "no configuration found");
                return 0;
            }
            ReducibleCertificate cert = structural_certificate(*hit, g, z);
            emit(json{{"hit", hit_to_json(*hit)}, {"certificate", certificate_to_json(cert)}},
                 "found a " + to_string(hit->family) + " configuration with " +
                     std::to_string(hit->subgraph.size()) + " vertices");
            return 0;
        }
        if (*red_check) {
            PlaneGraph g = load_graph(red_graph);
            SubgraphRef h = SubgraphRef::of(g, parse_vertex_list(red_subgraph));
            ReducibilityMode mode = red_mode == "brute"        ? ReducibilityMode::Brute
                                    : red_mode == "structural" ? ReducibilityMode::Structural
                                                               : ReducibilityMode::Auto;
            long long budget = red_budget > 0 ? red_budget : settings.brute_budget;
            auto res = is_3_reducible(g, h, budget, mode);
            if (std::holds_alternative<ReducibleCertificate>(res)) {
                emit(json{{"reducible", true},
                          {"certificate",
                           certificate_to_json(std::get<ReducibleCertificate>(res))}},
                     "3-reducible");
                return 0;
            }
            const Refusal& refusal = std::get<Refusal>(res);
            json out{{"reducible", false}, {"reason", refusal.reason}};
            if (refusal.counterexample) {
                out["counterexample"] = json{
                    {"pinned", refusal.counterexample->pinned},
                    {"lists", lists_to_json(refusal.counterexample->lists)["lists"]}};
            }
            emit(out, "not accepted: " + refusal.reason);
            return refusal.budget_exceeded ? 2 : 0;
        }
        if (*audit_cmd) {
            PlaneGraph g = load_graph(audit_graph);
            ZMarker z = parse_z(g, audit_z, audit_zcycle);
            AuditVerdict verdict = audit(g, z);
            emit(audit_to_json(verdict, g),
                 verdict.all_nonnegative
                     ? "all final charges nonnegative"
                     : "negative entity " + verdict.negative_entity->str());
            return 0;
        }
        if (*pipeline_cmd) {
            PlaneGraph g = load_graph(pipe_graph);
            PipelineTrace trace;
            ReducibleCertificate cert = theorem_pipeline(g, &trace);
            json jz;
            switch (trace.z.kind) {
                case ZMarker::Kind::SingleVertex: jz = trace.z.verts[0]; break;
                case ZMarker::Kind::SixCycle: jz = trace.z.verts; break;
                case ZMarker::Kind::Empty: jz = nullptr; break;
            }
            emit(json{{"certificate", certificate_to_json(cert)},
                      {"block", trace.block},
                      {"z", jz},
                      {"interior_closure", trace.used_interior_closure}},
                 "extracted a " + to_string(cert.kind) + " certificate with " +
                     std::to_string(cert.subgraph_size) + " vertices");
            return 0;
        }
        if (*peel_cmd) {
            PlaneGraph g = load_graph(peel_graph);
            PeelResult peel = peel_decomposition(g, rounds_cap);
            json certs = json::array();
            long long covered = 0;
            for (const auto& cert : peel.certificates) {
                certs.push_back(certificate_to_json(cert));
                covered += cert.subgraph_size;
            }
            emit(json{{"certificates", certs}, {"covered", covered}},
                 std::to_string(peel.certificates.size()) + " certificates covering " +
                     std::to_string(covered) + " vertices");
            return 0;
        }
        if (*color_cmd) {
            PlaneGraph g = load_graph(color_graph);
            ListAssignment L = load_lists(color_lists);
            auto c = find_coloring(SimpleGraph::from(g), L);
            emit(c ? json{{"coloring", coloring_to_json(*c)}} : json{{"coloring", nullptr}},
                 c ? "colorable" : "not list-colorable");
            return 0;
        }
        if (*request_cmd) {
            PlaneGraph g = load_graph(req_graph);
            ListAssignment L = load_lists(req_lists);
            std::ifstream in(req_file);
            if (!in.good()) throw ParseError("cannot read request file " + req_file);
            json jr = json::parse(in, nullptr, false);
            if (jr.is_discarded()) throw ParseError("request file is not valid JSON");
            WeightedRequest w = request_from_json(jr, L);
            auto res = max_weighted_request(SimpleGraph::from(g), L, w);
            if (!res) {
                emit(json{{"coloring", nullptr}}, "not list-colorable");
                return 0;
            }
            emit(json{{"coloring", coloring_to_json(res->first)},
                      {"value", res->second.str()},
                      {"total", w.total().str()}},
                 "best captured weight " + res->second.str() + " of " + w.total().str());
            return 0;
        }
        if (*eps_cmd) {
            PlaneGraph g = load_graph(eps_graph);
            ListAssignment L = load_lists(eps_lists);
            SimpleGraph s = SimpleGraph::from(g);
            long long cap = eps_cap > 0 ? eps_cap : settings.coloring_cap;
            Rational tolerance =
                Rational::parse(eps_tolerance.empty() ? settings.tolerance : eps_tolerance);
            EpsilonReport report;
            report.unrealizable = pair_realizability(s, L);
            report.unweighted = epsilon_unweighted(s, L, cap);
            if (eps_weighted_flag) report.weighted = epsilon_weighted(s, L, cap, tolerance);
            std::ostringstream summary;
            summary << "unweighted eps = " << report.unweighted->eps.str();
            if (report.weighted) summary << ", weighted eps = " << report.weighted->eps.str();
            emit(epsilon_to_json(report), summary.str());
            return 0;
        }
        throw ParseError("no subcommand selected");
    } catch (const TheoremViolationDiagnostic& e) {
        json out{{"error", e.code}, {"message", e.what()}};
        if (!e.ledger_json.empty()) out["ledger"] = json::parse(e.ledger_json);
        std::cout << out.dump(2) << "\n";
        std::cerr << "theorem violation: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cout << json{{"error", e.code}, {"message", e.what()}}.dump(2) << "\n";
        std::cerr << e.code << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
