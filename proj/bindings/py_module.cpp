// Python bindings for the girth6 core.  Graphs travel as JSON strings in the
// documented file format; results come back as JSON strings or plain types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "girth6/corpus.hpp"
#include "girth6/discharging.hpp"
#include "girth6/flexibility.hpp"
#include "girth6/io.hpp"

namespace py = pybind11;
using namespace girth6;

namespace {

PlaneGraph parse_graph(const std::string& text) { return graph_from_string(text); }

ListAssignment parse_lists(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("lists are not valid JSON");
    return lists_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_girth6, m) {
    m.doc() = "plane-graph discharging and list-coloring flexibility toolkit";

    py::register_exception<TheoremViolationDiagnostic>(m, "TheoremViolation");
    py::register_exception<Error>(m, "Girth6Error");

    m.def("validate", [](const std::string& graph_text) {
        PlaneGraph g = parse_graph(graph_text);
        auto girth = g.girth();
        json out{{"vertices", g.vertex_count()},
                 {"edges", g.edge_count()},
                 {"faces", g.face_count()},
                 {"girth", girth ? json(*girth) : json("acyclic")},
                 {"connected", g.connected()},
                 {"two_connected", g.two_connected()}};
        return out.dump();
    });

    m.def("girth", [](const std::string& graph_text) -> py::object {
        auto g = parse_graph(graph_text).girth();
        return g ? py::cast(*g) : py::none();
    });

    m.def("gen_honeycomb", [](int rows, int cols) {
        return graph_to_json(gen_honeycomb(rows, cols)).dump();
    });
    m.def("gen_subdivided", [](std::uint64_t seed, int n) {
        return graph_to_json(gen_subdivided(seed, n)).dump();
    });
    m.def("named_fixture",
          [](const std::string& name) { return graph_to_json(named_fixture(name)).dump(); });
    m.def("fixture_names", [] { return fixture_names(); });

    m.def("find_coloring",
          [](const std::string& graph_text, const std::string& lists_text) -> py::object {
              PlaneGraph g = parse_graph(graph_text);
              auto c = find_coloring(SimpleGraph::from(g), parse_lists(lists_text));
              if (!c) return py::none();
              return py::cast(coloring_to_json(*c).dump());
          });

    m.def("find_reducible",
          [](const std::string& graph_text, const std::vector<Vertex>& avoid,
             int max_size) -> py::object {
              PlaneGraph g = parse_graph(graph_text);
              ZMarker z = ZMarker::empty();
              if (avoid.size() == 1) z = ZMarker::single(avoid[0]);
              else if (avoid.size() == 6) z = ZMarker::six_cycle(g, avoid);
              else if (!avoid.empty()) throw ParseError("avoid must be 1 or 6 vertices");
              auto hit = find_any(g, z, max_size);
              if (!hit) return py::none();
              ReducibleCertificate cert = structural_certificate(*hit, g, z);
              return py::cast(json{{"hit", hit_to_json(*hit)},
                                   {"certificate", certificate_to_json(cert)}}
                                  .dump());
          },
          py::arg("graph"), py::arg("avoid") = std::vector<Vertex>{}, py::arg("max_size") = 29);

    m.def("is_3_reducible",
          [](const std::string& graph_text, const std::vector<Vertex>& subgraph,
             const std::string& mode, long long budget) {
              PlaneGraph g = parse_graph(graph_text);
              SubgraphRef h = SubgraphRef::of(g, subgraph);
              ReducibilityMode m_ = mode == "brute"        ? ReducibilityMode::Brute
                                    : mode == "structural" ? ReducibilityMode::Structural
                                                           : ReducibilityMode::Auto;
              auto res = is_3_reducible(g, h, budget, m_);
              if (std::holds_alternative<ReducibleCertificate>(res))
                  return json{{"reducible", true},
                              {"certificate",
                               certificate_to_json(std::get<ReducibleCertificate>(res))}}
                      .dump();
              return json{{"reducible", false},
                          {"reason", std::get<Refusal>(res).reason}}
                  .dump();
          },
          py::arg("graph"), py::arg("subgraph"), py::arg("mode") = "auto",
          py::arg("budget") = kDefaultNodeBudget);

    m.def("discharge_audit",
          [](const std::string& graph_text, const std::vector<Vertex>& z_verts) {
              PlaneGraph g = parse_graph(graph_text);
              ZMarker z = z_verts.size() == 1 ? ZMarker::single(z_verts[0])
                                              : ZMarker::six_cycle(g, z_verts);
              AuditVerdict verdict = audit(g, z);
              return audit_to_json(verdict, g).dump();
          });

    m.def("pipeline", [](const std::string& graph_text) {
        PlaneGraph g = parse_graph(graph_text);
        return certificate_to_json(theorem_pipeline(g)).dump();
    });

    m.def("peel", [](const std::string& graph_text, int rounds_cap) {
        PlaneGraph g = parse_graph(graph_text);
        PeelResult peel = peel_decomposition(g, rounds_cap);
        json certs = json::array();
        for (const auto& cert : peel.certificates) certs.push_back(certificate_to_json(cert));
        return certs.dump();
    }, py::arg("graph"), py::arg("rounds_cap") = 100000);

    m.def("epsilon",
          [](const std::string& graph_text, const std::string& lists_text, bool weighted,
             long long cap) {
              PlaneGraph g = parse_graph(graph_text);
              ListAssignment L = parse_lists(lists_text);
              SimpleGraph s = SimpleGraph::from(g);
              EpsilonReport report;
              report.unrealizable = pair_realizability(s, L);
              report.unweighted = epsilon_unweighted(s, L, cap);
              if (weighted) report.weighted = epsilon_weighted(s, L, cap);
              return epsilon_to_json(report).dump();
          },
          py::arg("graph"), py::arg("lists"), py::arg("weighted") = true,
          py::arg("cap") = 10000);
}
