#include "doctest.h"

#include <algorithm>
#include <deque>
#include <set>

#include "girth6/corpus.hpp"
#include "girth6/discharging.hpp"
#include "girth6/io.hpp"
#include "girth6/plane_graph.hpp"

using namespace girth6;

namespace {

PlaneGraph cycle_graph(int n) {
    std::vector<Vertex> vs;
    std::map<Vertex, std::vector<Vertex>> rot;
    for (int i = 0; i < n; ++i) {
        vs.push_back(i);
        rot[i] = {(i + n - 1) % n, (i + 1) % n};
    }
    return PlaneGraph::from_rotation(vs, rot);
}

PlaneGraph path_graph(int n) {
    std::vector<Vertex> vs;
    std::map<Vertex, std::vector<Vertex>> rot;
    for (int i = 0; i < n; ++i) {
        vs.push_back(i);
        std::vector<Vertex> nb;
        if (i > 0) nb.push_back(i - 1);
        if (i + 1 < n) nb.push_back(i + 1);
        rot[i] = nb;
    }
    return PlaneGraph::from_rotation(vs, rot);
}

// independent girth oracle: remove each edge, BFS the endpoints' distance
std::optional<int> girth_oracle(const PlaneGraph& g) {
    std::optional<int> best;
    for (const Edge& e : g.edges()) {
        std::map<Vertex, int> dist{{e.first, 0}};
        std::deque<Vertex> q{e.first};
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (x == e.first && y == e.second) continue;
                if (x == e.second && y == e.first) continue;
                if (!dist.count(y)) {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
        }
        if (dist.count(e.second)) {
            int len = dist[e.second] + 1;
            if (!best || len < *best) best = len;
        }
    }
    return best;
}

// independent nice-distance oracle: enumerate all simple paths
std::optional<int> nice_distance_oracle(const PlaneGraph& g, const ZMarker& z, Vertex u,
                                        Vertex v) {
    std::optional<int> best;
    std::vector<Vertex> path{u};
    std::set<Vertex> used{u};
    std::function<void(Vertex)> rec = [&](Vertex cur) {
        for (Vertex y : g.neighbors(cur)) {
            if (y == v) {
                int len = static_cast<int>(path.size());
                if (!best || len < *best) best = len;
                continue;
            }
            if (used.count(y)) continue;
            if (g.degree(y) != 3 || z.contains(y)) continue;
            if (best && static_cast<int>(path.size()) >= *best) continue;
            used.insert(y);
            path.push_back(y);
            rec(y);
            path.pop_back();
            used.erase(y);
        }
    };
    rec(u);
    return best;
}

}  // namespace

TEST_CASE("HONEY1 hexagon: faces, Euler, girth") {
    PlaneGraph g = named_fixture("HONEY1");
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 6);
    CHECK(g.face_count() == 2);
    for (const Face& f : g.faces()) CHECK(f.length() == 6);
    CHECK(g.girth() == 6);
    CHECK(g.two_connected());
}

TEST_CASE("SUBK4: 10 vertices, 12 edges, 4 hexagonal faces") {
    PlaneGraph g = named_fixture("SUBK4");
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 12);
    CHECK(g.face_count() == 4);
    for (const Face& f : g.faces()) CHECK(f.length() == 6);
    CHECK(g.girth() == 6);
    CHECK(girth_oracle(g) == 6);
}

TEST_CASE("face lengths always sum to twice the edges") {
    for (const auto& name : fixture_names()) {
        PlaneGraph g = named_fixture(name);
        long long total = 0;
        for (const Face& f : g.faces()) total += f.length();
        CHECK(total == 2LL * g.edge_count());
    }
}

TEST_CASE("asymmetric adjacency is rejected") {
    std::map<Vertex, std::vector<Vertex>> rot{{0, {1}}, {1, {}}};
    CHECK_THROWS_AS(PlaneGraph::from_rotation({0, 1}, rot), AsymmetricAdjacency);
}

TEST_CASE("non-planar rotation fails the Euler gate") {
    // K5 cannot embed in the plane, no matter the rotation
    std::vector<Vertex> vs{0, 1, 2, 3, 4};
    std::map<Vertex, std::vector<Vertex>> rot;
    for (Vertex v : vs) {
        std::vector<Vertex> nb;
        for (Vertex w : vs)
            if (w != v) nb.push_back(w);
        rot[v] = nb;
    }
    CHECK_THROWS_AS(PlaneGraph::from_rotation(vs, rot), NonPlanarEmbedding);
}

TEST_CASE("girth: fixtures and oracle agreement") {
    CHECK(path_graph(3).girth() == std::nullopt);  // acyclic
    CHECK(cycle_graph(5).girth() == 5);
    for (const auto& name : fixture_names()) {
        PlaneGraph g = named_fixture(name);
        CHECK(g.girth() == girth_oracle(g));
    }
    CHECK(named_fixture("CUBE-SUB").girth() == 8);
}

TEST_CASE("blocks: whole hexagon is one block") {
    PlaneGraph g = named_fixture("HONEY1");
    BlockDecomposition dec = blocks(g);
    CHECK(dec.blocks.size() == 1);
    CHECK(dec.cut_vertices.empty());
    CHECK(dec.blocks[0].verts == g.vertices());
}

TEST_CASE("blocks: two hexagons sharing one vertex") {
    // hexagon 0..5 and hexagon 0,6,7,8,9,10 glued at 0
    std::vector<Vertex> vs;
    std::map<Vertex, std::vector<Vertex>> rot;
    for (int i = 0; i <= 10; ++i) vs.push_back(i);
    rot[0] = {1, 5, 6, 10};
    for (int i = 1; i <= 5; ++i) rot[i] = {i - 1, (i + 1) % 6 == 0 ? 0 : i + 1};
    rot[5] = {4, 0};
    rot[6] = {0, 7};
    for (int i = 7; i <= 9; ++i) rot[i] = {i - 1, i + 1};
    rot[10] = {9, 0};
    PlaneGraph g = PlaneGraph::from_rotation(vs, rot);
    BlockDecomposition dec = blocks(g);
    CHECK(dec.blocks.size() == 2);
    CHECK(dec.cut_vertices == std::vector<Vertex>{0});
    CHECK(dec.blocks[0].verts == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
    CHECK(dec.blocks[1].verts == std::vector<Vertex>{0, 6, 7, 8, 9, 10});
}

TEST_CASE("blocks: single edge is one K2 block") {
    std::map<Vertex, std::vector<Vertex>> rot{{0, {1}}, {1, {0}}};
    PlaneGraph g = PlaneGraph::from_rotation({0, 1}, rot);
    BlockDecomposition dec = blocks(g);
    CHECK(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].verts == std::vector<Vertex>{0, 1});
    CHECK(dec.cut_vertices.empty());
    std::map<Vertex, std::vector<Vertex>> two_comp{{0, {1}}, {1, {0}}, {2, {3}}, {3, {2}}};
    CHECK_THROWS_AS(blocks(PlaneGraph::from_rotation({0, 1, 2, 3}, two_comp)), Disconnected);
}

TEST_CASE("six_cycles on fixtures") {
    PlaneGraph honey = named_fixture("HONEY1");
    auto hc = six_cycles(honey);
    REQUIRE(hc.size() == 1);
    CHECK(hc[0].facial);

    PlaneGraph subk4 = named_fixture("SUBK4");
    auto sc = six_cycles(subk4);
    CHECK(sc.size() == 4);
    for (const auto& info : sc) CHECK(info.facial);

    PlaneGraph theta = named_fixture("THETA-X");
    auto tc = six_cycles(theta);
    CHECK(tc.size() == 6);
    int nonfacial = 0;
    for (const auto& info : tc)
        if (!info.facial) nonfacial++;
    CHECK(nonfacial == 2);

    CHECK_THROWS_AS(six_cycles(cycle_graph(5)), GirthTooSmall);
}

TEST_CASE("minimal non-facial 6-cycle on THETA-X") {
    PlaneGraph theta = named_fixture("THETA-X");
    auto z = minimal_nonfacial_six_cycle(theta);
    REQUIRE(z.has_value());
    CHECK(z->verts == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
    auto interior = cycle_interior(theta, z->verts);
    CHECK(interior == std::vector<Vertex>{6, 7});

    CHECK(!minimal_nonfacial_six_cycle(named_fixture("SUBK4")).has_value());
    CHECK(!minimal_nonfacial_six_cycle(named_fixture("HONEY1")).has_value());
}

TEST_CASE("interior_closure of THETA-X keeps the hexagon and its inside") {
    PlaneGraph theta = named_fixture("THETA-X");
    ZMarker z = *minimal_nonfacial_six_cycle(theta);
    PlaneGraph closed = interior_closure(theta, z);
    CHECK(closed.vertex_count() == 8);
    CHECK(closed.two_connected());
    for (const auto& info : six_cycles(closed)) CHECK(info.facial);
    // inside vertices keep their host degree
    for (Vertex v : {6, 7}) CHECK(closed.degree(v) == theta.degree(v));

    // a facial hexagon is refused
    ZMarker facial = ZMarker::six_cycle(theta, {0, 1, 2, 3, 7, 6});
    CHECK_THROWS_AS(interior_closure(theta, facial), FacialCycle);
}

TEST_CASE("nice_distance on SUBK4 and HONEY1") {
    PlaneGraph subk4 = named_fixture("SUBK4");
    // subdivision vertices around branch vertex 1 are nicely reachable
    // through it: 4 = mid(0,1), 7 = mid(1,2)
    ZMarker z = ZMarker::single(0);
    CHECK(nice_distance(subk4, z, 4, 7) == 2);

    // HONEY1 hexagon in grid ids runs 0-1-2-5-4-3-0; from z=0 the two
    // distance-2 vertices are 2 and 4, and no route between them has
    // degree-3 internals
    PlaneGraph honey = named_fixture("HONEY1");
    ZMarker zh = ZMarker::single(0);
    CHECK(nice_distance(honey, zh, 2, 4) == std::nullopt);
    CHECK(nice_distance(honey, zh, 1, 2) == 1);  // adjacent
    CHECK_THROWS_AS(nice_distance(honey, zh, 1, 1), PreconditionFailed);
}

TEST_CASE("nice_distance agrees with the brute-force oracle and is symmetric") {
    for (const auto& name : fixture_names()) {
        PlaneGraph g = named_fixture(name);
        ZMarker z = ZMarker::single(g.vertices().front());
        for (Vertex u : g.vertices())
            for (Vertex v : g.vertices()) {
                if (u >= v) continue;
                auto d = nice_distance(g, z, u, v);
                CHECK(d == nice_distance_oracle(g, z, u, v));
                CHECK(d == nice_distance(g, z, v, u));
            }
    }
}

TEST_CASE("nice_path is shortest, Z-nice and lex-smallest") {
    PlaneGraph g = named_fixture("STAR4");
    ZMarker z = ZMarker::empty();
    auto p = nice_path(g, z, 0, 5);
    REQUIRE(p.has_value());
    CHECK(p->front() == 0);
    CHECK(p->back() == 5);
    CHECK(static_cast<int>(p->size()) - 1 == nice_distance(g, z, 0, 5));
    for (size_t i = 1; i + 1 < p->size(); ++i) CHECK(g.degree((*p)[i]) == 3);
}

TEST_CASE("nice_face_distance basics") {
    PlaneGraph g = named_fixture("CUBE-SUB");
    ZMarker z = ZMarker::empty();
    const Face& f = g.face(0);
    Vertex on = f.boundary[0].from;
    CHECK(nice_face_distance(g, z, 0, on) == 0);

    // brute-force comparison over every face/vertex pair
    for (const Face& face : g.faces()) {
        std::set<Vertex> boundary;
        for (const Dart& d : face.boundary) boundary.insert(d.from);
        for (Vertex u : g.vertices()) {
            auto got = nice_face_distance(g, z, face.id, u);
            std::optional<int> want;
            if (boundary.count(u))
                want = 0;
            else
                for (Vertex v : boundary) {
                    if (g.degree(v) != 3 || z.contains(v)) continue;
                    auto d = nice_distance_oracle(g, z, v, u);
                    if (d && (!want || *d < *want)) want = d;
                }
            CHECK(got == want);
        }
    }
}

TEST_CASE("graph JSON round trip and errors") {
    PlaneGraph g = named_fixture("THETA-X");
    json j = graph_to_json(g);
    PlaneGraph back = graph_from_json(j);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_count() == g.edge_count());
    CHECK(back.face_count() == g.face_count());
    CHECK(graph_to_json(back) == j);

    CHECK_THROWS_AS(graph_from_string("{"), ParseError);
    CHECK_THROWS_AS(graph_from_string("{\"vertices\":[0,1],\"rotation\":{\"0\":[1],\"1\":[]}}"),
                    AsymmetricAdjacency);
}

TEST_CASE("SubgraphRef::with_edges rejects non-induced edge sets") {
    PlaneGraph g = named_fixture("HONEY1");
    CHECK_THROWS_AS(SubgraphRef::with_edges(g, {0, 1, 2}, {{0, 1}}), NotInduced);
    SubgraphRef ok = SubgraphRef::with_edges(g, {0, 1, 2}, {{0, 1}, {1, 2}});
    CHECK(ok.degree_in(1) == 2);
}

TEST_CASE("nice_face_distance: empty minimum is Infinity") {
    // HONEY2's left hexagon has only two degree-3 vertices; putting one in Z
    // and asking from a far corner leaves no usable face vertex
    PlaneGraph g = named_fixture("HONEY2");
    ZMarker z = ZMarker::single(2);
    int left_face = -1;
    for (const Face& f : g.faces()) {
        std::set<Vertex> on;
        for (const Dart& d : f.boundary) on.insert(d.from);
        if (f.length() == 6 && on.count(0)) left_face = f.id;
    }
    REQUIRE(left_face >= 0);
    CHECK(nice_face_distance(g, z, left_face, 4) == std::nullopt);
}

TEST_CASE("loops and parallel edges are parse errors") {
    std::map<Vertex, std::vector<Vertex>> loop{{0, {0}}};
    CHECK_THROWS_AS(PlaneGraph::from_rotation({0}, loop), ParseError);
    std::map<Vertex, std::vector<Vertex>> par{{0, {1, 1}}, {1, {0, 0}}};
    CHECK_THROWS_AS(PlaneGraph::from_rotation({0, 1}, par), ParseError);
}

TEST_CASE("nice_path returns the lex-smallest among all shortest nice paths") {
    PlaneGraph g = named_fixture("CUBE-SUB");
    ZMarker z = ZMarker::single(0);
    for (Vertex u : g.vertices()) {
        for (Vertex v : g.vertices()) {
            if (u == v) continue;
            auto got = nice_path(g, z, u, v);
            // oracle: enumerate every path whose internals qualify, keep the
            // shortest and lex-smallest
            std::optional<std::vector<Vertex>> want;
            std::vector<Vertex> path{u};
            std::set<Vertex> used{u};
            std::function<void(Vertex)> rec = [&](Vertex cur) {
                if (want && path.size() > want->size()) return;
                for (Vertex y : g.neighbors(cur)) {
                    if (y == v) {
                        std::vector<Vertex> cand = path;
                        cand.push_back(v);
                        if (!want || cand.size() < want->size() ||
                            (cand.size() == want->size() && cand < *want))
                            want = cand;
                        continue;
                    }
                    if (used.count(y) || g.degree(y) != 3 || z.contains(y)) continue;
                    used.insert(y);
                    path.push_back(y);
                    rec(y);
                    path.pop_back();
                    used.erase(y);
                }
            };
            rec(u);
            CHECK(got == want);
        }
    }
}

namespace {

// four concentric hexagons joined by alternating spokes: the two middle
// rings are non-facial 6-cycles with strictly nested interiors
PlaneGraph nested_rings() {
    // a = 0..5, m1 = 6..11, m2 = 12..17, b = 18..23
    std::vector<Vertex> vs;
    std::map<Vertex, std::vector<Vertex>> rot;
    auto ring = [&](int base) {
        for (int i = 0; i < 6; ++i)
            rot[base + i] = {base + (i + 5) % 6, base + (i + 1) % 6};
    };
    for (int base : {0, 6, 12, 18}) ring(base);
    for (int i = 0; i < 24; ++i) vs.push_back(i);
    // with all rings clockwise, an inward spoke follows the ring pair and an
    // outward spoke sits between the ring neighbors
    auto spoke = [&](Vertex outer, Vertex inner) {
        rot[outer].push_back(inner);
        rot[inner].insert(rot[inner].begin() + 1, outer);
    };
    for (int i : {0, 2, 4}) spoke(i, 6 + i);        // a - m1
    for (int i : {1, 3, 5}) spoke(6 + i, 12 + i);   // m1 - m2
    for (int i : {0, 2, 4}) spoke(12 + i, 18 + i);  // m2 - b
    return PlaneGraph::from_rotation(vs, rot, std::vector<Vertex>{0, 1, 2, 3, 4, 5});
}

}  // namespace

TEST_CASE("nested non-facial 6-cycles: the inner disk wins") {
    PlaneGraph g = nested_rings();
    CHECK(g.vertex_count() == 24);
    CHECK(g.girth() == 6);
    CHECK(g.two_connected());

    auto cycles = six_cycles(g);
    std::vector<std::vector<Vertex>> nonfacial;
    for (const auto& info : cycles)
        if (!info.facial) nonfacial.push_back(info.cycle);
    REQUIRE(nonfacial.size() == 2);  // the two middle rings
    CHECK(nonfacial[0] == std::vector<Vertex>{6, 7, 8, 9, 10, 11});
    CHECK(nonfacial[1] == std::vector<Vertex>{12, 13, 14, 15, 16, 17});

    // strictly nested interiors: 12 vertices inside m1, 6 inside m2
    CHECK(cycle_interior(g, {6, 7, 8, 9, 10, 11}).size() == 12);
    CHECK(cycle_interior(g, {12, 13, 14, 15, 16, 17}).size() == 6);

    auto z = minimal_nonfacial_six_cycle(g);
    REQUIRE(z.has_value());
    CHECK(z->verts == std::vector<Vertex>{12, 13, 14, 15, 16, 17});

    PlaneGraph closed = interior_closure(g, *z);
    CHECK(closed.vertex_count() == 12);
    for (const auto& info : six_cycles(closed)) CHECK(info.facial);
}

TEST_CASE("pipeline restricts through nested rings to a core certificate") {
    PlaneGraph g = nested_rings();
    PipelineTrace trace;
    ReducibleCertificate cert = theorem_pipeline(g, &trace);
    CHECK(trace.used_interior_closure);
    CHECK(trace.z.verts == std::vector<Vertex>{12, 13, 14, 15, 16, 17});
    // the certificate lives strictly inside the innermost non-facial ring
    for (Vertex v : cert.subgraph.verts) CHECK(v >= 18);
}

TEST_CASE("induced subgraphs keep the outer region designation") {
    PlaneGraph theta = named_fixture("THETA-X");
    PlaneGraph inner = theta.induced({0, 1, 2, 3, 4, 5, 6, 7});
    REQUIRE(inner.outer_face_id() >= 0);
    std::vector<Vertex> boundary =
        canonical_cycle(inner.face(inner.outer_face_id()).vertex_walk());
    CHECK(boundary == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
    CHECK(cycle_interior(inner, {0, 1, 2, 3, 4, 5}) == std::vector<Vertex>{6, 7});
}
