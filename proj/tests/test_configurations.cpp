#include "doctest.h"

#include <random>

#include "girth6/configurations.hpp"
#include "girth6/corpus.hpp"
#include "girth6/discharging.hpp"

using namespace girth6;

namespace {

// ring of `len` vertices with a spoked center, ids forced at chosen positions
PlaneGraph wheel(int len, const std::vector<int>& spoke_positions,
                 std::map<int, Vertex> forced) {
    std::map<int, Vertex> id_of;
    std::set<Vertex> used{0};
    for (const auto& [pos, id] : forced) {
        id_of[pos] = id;
        used.insert(id);
    }
    Vertex next = 0;
    for (int p = 0; p < len; ++p) {
        if (id_of.count(p)) continue;
        while (used.count(++next)) {
        }
        id_of[p] = next;
        used.insert(next);
    }
    std::set<int> spokes(spoke_positions.begin(), spoke_positions.end());
    std::map<Vertex, std::vector<Vertex>> rot;
    std::vector<Vertex> center_nb;
    for (int p : spoke_positions) center_nb.push_back(id_of.at(p));
    rot[0] = center_nb;
    std::vector<Vertex> vs{0};
    for (int p = 0; p < len; ++p) {
        Vertex v = id_of.at(p);
        vs.push_back(v);
        std::vector<Vertex> nb{id_of.at((p + len - 1) % len), id_of.at((p + 1) % len)};
        if (spokes.count(p)) nb.push_back(0);
        rot[v] = nb;
    }
    std::sort(vs.begin(), vs.end());
    std::vector<Vertex> boundary;
    for (int p = 0; p < len; ++p) boundary.push_back(id_of.at(p));
    return PlaneGraph::from_rotation(vs, rot, boundary);
}

}  // namespace

TEST_CASE("find_degree_le1 basics") {
    std::map<Vertex, std::vector<Vertex>> rot{{0, {1}}, {1, {0, 2}}, {2, {1}}};
    PlaneGraph p3 = PlaneGraph::from_rotation({0, 1, 2}, rot);
    auto hit = find_degree_le1(p3, ZMarker::empty());
    REQUIRE(hit.has_value());
    CHECK(hit->anchor_vertices == std::vector<Vertex>{0});
    CHECK(hit->size_bound_claimed == 1);

    CHECK(!find_degree_le1(named_fixture("HONEY1"), ZMarker::empty()).has_value());

    // hexagon with a pendant leaf
    std::map<Vertex, std::vector<Vertex>> rot2;
    for (int i = 0; i < 6; ++i) {
        rot2[i] = {(i + 5) % 6, (i + 1) % 6};
    }
    rot2[0].push_back(6);
    rot2[6] = {0};
    PlaneGraph pend = PlaneGraph::from_rotation({0, 1, 2, 3, 4, 5, 6}, rot2);
    auto hp = find_degree_le1(pend, ZMarker::empty());
    REQUIRE(hp.has_value());
    CHECK(hp->anchor_vertices == std::vector<Vertex>{6});
}

TEST_CASE("find_nice_path_pair on the hexagon and SUBK4") {
    PlaneGraph honey = named_fixture("HONEY1");
    // hexagon cycle order in grid ids: 0-1-2-5-4-3-0
    auto hit = find_nice_path_pair(honey, ZMarker::single(0));
    REQUIRE(hit.has_value());
    CHECK(hit->anchor_vertices == std::vector<Vertex>{1, 2});
    CHECK(hit->subgraph.size() == 2);
    CHECK(hit->size_bound_claimed == 2);

    PlaneGraph subk4 = named_fixture("SUBK4");
    auto hs = find_nice_path_pair(subk4, ZMarker::single(0));
    REQUIRE(hs.has_value());
    CHECK(hs->subgraph.size() == 3);  // two subdivision vertices through a branch
    CHECK(static_cast<int>(hs->paths[0].size()) == 3);

    // all-degree-3 host: no degree-2 vertices at all
    std::map<Vertex, std::vector<Vertex>> cube_rot{{0, {1, 4, 3}}, {1, {0, 2, 5}},
                                                   {2, {3, 6, 1}}, {3, {0, 7, 2}},
                                                   {4, {0, 5, 7}}, {5, {4, 1, 6}},
                                                   {6, {7, 5, 2}}, {7, {4, 6, 3}}};
    PlaneGraph cube = PlaneGraph::from_rotation({0, 1, 2, 3, 4, 5, 6, 7}, cube_rot);
    CHECK(!find_nice_path_pair(cube, ZMarker::empty()).has_value());
}

TEST_CASE("find_star on STAR4 and its fallback") {
    PlaneGraph star = named_fixture("STAR4");
    auto hit = find_star(star, ZMarker::empty());
    REQUIRE(hit.has_value());
    CHECK(hit->family == ConfigurationHit::Family::Star);
    CHECK(hit->anchor_vertices.front() == 0);
    CHECK(hit->subgraph.size() == 7);
    CHECK(hit->size_bound_claimed == 7);  // 1 + (2+2+2)

    // 3-regular host: no center of degree >= 4
    PlaneGraph subk4 = named_fixture("SUBK4");
    CHECK(!find_star(subk4, ZMarker::empty()).has_value());
}

TEST_CASE("find_star fallback when shortest legs collide") {
    // same wheel as STAR4, but both ring neighbors of the spoke at position 5
    // get the smallest candidate ids, so two chosen legs share that spoke and
    // the pair configuration is returned instead
    PlaneGraph g = wheel(18, {0, 5, 9, 14},
                         {{0, 1}, {5, 2}, {9, 3}, {14, 4}, {4, 5}, {6, 6}, {1, 7}});
    auto hit = find_star(g, ZMarker::empty());
    REQUIRE(hit.has_value());
    CHECK(hit->family == ConfigurationHit::Family::NicePathPair);
}

TEST_CASE("find_two_faces on HONEY2 and a no-hit host") {
    PlaneGraph honey2 = named_fixture("HONEY2");
    auto hit = find_two_faces(honey2, ZMarker::empty());
    REQUIRE(hit.has_value());
    CHECK(hit->subgraph.size() == 10);
    CHECK(hit->size_bound_claimed == 10);

    auto cert = structural_certificate(*hit, honey2, ZMarker::empty());
    CHECK(cert.kind == ReducibleCertificate::Kind::TwoFace);

    PlaneGraph subk4 = named_fixture("SUBK4");
    auto hs = find_two_faces(subk4, ZMarker::empty());
    REQUIRE(hs.has_value());  // every face has degree-2 vertices
    auto cs = structural_certificate(*hs, subk4, ZMarker::empty());
    CHECK(cs.degree_slack_ok);
}

TEST_CASE("find_three_faces on TRIJUNCTION") {
    PlaneGraph tri = named_fixture("TRIJUNCTION");
    auto hit = find_three_faces(tri, ZMarker::empty());
    REQUIRE(hit.has_value());
    CHECK(hit->subgraph.size() == 13);
    CHECK(hit->size_bound_claimed == 13);
    auto cert = structural_certificate(*hit, tri, ZMarker::empty());
    CHECK(cert.kind == ReducibleCertificate::Kind::ThreeFace);

    // HONEY2 has only two bounded 6-faces
    CHECK(!find_three_faces(named_fixture("HONEY2"), ZMarker::empty()).has_value());
}

TEST_CASE("structural certificates agree with brute force on small hits") {
    for (const auto& name : fixture_names()) {
        PlaneGraph g = named_fixture(name);
        ZMarker z = ZMarker::empty();
        for (auto hit : {find_degree_le1(g, z), find_nice_path_pair(g, z), find_star(g, z),
                         find_two_faces(g, z), find_three_faces(g, z)}) {
            if (!hit) continue;
            ReducibleCertificate structural = structural_certificate(*hit, g, z);
            if (hit->subgraph.size() <= 8) {
                auto brute = is_3_reducible(g, hit->subgraph, kDefaultNodeBudget,
                                            ReducibilityMode::Brute);
                CHECK(std::holds_alternative<ReducibleCertificate>(brute));
            }
            CHECK(structural.subgraph_size <= hit->size_bound_claimed);
        }
    }
}

TEST_CASE("Z-avoidance: hits never touch Z") {
    PlaneGraph star = named_fixture("STAR4");
    ZMarker z = ZMarker::single(5);  // one of the preferred leaf targets
    for (auto hit : {find_nice_path_pair(star, z), find_star(star, z)}) {
        if (!hit) continue;
        for (Vertex v : hit->subgraph.verts) CHECK(!z.contains(v));
    }
}

TEST_CASE("tampered hits fail certification") {
    PlaneGraph honey2 = named_fixture("HONEY2");
    auto hit = find_two_faces(honey2, ZMarker::empty());
    REQUIRE(hit.has_value());
    ConfigurationHit tampered = *hit;
    std::vector<Vertex> fewer(tampered.subgraph.verts.begin(),
                              tampered.subgraph.verts.end() - 1);
    tampered.subgraph = SubgraphRef::of(honey2, fewer);
    CHECK_THROWS_AS(structural_certificate(tampered, honey2, ZMarker::empty()),
                    CertificateFailed);
}

TEST_CASE("find_any respects the family order") {
    std::map<Vertex, std::vector<Vertex>> rot{{0, {1}}, {1, {0, 2}}, {2, {1}}};
    PlaneGraph p3 = PlaneGraph::from_rotation({0, 1, 2}, rot);
    auto hit = find_any(p3, ZMarker::empty());
    REQUIRE(hit.has_value());
    CHECK(hit->family == ConfigurationHit::Family::DegreeLe1);

    auto hh = find_any(named_fixture("HONEY2"), ZMarker::empty());
    REQUIRE(hh.has_value());
    CHECK(hh->family == ConfigurationHit::Family::NicePathPair);
}

TEST_CASE("end-to-end reducibility semantics: residual lists stay colorable") {
    // delete a certified subgraph, color the rest from random 3-lists, strike
    // the neighbors' colors from the subgraph's lists: a coloring must remain
    std::mt19937 rng(97);
    for (const auto& name : {std::string("SUBK4"), std::string("HONEY2")}) {
        PlaneGraph g = named_fixture(name);
        ReducibleCertificate cert = theorem_pipeline(g);
        std::set<Vertex> in_h(cert.subgraph.verts.begin(), cert.subgraph.verts.end());
        std::vector<Vertex> rest;
        for (Vertex v : g.vertices())
            if (!in_h.count(v)) rest.push_back(v);
        SimpleGraph rest_graph = SimpleGraph::from(SubgraphRef::of(g, rest));
        SimpleGraph h_graph = SimpleGraph::from(cert.subgraph);

        for (int iter = 0; iter < 100; ++iter) {
            ListAssignment L0;
            for (Vertex v : g.vertices()) {
                std::set<Color> lst;
                while (lst.size() < 3) lst.insert(1 + static_cast<Color>(rng() % 6));
                L0.lists[v] = std::move(lst);
            }
            // randomize the search by renaming colors through a permutation
            std::vector<Color> perm{1, 2, 3, 4, 5, 6};
            std::shuffle(perm.begin(), perm.end(), rng);
            ListAssignment renamed;
            for (Vertex v : rest) {
                std::set<Color> lst;
                for (Color c : L0.at(v)) lst.insert(perm[c - 1]);
                renamed.lists[v] = std::move(lst);
            }
            auto colored = find_coloring(rest_graph, renamed);
            REQUIRE(colored.has_value());
            std::map<Vertex, Color> outside;
            for (const auto& [v, pc] : colored->colors)
                outside[v] = 1 + static_cast<Color>(std::find(perm.begin(), perm.end(), pc) -
                                                     perm.begin());

            ListAssignment residual;
            for (Vertex v : cert.subgraph.verts) {
                std::set<Color> lst = L0.at(v);
                for (Vertex w : g.neighbors(v))
                    if (outside.count(w)) lst.erase(outside.at(w));
                residual.lists[v] = std::move(lst);
            }
            CHECK(find_coloring(h_graph, residual).has_value());
        }
    }
}
