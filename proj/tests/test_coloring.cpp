#include "doctest.h"

#include <functional>
#include <random>

#include "girth6/coloring.hpp"
#include "girth6/corpus.hpp"

using namespace girth6;

namespace {

SimpleGraph cycle(int n) {
    std::vector<Edge> es;
    std::vector<Vertex> vs;
    for (int i = 0; i < n; ++i) {
        vs.push_back(i);
        es.push_back(make_edge(i, (i + 1) % n));
    }
    return SimpleGraph::from_edges(vs, es);
}

// exhaustive colorability oracle
bool colorable_oracle(const SimpleGraph& g, const ListAssignment& L) {
    std::map<Vertex, Color> partial;
    std::function<bool(size_t)> rec = [&](size_t i) {
        if (i == g.verts.size()) return true;
        Vertex v = g.verts[i];
        for (Color c : L.at(v)) {
            bool ok = true;
            for (Vertex w : g.adj.at(v)) {
                auto it = partial.find(w);
                if (it != partial.end() && it->second == c) ok = false;
            }
            if (!ok) continue;
            partial[v] = c;
            if (rec(i + 1)) return true;
            partial.erase(v);
        }
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("find_coloring: hexagon with 3-lists succeeds") {
    SimpleGraph g = cycle(6);
    ListAssignment L = ListAssignment::uniform(g.verts, {1, 2, 3});
    auto c = find_coloring(g, L);
    REQUIRE(c.has_value());
    CHECK(is_proper_list_coloring(g, L, *c));
}

TEST_CASE("find_coloring: C5 with 2-lists fails (exhaustively cross-checked)") {
    SimpleGraph g = cycle(5);
    ListAssignment L = ListAssignment::uniform(g.verts, {1, 2});
    CHECK(!find_coloring(g, L).has_value());
    CHECK(!colorable_oracle(g, L));
}

TEST_CASE("find_coloring: empty list means no coloring") {
    SimpleGraph g = SimpleGraph::from_edges({0}, {});
    ListAssignment L;
    L.lists[0] = {};
    CHECK(!find_coloring(g, L).has_value());
}

TEST_CASE("find_coloring agrees with the oracle on random instances") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::vector<Vertex> vs;
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i) vs.push_back(i);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 100 < 40) es.push_back({i, j});
        SimpleGraph g = SimpleGraph::from_edges(vs, es);
        ListAssignment L;
        for (Vertex v : vs) {
            std::set<Color> s;
            int size = static_cast<int>(rng() % 3);
            while (static_cast<int>(s.size()) < size) s.insert(1 + rng() % 4);
            L.lists[v] = s;
        }
        auto c = find_coloring(g, L);
        CHECK(c.has_value() == colorable_oracle(g, L));
        if (c) CHECK(is_proper_list_coloring(g, L, *c));
    }
}

TEST_CASE("monotonicity: enlarging lists never breaks colorability") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<Vertex> vs;
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i) vs.push_back(i);
        for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
        if (rng() % 2) es.push_back(make_edge(0, n - 1));
        SimpleGraph g = SimpleGraph::from_edges(vs, es);
        ListAssignment L;
        for (Vertex v : vs) {
            std::set<Color> s;
            int size = 1 + static_cast<int>(rng() % 2);
            while (static_cast<int>(s.size()) < size) s.insert(1 + rng() % 3);
            L.lists[v] = s;
        }
        if (!find_coloring(g, L)) continue;
        ListAssignment bigger = L;
        bigger.lists[static_cast<Vertex>(rng() % n)].insert(1 + rng() % 5);
        CHECK(find_coloring(g, bigger).has_value());
    }
}

TEST_CASE("gallai_certificate on the documented instances") {
    PlaneGraph honey = named_fixture("HONEY1");
    SubgraphRef whole = SubgraphRef::of(honey, honey.vertices());
    ListAssignment L2 = ListAssignment::uniform(honey.vertices(), {1, 2});
    CHECK(gallai_certificate(whole, L2) == GallaiVerdict::Guaranteed);  // even cycle block

    SimpleGraph c5 = cycle(5);
    ListAssignment L5 = ListAssignment::uniform(c5.verts, {1, 2});
    CHECK(gallai_certificate(c5, L5) == GallaiVerdict::Unknown);

    // P3 with sizes (1,2,1): both blocks are K2, no slack anywhere
    SimpleGraph p3 = SimpleGraph::from_edges({0, 1, 2}, {{0, 1}, {1, 2}});
    ListAssignment Lp;
    Lp.lists[0] = {1};
    Lp.lists[1] = {1, 2};
    Lp.lists[2] = {2};
    CHECK(gallai_certificate(p3, Lp) == GallaiVerdict::Unknown);
    // and Unknown is genuinely necessary here: {1},{1,2},{2} is uncolorable
    CHECK(!colorable_oracle(p3, Lp));

    ListAssignment small;
    small.lists[0] = {};
    small.lists[1] = {1, 2};
    small.lists[2] = {1};
    CHECK_THROWS_AS(gallai_certificate(p3, small), PreconditionFailed);
}

TEST_CASE("gallai Guaranteed implies colorable on all small graphs (4-palette)") {
    // exhaustive over connected graphs on <= 4 vertices, slack patterns and
    // list assignments drawn from {1,2,3,4}
    for (int n = 1; n <= 4; ++n) {
        int maxmask = 1 << (n * (n - 1) / 2);
        for (int mask = 0; mask < maxmask; ++mask) {
            std::vector<Edge> es;
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (mask & (1 << bit)) es.push_back({i, j});
            std::vector<Vertex> vs;
            for (int i = 0; i < n; ++i) vs.push_back(i);
            SimpleGraph g = SimpleGraph::from_edges(vs, es);
            if (!g.connected()) continue;

            for (int slack = 0; slack < (1 << n); ++slack) {
                std::vector<int> sizes(n);
                bool feasible = true;
                for (int v = 0; v < n; ++v) {
                    sizes[v] = g.degree(v) + ((slack >> v) & 1);
                    if (sizes[v] > 4 || sizes[v] == 0) feasible = false;
                }
                if (!feasible) continue;
                std::vector<std::vector<std::set<Color>>> options(n);
                for (int v = 0; v < n; ++v) {
                    for (int pick = 0; pick < 16; ++pick) {
                        std::set<Color> s;
                        for (int c = 0; c < 4; ++c)
                            if (pick & (1 << c)) s.insert(c + 1);
                        if (static_cast<int>(s.size()) == sizes[v]) options[v].push_back(s);
                    }
                }
                std::vector<size_t> idx(n, 0);
                while (true) {
                    ListAssignment L;
                    for (int v = 0; v < n; ++v) L.lists[v] = options[v][idx[v]];
                    if (gallai_certificate(g, L) == GallaiVerdict::Guaranteed)
                        CHECK(find_coloring(g, L).has_value());
                    int p = 0;
                    while (p < n && ++idx[p] == options[p].size()) idx[p++] = 0;
                    if (p == n) break;
                }
            }
        }
    }
}

TEST_CASE("max_weighted_request on the spec examples") {
    SimpleGraph edge = SimpleGraph::from_edges({0, 1}, {{0, 1}});
    ListAssignment L = ListAssignment::uniform(edge.verts, {1, 2});
    WeightedRequest w;
    w.weights[{0, 1}] = Rational(5);
    w.weights[{1, 1}] = Rational(3);
    auto res = max_weighted_request(edge, L, w);
    REQUIRE(res.has_value());
    CHECK(res->second == Rational(5));
    CHECK(res->first.colors.at(0) == 1);
    CHECK(res->first.colors.at(1) == 2);

    WeightedRequest zero;
    auto rz = max_weighted_request(edge, L, zero);
    REQUIRE(rz.has_value());
    CHECK(rz->second == Rational(0));

    // C6, all lists {1,2,3}, unit request everywhere: value 3
    SimpleGraph c6 = cycle(6);
    ListAssignment L6 = ListAssignment::uniform(c6.verts, {1, 2, 3});
    std::map<Vertex, Color> req;
    for (Vertex v : c6.verts) req[v] = 1;
    auto r6 = max_weighted_request(c6, L6, WeightedRequest::from_request(req));
    REQUIRE(r6.has_value());
    CHECK(r6->second == Rational(3));
}

TEST_CASE("max_weighted_request equals the enumeration maximum") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 50; ++iter) {
        SimpleGraph g = cycle(4 + static_cast<int>(rng() % 3));
        ListAssignment L = ListAssignment::uniform(g.verts, {1, 2, 3});
        WeightedRequest w;
        for (Vertex v : g.verts)
            if (rng() % 2)
                w.weights[{v, static_cast<Color>(1 + rng() % 3)}] =
                    Rational(static_cast<long long>(rng() % 7));
        auto res = max_weighted_request(g, L, w);
        REQUIRE(res.has_value());
        Rational best;
        for (const Coloring& c : enumerate_colorings(g, L, 100000)) {
            Rational val;
            for (const auto& [v, col] : c.colors) val += w.weight(v, col);
            best = std::max(best, val);
        }
        CHECK(res->second == best);
    }
}

TEST_CASE("enumerate_colorings counts") {
    SimpleGraph c6 = cycle(6);
    ListAssignment L6 = ListAssignment::uniform(c6.verts, {1, 2, 3});
    // identical k-lists on an even cycle: (k-1)^n + (k-1) colorings
    CHECK(enumerate_colorings(c6, L6, 1000).size() == 66);

    SimpleGraph edge = SimpleGraph::from_edges({0, 1}, {{0, 1}});
    ListAssignment Le = ListAssignment::uniform(edge.verts, {1, 2});
    CHECK(enumerate_colorings(edge, Le, 10).size() == 2);

    SimpleGraph single = SimpleGraph::from_edges({0}, {});
    ListAssignment Ls;
    Ls.lists[0] = {7};
    auto one = enumerate_colorings(single, Ls, 10);
    REQUIRE(one.size() == 1);
    CHECK(one[0].colors.at(0) == 7);

    CHECK_THROWS_AS(enumerate_colorings(c6, L6, 65), CapExceeded);
    try {
        enumerate_colorings(c6, L6, 65);
    } catch (const CapExceeded& e) {
        CHECK(e.lower_bound == 66);
    }
}

TEST_CASE("every enumerated coloring is proper and list-respecting") {
    SimpleGraph c6 = cycle(6);
    ListAssignment L = ListAssignment::uniform(c6.verts, {1, 2, 3});
    for (const Coloring& c : enumerate_colorings(c6, L, 1000))
        CHECK(is_proper_list_coloring(c6, L, c));
}
