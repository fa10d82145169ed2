#include "girth6/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace girth6 {

namespace {

// rebuild with the longest face (ties: lex-smallest canonical walk) as outer
PlaneGraph with_boundary_outer(const std::vector<Vertex>& verts,
                               const std::map<Vertex, std::vector<Vertex>>& rot) {
    PlaneGraph g = PlaneGraph::from_rotation(verts, rot);
    int best = -1;
    std::vector<Vertex> best_code;
    for (const Face& f : g.faces()) {
        std::vector<Vertex> code = canonical_cycle(f.vertex_walk());
        if (best < 0 || f.length() > g.face(best).length() ||
            (f.length() == g.face(best).length() && code < best_code)) {
            best = f.id;
            best_code = code;
        }
    }
    return PlaneGraph::from_rotation(verts, rot, g.face(best).vertex_walk());
}

}  // namespace

PlaneGraph gen_honeycomb(int rows, int cols) {
    if (rows < 1 || cols < 1) throw PreconditionFailed("honeycomb needs rows, cols >= 1");
    using Cell = std::pair<int, int>;  // (grid row, grid col)
    std::set<Cell> verts;
    std::set<std::pair<Cell, Cell>> edges;
    auto add_edge = [&](Cell a, Cell b) {
        verts.insert(a);
        verts.insert(b);
        edges.insert({std::min(a, b), std::max(a, b)});
    };
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            int base = 2 * j + (i % 2);
            for (int c = base; c < base + 2; ++c) {
                add_edge({i, c}, {i, c + 1});
                add_edge({i + 1, c}, {i + 1, c + 1});
            }
            add_edge({i, base}, {i + 1, base});
            add_edge({i, base + 2}, {i + 1, base + 2});
        }
    }
    std::map<Cell, Vertex> id;
    std::vector<Vertex> vs;
    for (const Cell& c : verts) {
        id[c] = static_cast<Vertex>(vs.size());
        vs.push_back(static_cast<Vertex>(vs.size()));
    }
    std::map<Vertex, std::vector<Vertex>> rot;
    for (const Cell& c : verts) {
        // clockwise on screen: up, right, down, left
        std::vector<Vertex> nb;
        for (const Cell& d : {Cell{c.first - 1, c.second}, Cell{c.first, c.second + 1},
                              Cell{c.first + 1, c.second}, Cell{c.first, c.second - 1}}) {
            if (edges.count({std::min(c, d), std::max(c, d)})) nb.push_back(id.at(d));
        }
        rot[id.at(c)] = nb;
    }
    return with_boundary_outer(vs, rot);
}

namespace {

struct Grower {
    std::map<Vertex, std::vector<Vertex>> rot;
    std::vector<Vertex> verts;
    std::mt19937_64 rng;

    explicit Grower(std::uint64_t seed) : rng(seed) {
        // start from a 4-cycle; the growth rules below keep every face of
        // length >= 4 and never close a triangle, so the base stays
        // triangle-free and its subdivision has no non-facial 6-cycles
        verts = {0, 1, 2, 3};
        rot[0] = {1, 3};
        rot[1] = {2, 0};
        rot[2] = {3, 1};
        rot[3] = {0, 2};
    }

    PlaneGraph graph() const { return PlaneGraph::from_rotation(verts, rot); }

    bool adjacent(Vertex a, Vertex b) const {
        const auto& nb = rot.at(a);
        return std::find(nb.begin(), nb.end(), b) != nb.end();
    }

    // Insert `nb` into rot[v] directly before `before`.
    void insert_before(Vertex v, Vertex nb, Vertex before) {
        auto& r = rot.at(v);
        auto it = std::find(r.begin(), r.end(), before);
        r.insert(it, nb);
    }

    // Split face f by a chord a-b; positions qa / qb are the face's outgoing
    // targets at a and b.
    void add_chord(Vertex a, Vertex qa, Vertex b, Vertex qb) {
        insert_before(a, b, qa);
        insert_before(b, a, qb);
    }

    void add_vertex_in_face(Vertex a, Vertex qa, Vertex b, Vertex qb) {
        Vertex x = static_cast<Vertex>(verts.size());
        verts.push_back(x);
        rot[x] = {b, a};
        insert_before(a, x, qa);
        insert_before(b, x, qb);
    }

    // outgoing face target at each occurrence of each vertex on face f
    static std::map<Vertex, Vertex> face_outgoing(const Face& f) {
        std::map<Vertex, Vertex> out;
        for (const Dart& d : f.boundary) out[d.from] = d.to;
        return out;
    }

    bool share_neighbor(Vertex a, Vertex b) const {
        for (Vertex x : rot.at(a))
            for (Vertex y : rot.at(b))
                if (x == y) return true;
        return false;
    }

    void grow_to(int target) {
        while (static_cast<int>(verts.size()) < target) {
            PlaneGraph g = graph();
            std::uniform_int_distribution<int> face_pick(0, g.face_count() - 1);
            const Face& f = g.face(face_pick(rng));
            int len = f.length();
            std::vector<Vertex> walk = f.vertex_walk();
            std::uniform_int_distribution<int> pos_pick(0, len - 1);
            bool chord = len >= 6 && std::uniform_real_distribution<>(0, 1)(rng) < 0.35;
            int ia = pos_pick(rng);
            int ib = pos_pick(rng);
            int arc = std::min((ib - ia + len) % len, (ia - ib + len) % len);
            Vertex a = walk[ia], b = walk[ib];
            auto out = face_outgoing(f);
            if (chord) {
                // both parts keep length >= 4, and no triangle may close
                if (arc < 3 || adjacent(a, b) || share_neighbor(a, b)) continue;
                add_chord(a, out.at(a), b, out.at(b));
            } else {
                if (len < 4 || arc < 2 || adjacent(a, b)) continue;
                add_vertex_in_face(a, out.at(a), b, out.at(b));
            }
        }
    }
};

PlaneGraph subdivide_all(const PlaneGraph& base) {
    int n = base.vertex_count();
    std::vector<Edge> es = base.edges();
    std::map<Edge, Vertex> mid;
    for (size_t i = 0; i < es.size(); ++i) mid[es[i]] = n + static_cast<int>(i);

    std::vector<Vertex> vs;
    for (Vertex v : base.vertices()) vs.push_back(v);
    for (const auto& [e, w] : mid) vs.push_back(w);

    std::map<Vertex, std::vector<Vertex>> rot;
    for (Vertex v : base.vertices()) {
        std::vector<Vertex> nb;
        for (Vertex w : base.neighbors(v)) nb.push_back(mid.at(make_edge(v, w)));
        rot[v] = nb;
    }
    for (const auto& [e, w] : mid) rot[w] = {e.first, e.second};
    return PlaneGraph::from_rotation(vs, rot);
}

}  // namespace

PlaneGraph gen_subdivided(std::uint64_t seed, int n) {
    if (n < 4) throw PreconditionFailed("gen_subdivided needs n >= 4");
    Grower grower(seed);
    grower.grow_to(n);
    PlaneGraph base = grower.graph();
    PlaneGraph sub = subdivide_all(base);
    // inherit a deterministic outer face
    std::map<Vertex, std::vector<Vertex>> rot;
    for (Vertex v : sub.vertices()) rot[v] = sub.neighbors(v);
    return with_boundary_outer(sub.vertices(), rot);
}

namespace {

PlaneGraph make_theta_x() {
    // hexagon 0..5, inner path 0-6-7-3 drawn inside, outer path 0-8-9-3 outside
    std::map<Vertex, std::vector<Vertex>> rot;
    rot[0] = {8, 1, 6, 5};
    rot[1] = {0, 2};
    rot[2] = {1, 3};
    rot[3] = {4, 7, 2, 9};
    rot[4] = {5, 3};
    rot[5] = {0, 4};
    rot[6] = {0, 7};
    rot[7] = {6, 3};
    rot[8] = {0, 9};
    rot[9] = {3, 8};
    std::vector<Vertex> vs{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    return PlaneGraph::from_rotation(vs, rot, std::vector<Vertex>{0, 8, 9, 3, 4, 5});
}

PlaneGraph make_subk4() {
    std::map<Vertex, std::vector<Vertex>> rot{
        {0, {1, 3, 2}}, {1, {2, 3, 0}}, {2, {0, 3, 1}}, {3, {0, 1, 2}}};
    std::vector<Vertex> vs{0, 1, 2, 3};
    PlaneGraph base = PlaneGraph::from_rotation(vs, rot);
    PlaneGraph sub = subdivide_all(base);
    std::map<Vertex, std::vector<Vertex>> srot;
    for (Vertex v : sub.vertices()) srot[v] = sub.neighbors(v);
    return with_boundary_outer(sub.vertices(), srot);
}

PlaneGraph make_cube_sub() {
    std::map<Vertex, std::vector<Vertex>> rot{{0, {1, 4, 3}}, {1, {0, 2, 5}}, {2, {3, 6, 1}},
                                              {3, {0, 7, 2}}, {4, {0, 5, 7}}, {5, {4, 1, 6}},
                                              {6, {7, 5, 2}}, {7, {4, 6, 3}}};
    std::vector<Vertex> vs{0, 1, 2, 3, 4, 5, 6, 7};
    PlaneGraph base = PlaneGraph::from_rotation(vs, rot);
    PlaneGraph sub = subdivide_all(base);
    // outer face: the one holding the whole outer square 0,1,2,3
    for (const Face& f : sub.faces()) {
        std::set<Vertex> on;
        for (const Dart& d : f.boundary) on.insert(d.from);
        if (on.count(0) && on.count(1) && on.count(2) && on.count(3)) {
            std::map<Vertex, std::vector<Vertex>> srot;
            for (Vertex v : sub.vertices()) srot[v] = sub.neighbors(v);
            return PlaneGraph::from_rotation(sub.vertices(), srot, f.vertex_walk());
        }
    }
    throw PreconditionFailed("cube fixture: outer face not found");
}

// ring of `len` vertices with spokes from a center to the given positions;
// ids: center 0, named ring positions get the next ids, rest follow in ring
// order
PlaneGraph make_wheel_like(int len, const std::vector<int>& spoke_positions,
                           const std::vector<std::pair<int, Vertex>>& forced_ids) {
    std::map<int, Vertex> id_of_pos;
    for (const auto& [pos, id] : forced_ids) id_of_pos[pos] = id;
    Vertex next = 0;
    std::set<Vertex> used{0};
    for (const auto& [pos, id] : forced_ids) used.insert(id);
    for (int p = 0; p < len; ++p) {
        if (id_of_pos.count(p)) continue;
        while (used.count(++next)) {
        }
        id_of_pos[p] = next;
        used.insert(next);
    }
    std::vector<Vertex> vs{0};
    for (int p = 0; p < len; ++p) vs.push_back(id_of_pos.at(p));
    std::sort(vs.begin(), vs.end());

    std::set<int> spokes(spoke_positions.begin(), spoke_positions.end());
    std::map<Vertex, std::vector<Vertex>> rot;
    std::vector<Vertex> center_nb;
    for (int p : spoke_positions) center_nb.push_back(id_of_pos.at(p));
    rot[0] = center_nb;
    for (int p = 0; p < len; ++p) {
        Vertex v = id_of_pos.at(p);
        Vertex prev = id_of_pos.at((p + len - 1) % len);
        Vertex nxt = id_of_pos.at((p + 1) % len);
        std::vector<Vertex> nb{prev, nxt};
        if (spokes.count(p)) nb.push_back(0);
        rot[v] = nb;
    }
    std::vector<Vertex> boundary;
    for (int p = 0; p < len; ++p) boundary.push_back(id_of_pos.at(p));
    return PlaneGraph::from_rotation(vs, rot, boundary);
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"HONEY1",   "HONEY2", "SUBK4",      "THETA-X",
                                                "CUBE-SUB", "STAR4",  "TRIJUNCTION"};
    return names;
}

PlaneGraph CorpusSpec::generate() const {
    switch (family) {
        case Family::HoneycombPatch: return gen_honeycomb(rows, cols);
        case Family::SubdividedPlanar: return gen_subdivided(seed, base_size);
        case Family::NamedFixture: return named_fixture(fixture);
    }
    throw PreconditionFailed("unknown corpus family");
}

PlaneGraph named_fixture(const std::string& name) {
    if (name == "HONEY1") return gen_honeycomb(1, 1);
    if (name == "HONEY2") return gen_honeycomb(1, 2);
    if (name == "SUBK4") return make_subk4();
    if (name == "THETA-X") return make_theta_x();
    if (name == "CUBE-SUB") return make_cube_sub();
    if (name == "STAR4") {
        // spokes at ring positions 0,5,9,14; the one-per-spoke degree-2
        // neighbors get the small ids so the star finder picks them
        return make_wheel_like(18, {0, 5, 9, 14},
                               {{0, 1}, {5, 2}, {9, 3}, {14, 4}, {1, 5}, {4, 6}, {8, 7}});
    }
    if (name == "TRIJUNCTION")
        return make_wheel_like(12, {0, 4, 8}, {{0, 1}, {4, 2}, {8, 3}});
    throw UnknownFixture("unknown fixture: " + name);
}

}  // namespace girth6
