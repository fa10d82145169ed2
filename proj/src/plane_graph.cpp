#include "girth6/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace girth6 {

std::vector<Vertex> Face::vertex_walk() const {
    std::vector<Vertex> out;
    out.reserve(boundary.size());
    for (const Dart& d : boundary) out.push_back(d.from);
    return out;
}

std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& walk) {
    if (walk.empty()) return {};
    const int n = static_cast<int>(walk.size());
    std::vector<Vertex> best;
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<Vertex> seq = walk;
        if (dir == 1) std::reverse(seq.begin(), seq.end());
        for (int s = 0; s < n; ++s) {
            std::vector<Vertex> cand(n);
            for (int i = 0; i < n; ++i) cand[i] = seq[(s + i) % n];
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

PlaneGraph PlaneGraph::from_rotation(const std::vector<Vertex>& vertices,
                                     const std::map<Vertex, std::vector<Vertex>>& rotation,
                                     const std::optional<std::vector<Vertex>>& outer_boundary) {
    PlaneGraph g;
    g.verts_ = vertices;
    std::sort(g.verts_.begin(), g.verts_.end());
    if (std::adjacent_find(g.verts_.begin(), g.verts_.end()) != g.verts_.end())
        throw ParseError("duplicate vertex id");
    for (int i = 0; i < static_cast<int>(g.verts_.size()); ++i) g.index_[g.verts_[i]] = i;

    g.rot_.resize(g.verts_.size());
    for (const auto& [v, nbrs] : rotation) {
        if (!g.index_.count(v)) throw ParseError("rotation for unknown vertex " + std::to_string(v));
        g.rot_[g.index_.at(v)] = nbrs;
    }
    int dart_count = 0;
    for (Vertex v : g.verts_) {
        const auto& nbrs = g.rot_[g.index_.at(v)];
        std::set<Vertex> seen;
        for (Vertex w : nbrs) {
            if (w == v) throw ParseError("loop at vertex " + std::to_string(v));
            if (!g.index_.count(w))
                throw ParseError("neighbor " + std::to_string(w) + " of " + std::to_string(v) +
                                 " is not a vertex");
            if (!seen.insert(w).second)
                throw ParseError("parallel edge " + std::to_string(v) + "-" + std::to_string(w));
        }
        dart_count += static_cast<int>(nbrs.size());
    }
    for (Vertex v : g.verts_) {
        for (Vertex w : g.rot_[g.index_.at(v)]) {
            const auto& back = g.rot_[g.index_.at(w)];
            if (std::count(back.begin(), back.end(), v) != 1)
                throw AsymmetricAdjacency("edge " + std::to_string(v) + "-" + std::to_string(w) +
                                          " is not symmetric");
        }
    }
    g.edge_count_ = dart_count / 2;

    g.trace_faces();
    g.check_euler();

    if (outer_boundary) {
        std::vector<Vertex> want = canonical_cycle(*outer_boundary);
        g.outer_face_ = -1;
        for (const Face& f : g.faces_) {
            if (canonical_cycle(f.vertex_walk()) == want) {
                g.outer_face_ = f.id;
                break;
            }
        }
        if (g.outer_face_ < 0) throw ParseError("outer_face does not match any traced face");
    } else if (!g.faces_.empty()) {
        int best = 0;
        std::vector<Vertex> best_code = canonical_cycle(g.faces_[0].vertex_walk());
        for (int i = 1; i < static_cast<int>(g.faces_.size()); ++i) {
            std::vector<Vertex> code = canonical_cycle(g.faces_[i].vertex_walk());
            if (code < best_code) {
                best = i;
                best_code = std::move(code);
            }
        }
        g.outer_face_ = best;
    }
    return g;
}

void PlaneGraph::trace_faces() {
    faces_.clear();
    dart_face_.clear();
    vertex_faces_.assign(verts_.size(), {});
    // successor of dart (u,v): (v, w) with w following u clockwise in rot(v)
    std::set<Dart> visited;
    for (Vertex u : verts_) {
        for (Vertex v : rot_[index_.at(u)]) {
            Dart start{u, v};
            if (visited.count(start)) continue;
            Face f;
            f.id = static_cast<int>(faces_.size());
            Dart d = start;
            do {
                visited.insert(d);
                f.boundary.push_back(d);
                dart_face_[d] = f.id;
                const auto& rv = rot_[index_.at(d.to)];
                auto it = std::find(rv.begin(), rv.end(), d.from);
                int pos = static_cast<int>(it - rv.begin());
                Vertex w = rv[(pos + 1) % rv.size()];
                d = Dart{d.to, w};
            } while (!(d == start));
            faces_.push_back(std::move(f));
        }
    }
    for (const Face& f : faces_) {
        std::set<Vertex> on;
        for (const Dart& d : f.boundary) on.insert(d.from);
        for (Vertex v : on) vertex_faces_[index_.at(v)].push_back(f.id);
    }
}

void PlaneGraph::check_euler() const {
    long long total_len = 0;
    for (const Face& f : faces_) total_len += f.length();
    if (total_len != 2LL * edge_count_)
        throw NonPlanarEmbedding("face lengths do not sum to 2|E|");

    for (const auto& comp : components()) {
        std::set<Vertex> in(comp.begin(), comp.end());
        long long e = 0;
        for (Vertex v : comp) e += degree(v);
        e /= 2;
        std::set<int> comp_faces;
        for (Vertex v : comp)
            for (int fid : vertex_faces_[index_.at(v)]) comp_faces.insert(fid);
        long long f = comp_faces.empty() ? 1 : static_cast<long long>(comp_faces.size());
        if (static_cast<long long>(comp.size()) - e + f != 2)
            throw NonPlanarEmbedding("Euler check failed: rotation system is not genus 0");
    }
}

bool PlaneGraph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = rot_[idx(u)];
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::vector<Edge> PlaneGraph::edges() const {
    std::vector<Edge> out;
    for (Vertex u : verts_)
        for (Vertex v : neighbors(u))
            if (u < v) out.push_back({u, v});
    std::sort(out.begin(), out.end());
    return out;
}

int PlaneGraph::face_of_dart(Vertex u, Vertex v) const {
    auto it = dart_face_.find(Dart{u, v});
    if (it == dart_face_.end()) throw PreconditionFailed("dart not in graph");
    return it->second;
}

std::vector<std::vector<Vertex>> PlaneGraph::components() const {
    std::vector<std::vector<Vertex>> comps;
    std::set<Vertex> seen;
    for (Vertex s : verts_) {
        if (seen.count(s)) continue;
        std::vector<Vertex> comp;
        std::deque<Vertex> q{s};
        seen.insert(s);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            comp.push_back(x);
            for (Vertex y : neighbors(x))
                if (seen.insert(y).second) q.push_back(y);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool PlaneGraph::connected() const {
    return vertex_count() <= 1 || components().size() == 1;
}

bool PlaneGraph::two_connected() const {
    if (vertex_count() < 3 || !connected()) return false;
    return blocks(*this).cut_vertices.empty();
}

std::optional<int> PlaneGraph::girth() const {
    // BFS from every root; a non-tree edge (x,y) seen from root r bounds a
    // cycle of length dist[x]+dist[y]+1, and the minimum over roots is exact.
    int best = -1;
    for (Vertex r : verts_) {
        std::map<Vertex, int> dist, parent;
        std::deque<Vertex> q{r};
        dist[r] = 0;
        parent[r] = -1;
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : neighbors(x)) {
                if (!dist.count(y)) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                } else if (y != parent[x] && parent[y] != x) {
                    int len = dist[x] + dist[y] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

PlaneGraph PlaneGraph::induced(const std::vector<Vertex>& keep,
                               const std::optional<std::vector<Vertex>>& outer_boundary) const {
    std::set<Vertex> in(keep.begin(), keep.end());
    std::vector<Vertex> vs(in.begin(), in.end());
    std::map<Vertex, std::vector<Vertex>> rot;
    for (Vertex v : vs) {
        if (!has_vertex(v)) throw PreconditionFailed("induced: unknown vertex");
        std::vector<Vertex> kept;
        for (Vertex w : neighbors(v))
            if (in.count(w)) kept.push_back(w);
        rot[v] = std::move(kept);
    }
    if (outer_boundary) return from_rotation(vs, rot, outer_boundary);

    // Deleting vertices only merges regions, so the new face lying on the
    // same side of a surviving outer-boundary dart contains the old outer
    // region; designate it as the new outer face.
    PlaneGraph out = from_rotation(vs, rot);
    if (outer_face_ >= 0 && !out.faces_.empty()) {
        for (const Dart& d : faces_[outer_face_].boundary) {
            if (!in.count(d.from) || !in.count(d.to)) continue;
            out.outer_face_ = out.face_of_dart(d.from, d.to);
            break;
        }
    }
    return out;
}

SubgraphRef SubgraphRef::of(const PlaneGraph& g, std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (Vertex v : vertices)
        if (!g.has_vertex(v))
            throw PreconditionFailed("subgraph vertex " + std::to_string(v) + " not in host");
    return SubgraphRef{&g, std::move(vertices)};
}

SubgraphRef SubgraphRef::with_edges(const PlaneGraph& g, std::vector<Vertex> vertices,
                                    const std::vector<Edge>& edges) {
    SubgraphRef ref = of(g, std::move(vertices));
    std::vector<Edge> want = ref.induced_edges();
    std::vector<Edge> got;
    for (const Edge& e : edges) got.push_back(make_edge(e.first, e.second));
    std::sort(got.begin(), got.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    if (got != want)
        throw NotInduced("edge set differs from the induced edge set of the host");
    return ref;
}

bool SubgraphRef::contains(Vertex v) const {
    return std::binary_search(verts.begin(), verts.end(), v);
}

std::vector<Vertex> SubgraphRef::neighbors_in(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : host->neighbors(v))
        if (contains(w)) out.push_back(w);
    return out;
}

std::vector<Edge> SubgraphRef::induced_edges() const {
    std::vector<Edge> out;
    for (Vertex u : verts)
        for (Vertex w : neighbors_in(u))
            if (u < w) out.push_back({u, w});
    std::sort(out.begin(), out.end());
    return out;
}

bool SubgraphRef::connected() const {
    if (verts.empty()) return true;
    std::set<Vertex> seen{verts[0]};
    std::deque<Vertex> q{verts[0]};
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        for (Vertex y : neighbors_in(x))
            if (seen.insert(y).second) q.push_back(y);
    }
    return seen.size() == verts.size();
}

ZMarker ZMarker::six_cycle(const PlaneGraph& g, std::vector<Vertex> cycle) {
    if (cycle.size() != 6) throw PreconditionFailed("Z cycle must have six vertices");
    for (int i = 0; i < 6; ++i)
        if (!g.adjacent(cycle[i], cycle[(i + 1) % 6]))
            throw PreconditionFailed("Z cycle is not a cycle of the graph");
    std::set<Vertex> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != 6) throw PreconditionFailed("Z cycle has repeated vertices");
    return ZMarker{Kind::SixCycle, canonical_cycle(cycle)};
}

bool ZMarker::contains(Vertex v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
}

namespace {

// Hopcroft-Tarjan lowpoint block decomposition with an explicit edge stack.
struct BlockFinder {
    const PlaneGraph& g;
    std::map<Vertex, int> num, low;
    std::vector<Edge> stack;
    std::vector<std::vector<Vertex>> block_sets;
    std::set<Vertex> cuts;
    int counter = 0;

    explicit BlockFinder(const PlaneGraph& graph) : g(graph) {}

    void pop_block(const Edge& until) {
        std::set<Vertex> vs;
        while (true) {
            Edge e = stack.back();
            stack.pop_back();
            vs.insert(e.first);
            vs.insert(e.second);
            if (e == until) break;
        }
        block_sets.emplace_back(vs.begin(), vs.end());
    }

    void dfs(Vertex root) {
        // iterative to keep deep hosts safe
        struct Frame {
            Vertex v, parent;
            size_t next_child = 0;
            int child_count = 0;
        };
        std::vector<Frame> st;
        st.push_back({root, -1});
        num[root] = low[root] = counter++;
        int root_children = 0;
        while (!st.empty()) {
            Frame& fr = st.back();
            const auto& nbrs = g.neighbors(fr.v);
            if (fr.next_child < nbrs.size()) {
                Vertex w = nbrs[fr.next_child++];
                if (w == fr.parent) continue;
                if (!num.count(w)) {
                    stack.push_back(make_edge(fr.v, w));
                    num[w] = low[w] = counter++;
                    fr.child_count++;
                    if (fr.v == root) root_children++;
                    st.push_back({w, fr.v});
                } else if (num[w] < num[fr.v]) {
                    stack.push_back(make_edge(fr.v, w));
                    low[fr.v] = std::min(low[fr.v], num[w]);
                }
            } else {
                Frame done = fr;
                st.pop_back();
                if (!st.empty()) {
                    Frame& up = st.back();
                    low[up.v] = std::min(low[up.v], low[done.v]);
                    if (low[done.v] >= num[up.v]) {
                        pop_block(make_edge(up.v, done.v));
                        if (up.parent != -1) cuts.insert(up.v);
                    }
                }
            }
        }
        if (root_children > 1) cuts.insert(root);
    }
};

}  // namespace

BlockDecomposition blocks(const PlaneGraph& g) {
    if (!g.connected()) throw Disconnected("block decomposition needs a connected graph");
    BlockDecomposition out;
    if (g.vertex_count() == 0) return out;
    if (g.vertex_count() == 1) {
        out.blocks.push_back(SubgraphRef::of(g, {g.vertices()[0]}));
        return out;
    }
    BlockFinder bf(g);
    bf.dfs(g.vertices()[0]);
    // A root with more than one child is a cut vertex; handled in dfs.  Root
    // with exactly one child never is.
    std::sort(bf.block_sets.begin(), bf.block_sets.end());
    for (auto& vs : bf.block_sets) out.blocks.push_back(SubgraphRef::of(g, vs));
    out.cut_vertices.assign(bf.cuts.begin(), bf.cuts.end());
    return out;
}

std::vector<SixCycleInfo> six_cycles(const PlaneGraph& g) {
    auto gi = g.girth();
    if (gi && *gi < 6) throw GirthTooSmall("six_cycles requires girth >= 6");

    std::set<std::vector<Vertex>> found;
    for (Vertex a : g.vertices()) {
        // paths a -> x1 -> ... -> x5 -> a with min vertex a and x1 < x5
        std::vector<Vertex> path{a};
        std::function<void(Vertex)> extend = [&](Vertex cur) {
            if (path.size() == 6) {
                if (g.adjacent(cur, a) && path[1] < path.back()) found.insert(path);
                return;
            }
            for (Vertex y : g.neighbors(cur)) {
                if (y <= a) continue;
                if (std::find(path.begin(), path.end(), y) != path.end()) continue;
                path.push_back(y);
                extend(y);
                path.pop_back();
            }
        };
        extend(a);
    }

    std::set<std::vector<Vertex>> facial_codes;
    std::map<std::vector<Vertex>, int> face_by_code;
    for (const Face& f : g.faces()) {
        if (f.length() != 6) continue;
        std::vector<Vertex> walk = f.vertex_walk();
        std::set<Vertex> distinct(walk.begin(), walk.end());
        if (distinct.size() != 6) continue;
        std::vector<Vertex> code = canonical_cycle(walk);
        facial_codes.insert(code);
        face_by_code.emplace(code, f.id);
    }

    std::vector<SixCycleInfo> out;
    for (const auto& cyc : found) {
        std::vector<Vertex> code = canonical_cycle(cyc);
        // girth >= 6 makes every 6-cycle induced; check it anyway
        int edge_cnt = 0;
        for (size_t i = 0; i < code.size(); ++i)
            for (size_t j = i + 1; j < code.size(); ++j)
                if (g.adjacent(code[i], code[j])) edge_cnt++;
        if (edge_cnt != 6)
            throw PreconditionFailed("non-induced 6-cycle found despite girth gate");
        SixCycleInfo info;
        info.cycle = code;
        info.facial = facial_codes.count(code) > 0;
        if (info.facial) info.face_id = face_by_code.at(code);
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(),
              [](const SixCycleInfo& a, const SixCycleInfo& b) { return a.cycle < b.cycle; });
    return out;
}

std::vector<Vertex> cycle_interior(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
    const int n = static_cast<int>(cycle.size());
    std::set<Edge> cyc_edges;
    for (int i = 0; i < n; ++i) {
        Edge e = make_edge(cycle[i], cycle[(i + 1) % n]);
        if (!g.adjacent(e.first, e.second))
            throw PreconditionFailed("cycle_interior: not a cycle of the graph");
        cyc_edges.insert(e);
    }
    // Union faces across every non-cycle edge; the cycle leaves exactly two
    // components, and "inside" is the one missing the outer face.
    std::vector<int> parent(g.face_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : g.edges()) {
        if (cyc_edges.count(e)) continue;
        int fa = find(g.face_of_dart(e.first, e.second));
        int fb = find(g.face_of_dart(e.second, e.first));
        parent[fa] = fb;
    }
    int outside = find(g.outer_face_id());
    std::set<Vertex> on_cycle(cycle.begin(), cycle.end());
    std::set<Vertex> inside;
    for (Vertex v : g.vertices()) {
        if (on_cycle.count(v)) continue;
        for (int fid : g.faces_at(v)) {
            if (find(fid) != outside) {
                inside.insert(v);
                break;
            }
        }
    }
    return {inside.begin(), inside.end()};
}

std::optional<ZMarker> minimal_nonfacial_six_cycle(const PlaneGraph& g) {
    std::vector<std::pair<std::vector<Vertex>, std::set<Vertex>>> candidates;
    for (const SixCycleInfo& info : six_cycles(g)) {
        if (info.facial) continue;
        std::vector<Vertex> interior = cycle_interior(g, info.cycle);
        candidates.push_back({info.cycle, {interior.begin(), interior.end()}});
    }
    if (candidates.empty()) return std::nullopt;

    std::vector<Vertex> best;
    for (const auto& [cyc, inter] : candidates) {
        bool minimal = true;
        for (const auto& [other_cyc, other_inter] : candidates) {
            if (other_cyc == cyc) continue;
            bool strict_subset = other_inter.size() < inter.size() &&
                                 std::includes(inter.begin(), inter.end(), other_inter.begin(),
                                               other_inter.end());
            if (strict_subset) {
                minimal = false;
                break;
            }
        }
        if (minimal && (best.empty() || cyc < best)) best = cyc;
    }
    return ZMarker::six_cycle(g, best);
}

PlaneGraph interior_closure(const PlaneGraph& g, const ZMarker& z) {
    if (z.kind != ZMarker::Kind::SixCycle)
        throw PreconditionFailed("interior_closure needs a six-cycle Z");
    bool facial = false;
    for (const SixCycleInfo& info : six_cycles(g))
        if (info.cycle == z.verts) facial = info.facial;
    if (facial) throw FacialCycle("cycle bounds a face; no interior to close over");

    std::vector<Vertex> keep = cycle_interior(g, z.verts);
    keep.insert(keep.end(), z.verts.begin(), z.verts.end());
    PlaneGraph closure = g.induced(keep, z.verts);

    if (!closure.two_connected())
        throw PreconditionFailed("interior closure is not 2-connected (Z was not minimal?)");
    for (const SixCycleInfo& info : six_cycles(closure))
        if (!info.facial)
            throw PreconditionFailed(
                "interior closure has a non-facial 6-cycle (Z was not minimal)");
    return closure;
}

namespace {

bool nice_internal(const PlaneGraph& g, const ZMarker& z, Vertex x) {
    return g.degree(x) == 3 && !z.contains(x);
}

}  // namespace

std::optional<int> nice_distance(const PlaneGraph& g, const ZMarker& z, Vertex u, Vertex v) {
    if (u == v) throw PreconditionFailed("nice_distance is undefined for u == v");
    std::map<Vertex, int> dist{{u, 0}};
    std::deque<Vertex> q{u};
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        for (Vertex y : g.neighbors(x)) {
            if (y == v) return dist[x] + 1;
            if (!dist.count(y) && nice_internal(g, z, y)) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> nice_path(const PlaneGraph& g, const ZMarker& z, Vertex u,
                                             Vertex v) {
    if (u == v) throw PreconditionFailed("nice_path is undefined for u == v");
    // suffix distances toward v over qualifying internal vertices
    std::map<Vertex, int> suffix{{v, 0}};
    std::deque<Vertex> q{v};
    while (!q.empty()) {
        Vertex y = q.front();
        q.pop_front();
        for (Vertex x : g.neighbors(y)) {
            if (!suffix.count(x) && nice_internal(g, z, x)) {
                suffix[x] = suffix[y] + 1;
                q.push_back(x);
            }
        }
    }
    std::optional<int> total;
    if (g.adjacent(u, v)) total = 1;
    for (Vertex y : g.neighbors(u)) {
        if (y != v && suffix.count(y) && nice_internal(g, z, y)) {
            int cand = 1 + suffix[y];
            if (!total || cand < *total) total = cand;
        }
    }
    if (!total) return std::nullopt;

    std::vector<Vertex> path{u};
    Vertex cur = u;
    int remaining = *total;
    while (remaining > 0) {
        Vertex next = -1;
        for (Vertex y : g.neighbors(cur)) {
            if (remaining == 1) {
                if (y == v) {
                    next = y;
                    break;
                }
            } else if (y != v && nice_internal(g, z, y) && suffix.count(y) &&
                       suffix[y] == remaining - 1) {
                if (next < 0 || y < next) next = y;
            }
        }
        path.push_back(next);
        cur = next;
        --remaining;
    }
    return path;
}

std::optional<int> nice_face_distance(const PlaneGraph& g, const ZMarker& z, int face_id,
                                      Vertex u) {
    const Face& f = g.face(face_id);
    std::set<Vertex> on;
    for (const Dart& d : f.boundary) on.insert(d.from);
    if (on.count(u)) return 0;
    std::optional<int> best;
    for (Vertex v : on) {
        if (!nice_internal(g, z, v)) continue;  // degree-3 vertices outside Z
        auto d = nice_distance(g, z, v, u);
        if (d && (!best || *d < *best)) best = d;
    }
    return best;
}

}  // namespace girth6
