#include "girth6/coloring.hpp"

#include <algorithm>
#include <deque>

namespace girth6 {

SimpleGraph SimpleGraph::from(const PlaneGraph& g) {
    SimpleGraph s;
    s.verts = g.vertices();
    for (Vertex v : s.verts) {
        std::vector<Vertex> nb = g.neighbors(v);
        std::sort(nb.begin(), nb.end());
        s.adj[v] = std::move(nb);
    }
    return s;
}

SimpleGraph SimpleGraph::from(const SubgraphRef& h) {
    SimpleGraph s;
    s.verts = h.verts;
    for (Vertex v : s.verts) {
        std::vector<Vertex> nb = h.neighbors_in(v);
        std::sort(nb.begin(), nb.end());
        s.adj[v] = std::move(nb);
    }
    return s;
}

SimpleGraph SimpleGraph::from_edges(std::vector<Vertex> vertices,
                                    const std::vector<Edge>& edges) {
    SimpleGraph s;
    std::sort(vertices.begin(), vertices.end());
    s.verts = std::move(vertices);
    for (Vertex v : s.verts) s.adj[v] = {};
    for (const Edge& e : edges) {
        s.adj.at(e.first).push_back(e.second);
        s.adj.at(e.second).push_back(e.first);
    }
    for (auto& [v, nb] : s.adj) std::sort(nb.begin(), nb.end());
    return s;
}

bool SimpleGraph::connected() const {
    if (verts.empty()) return true;
    std::set<Vertex> seen{verts[0]};
    std::deque<Vertex> q{verts[0]};
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        for (Vertex y : adj.at(x))
            if (seen.insert(y).second) q.push_back(y);
    }
    return seen.size() == verts.size();
}

std::pair<std::vector<std::vector<Vertex>>, std::vector<Vertex>> SimpleGraph::blocks_and_cuts()
    const {
    std::map<Vertex, int> num, low;
    std::vector<Edge> stack;
    std::vector<std::vector<Vertex>> block_sets;
    std::set<Vertex> cuts;
    int counter = 0;

    auto pop_block = [&](const Edge& until) {
        std::set<Vertex> vs;
        while (true) {
            Edge e = stack.back();
            stack.pop_back();
            vs.insert(e.first);
            vs.insert(e.second);
            if (e == until) break;
        }
        block_sets.emplace_back(vs.begin(), vs.end());
    };

    struct Frame {
        Vertex v, parent;
        size_t next = 0;
    };
    for (Vertex root : verts) {
        if (num.count(root)) continue;
        if (adj.at(root).empty()) {
            block_sets.push_back({root});
            num[root] = counter++;
            continue;
        }
        std::vector<Frame> st{{root, -1}};
        num[root] = low[root] = counter++;
        int root_children = 0;
        while (!st.empty()) {
            Frame& fr = st.back();
            const auto& nbrs = adj.at(fr.v);
            if (fr.next < nbrs.size()) {
                Vertex w = nbrs[fr.next++];
                if (w == fr.parent) continue;
                if (!num.count(w)) {
                    stack.push_back(make_edge(fr.v, w));
                    num[w] = low[w] = counter++;
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
    std::sort(block_sets.begin(), block_sets.end());
    return {block_sets, {cuts.begin(), cuts.end()}};
}

ListAssignment ListAssignment::uniform(const std::vector<Vertex>& vs,
                                       const std::set<Color>& colors) {
    ListAssignment L;
    for (Vertex v : vs) L.lists[v] = colors;
    return L;
}

bool is_proper_list_coloring(const SimpleGraph& g, const ListAssignment& L, const Coloring& c) {
    for (Vertex v : g.verts) {
        auto it = c.colors.find(v);
        if (it == c.colors.end()) return false;
        if (!L.at(v).count(it->second)) return false;
        for (Vertex w : g.adj.at(v))
            if (c.colors.at(w) == it->second) return false;
    }
    return true;
}

Rational WeightedRequest::total() const {
    Rational t;
    for (const auto& [pair, w] : weights) t += w;
    return t;
}

Rational WeightedRequest::weight(Vertex v, Color c) const {
    auto it = weights.find({v, c});
    return it == weights.end() ? Rational(0) : it->second;
}

WeightedRequest WeightedRequest::from_request(const std::map<Vertex, Color>& r) {
    WeightedRequest w;
    for (const auto& [v, c] : r) w.weights[{v, c}] = Rational(1);
    return w;
}

void WeightedRequest::validate_against(const ListAssignment& L) const {
    for (const auto& [pair, w] : weights) {
        auto it = L.lists.find(pair.first);
        if (it == L.lists.end() || !it->second.count(pair.second))
            throw PreconditionFailed("weighted pair uses a color outside the vertex list");
        if (w.sign() < 0) throw PreconditionFailed("weights must be nonnegative");
    }
}

namespace {

// Shared backtracking core.  Always branches on the uncolored vertex with the
// smallest remaining list (ties by id), which gives unit propagation for free;
// colors are tried in ascending order.  Lists are bitmasks over the sorted
// color universe (the universe must fit in 64 colors; list instances here are
// tiny), undo is trail-based.
struct Solver {
    const SimpleGraph& g;
    int n;
    std::vector<Color> universe;                // sorted distinct colors
    std::vector<std::uint64_t> remaining;       // per vertex index
    std::vector<int> vertex_of;                 // index -> vertex id
    std::map<Vertex, int> index_of;
    std::vector<std::vector<int>> adj_idx;
    std::vector<int> color_of;                  // -1 while uncolored
    int uncolored;

    Solver(const SimpleGraph& graph, const ListAssignment& L)
        : g(graph), n(static_cast<int>(graph.verts.size())) {
        std::set<Color> colors;
        for (Vertex v : g.verts) {
            const auto& lst = L.at(v);
            colors.insert(lst.begin(), lst.end());
        }
        universe.assign(colors.begin(), colors.end());
        if (universe.size() > 64)
            throw PreconditionFailed("color universe above 64 is not supported");
        for (int i = 0; i < n; ++i) index_of[g.verts[i]] = i;
        vertex_of = g.verts;
        remaining.assign(n, 0);
        for (int i = 0; i < n; ++i)
            for (Color c : L.at(g.verts[i]))
                remaining[i] |= 1ULL << color_index(c);
        adj_idx.resize(n);
        for (int i = 0; i < n; ++i)
            for (Vertex w : g.adj.at(g.verts[i])) adj_idx[i].push_back(index_of.at(w));
        color_of.assign(n, -1);
        uncolored = n;
    }

    int color_index(Color c) const {
        return static_cast<int>(std::lower_bound(universe.begin(), universe.end(), c) -
                                universe.begin());
    }

    bool solve() {
        if (uncolored == 0) return true;
        int best = -1, best_count = 65;
        for (int i = 0; i < n; ++i) {
            if (color_of[i] >= 0) continue;
            int cnt = __builtin_popcountll(remaining[i]);
            if (cnt < best_count) {
                best = i;
                best_count = cnt;
            }
        }
        std::uint64_t opts = remaining[best];
        while (opts) {
            int ci = __builtin_ctzll(opts);
            opts &= opts - 1;
            color_of[best] = ci;
            uncolored--;
            std::vector<int> shrunk;
            for (int w : adj_idx[best]) {
                if (color_of[w] < 0 && (remaining[w] >> ci) & 1) {
                    remaining[w] &= ~(1ULL << ci);
                    shrunk.push_back(w);
                }
            }
            if (solve()) return true;
            for (int w : shrunk) remaining[w] |= 1ULL << ci;
            color_of[best] = -1;
            uncolored++;
        }
        return false;
    }

    std::map<Vertex, Color> extract() const {
        std::map<Vertex, Color> out;
        for (int i = 0; i < n; ++i) out[vertex_of[i]] = universe[color_of[i]];
        return out;
    }
};

}  // namespace

std::optional<Coloring> find_coloring(const SimpleGraph& g, const ListAssignment& L) {
    for (Vertex v : g.verts)
        if (!L.lists.count(v)) throw PreconditionFailed("list assignment misses a vertex");
    for (Vertex v : g.verts)
        if (L.at(v).empty()) return std::nullopt;
    Solver s(g, L);
    if (!s.solve()) return std::nullopt;
    return Coloring{s.extract()};
}

GallaiVerdict gallai_certificate(const SimpleGraph& h, const ListAssignment& L) {
    if (!h.connected()) throw PreconditionFailed("gallai_certificate needs a connected graph");
    for (Vertex v : h.verts)
        if (L.size_at(v) < h.degree(v))
            throw PreconditionFailed("gallai_certificate needs |L(u)| >= deg(u) everywhere");

    for (Vertex v : h.verts)
        if (L.size_at(v) > h.degree(v)) return GallaiVerdict::Guaranteed;

    auto [block_sets, cuts] = h.blocks_and_cuts();
    for (const auto& bs : block_sets) {
        std::set<Vertex> in(bs.begin(), bs.end());
        int n = static_cast<int>(bs.size());
        long long edges = 0;
        bool all_deg2 = true;
        for (Vertex v : bs) {
            int d = 0;
            for (Vertex w : h.adj.at(v))
                if (in.count(w)) d++;
            edges += d;
            if (d != 2) all_deg2 = false;
        }
        edges /= 2;
        bool complete = edges == static_cast<long long>(n) * (n - 1) / 2;
        bool odd_cycle = all_deg2 && n >= 3 && n % 2 == 1 && edges == n;
        if (!complete && !odd_cycle) return GallaiVerdict::Guaranteed;
    }
    return GallaiVerdict::Unknown;
}

GallaiVerdict gallai_certificate(const SubgraphRef& h, const ListAssignment& L) {
    return gallai_certificate(SimpleGraph::from(h), L);
}

std::optional<std::pair<Coloring, Rational>> max_weighted_request(const SimpleGraph& g,
                                                                  const ListAssignment& L,
                                                                  const WeightedRequest& w) {
    for (Vertex v : g.verts)
        if (!L.lists.count(v)) throw PreconditionFailed("list assignment misses a vertex");
    w.validate_against(L);
    std::optional<Coloring> best_coloring;
    Rational best_value;

    // branch over vertices in id order; bound adds per-vertex maxima of the
    // weights still reachable
    std::map<Vertex, std::set<Color>> remaining;
    for (Vertex v : g.verts) remaining[v] = L.at(v);

    std::function<void(size_t, Rational)> rec = [&](size_t i, Rational current) {
        if (i == g.verts.size()) {
            if (!best_coloring || current > best_value) {
                Coloring c;
                for (Vertex v : g.verts) c.colors[v] = *remaining.at(v).begin();
                // remaining holds singletons for assigned vertices here; see below
                best_coloring = c;
                best_value = current;
            }
            return;
        }
        Rational optimistic = current;
        for (size_t j = i; j < g.verts.size(); ++j) {
            Vertex v = g.verts[j];
            Rational mx;
            for (Color c : remaining.at(v)) mx = std::max(mx, w.weight(v, c));
            optimistic += mx;
        }
        if (best_coloring && optimistic <= best_value) return;

        Vertex v = g.verts[i];
        std::set<Color> opts = remaining.at(v);
        for (Color c : opts) {
            std::vector<Vertex> shrunk;
            bool dead = false;
            for (Vertex x : g.adj.at(v)) {
                if (x > v) {  // only later vertices still hold sets
                    if (remaining.at(x).erase(c)) shrunk.push_back(x);
                    if (remaining.at(x).empty()) dead = true;
                }
            }
            remaining[v] = {c};
            if (!dead) rec(i + 1, current + w.weight(v, c));
            for (Vertex x : shrunk) remaining[x].insert(c);
        }
        remaining[v] = opts;
    };
    rec(0, Rational(0));
    if (!best_coloring) return std::nullopt;
    return std::make_pair(*best_coloring, best_value);
}

std::vector<Coloring> enumerate_colorings(const SimpleGraph& g, const ListAssignment& L,
                                          long long cap) {
    if (cap <= 0) throw PreconditionFailed("cap must be positive");
    std::vector<Coloring> out;
    std::map<Vertex, Color> partial;

    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == g.verts.size()) {
            if (static_cast<long long>(out.size()) >= cap)
                throw CapExceeded("more than " + std::to_string(cap) + " colorings",
                                  cap + 1);
            Coloring c;
            c.colors = partial;
            out.push_back(std::move(c));
            return;
        }
        Vertex v = g.verts[i];
        for (Color c : L.at(v)) {
            bool ok = true;
            for (Vertex x : g.adj.at(v)) {
                auto it = partial.find(x);
                if (it != partial.end() && it->second == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            partial[v] = c;
            rec(i + 1);
            partial.erase(v);
        }
    };
    rec(0);
    return out;
}

}  // namespace girth6
