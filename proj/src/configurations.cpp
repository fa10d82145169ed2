#include "girth6/configurations.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace girth6 {

std::string to_string(ConfigurationHit::Family f) {
    switch (f) {
        case ConfigurationHit::Family::DegreeLe1: return "degree<=1";
        case ConfigurationHit::Family::NicePathPair: return "nice-path-pair";
        case ConfigurationHit::Family::Star: return "star";
        case ConfigurationHit::Family::TwoFace: return "two-face";
        case ConfigurationHit::Family::ThreeFace: return "three-face";
    }
    return "?";
}

std::optional<ConfigurationHit> find_degree_le1(const PlaneGraph& g, const ZMarker& z) {
    for (Vertex v : g.vertices()) {
        if (z.contains(v) || g.degree(v) > 1) continue;
        ConfigurationHit hit;
        hit.family = ConfigurationHit::Family::DegreeLe1;
        hit.subgraph = SubgraphRef::of(g, {v});
        hit.anchor_vertices = {v};
        hit.size_bound_claimed = 1;
        return hit;
    }
    return std::nullopt;
}

namespace {

bool path_is_induced(const PlaneGraph& g, const std::vector<Vertex>& path) {
    SubgraphRef ref = SubgraphRef::of(g, path);
    return ref.induced_edges().size() == path.size() - 1;
}

// Shortest Z-nice paths from u to v in lex order; returns the first induced
// one.  Shortest nice paths are in fact always induced (a chord would shortcut
// them), but the check is cheap and kept explicit.
std::optional<std::vector<Vertex>> induced_nice_path(const PlaneGraph& g, const ZMarker& z,
                                                     Vertex u, Vertex v) {
    auto first = nice_path(g, z, u, v);
    if (!first) return std::nullopt;
    if (path_is_induced(g, *first)) return first;

    // fall back to enumerating all shortest nice paths in lex order
    int target = static_cast<int>(first->size()) - 1;
    std::map<Vertex, int> suffix{{v, 0}};
    std::deque<Vertex> bfs{v};
    while (!bfs.empty()) {
        Vertex y = bfs.front();
        bfs.pop_front();
        for (Vertex x : g.neighbors(y)) {
            if (!suffix.count(x) && g.degree(x) == 3 && !z.contains(x)) {
                suffix[x] = suffix[y] + 1;
                bfs.push_back(x);
            }
        }
    }
    std::optional<std::vector<Vertex>> found;
    long long visited = 0;
    std::vector<Vertex> path{u};
    std::function<bool(Vertex, int)> walk = [&](Vertex cur, int remaining) {
        if (++visited > 100000) return true;  // give up; caller moves on
        if (remaining == 0) {
            if (path_is_induced(g, path)) {
                found = path;
                return true;
            }
            return false;
        }
        std::vector<Vertex> nexts;
        for (Vertex y : g.neighbors(cur)) {
            if (remaining == 1) {
                if (y == v) nexts.push_back(y);
            } else if (y != v && g.degree(y) == 3 && !z.contains(y) && suffix.count(y) &&
                       suffix[y] == remaining - 1 &&
                       std::find(path.begin(), path.end(), y) == path.end()) {
                nexts.push_back(y);
            }
        }
        std::sort(nexts.begin(), nexts.end());
        for (Vertex y : nexts) {
            path.push_back(y);
            if (walk(y, remaining - 1)) return true;
            path.pop_back();
        }
        return false;
    };
    walk(u, target);
    return found;
}

}  // namespace

std::optional<ConfigurationHit> find_nice_path_pair(const PlaneGraph& g, const ZMarker& z,
                                                    int max_len) {
    if (max_len < 1) throw PreconditionFailed("max_len must be at least 1");
    std::vector<Vertex> deg2;
    for (Vertex v : g.vertices())
        if (g.degree(v) == 2 && !z.contains(v)) deg2.push_back(v);

    for (size_t i = 0; i < deg2.size(); ++i) {
        for (size_t j = i + 1; j < deg2.size(); ++j) {
            Vertex u = deg2[i], v = deg2[j];
            auto d = nice_distance(g, z, u, v);
            if (!d || *d > max_len) continue;
            auto path = induced_nice_path(g, z, u, v);
            if (!path) continue;
            ConfigurationHit hit;
            hit.family = ConfigurationHit::Family::NicePathPair;
            hit.subgraph = SubgraphRef::of(g, *path);
            hit.anchor_vertices = {u, v};
            hit.paths = {*path};
            hit.size_bound_claimed = *d + 1;
            return hit;
        }
    }
    return std::nullopt;
}

std::optional<ConfigurationHit> find_star(const PlaneGraph& g, const ZMarker& z, int max_total) {
    if (max_total < 1) throw PreconditionFailed("max_total must be at least 1");
    for (Vertex center : g.vertices()) {
        if (z.contains(center) || g.degree(center) < 4) continue;
        int need = g.degree(center) - 1;

        std::vector<std::pair<int, Vertex>> reachable;  // (distance, vertex)
        for (Vertex u : g.vertices()) {
            if (u == center || g.degree(u) != 2 || z.contains(u)) continue;
            auto d = nice_distance(g, z, center, u);
            if (d) reachable.push_back({*d, u});
        }
        if (static_cast<int>(reachable.size()) < need) continue;
        std::sort(reachable.begin(), reachable.end());
        long long total = 0;
        std::vector<std::pair<int, Vertex>> picked(reachable.begin(), reachable.begin() + need);
        for (const auto& [d, u] : picked) total += d;
        if (total > max_total) continue;

        std::vector<std::vector<Vertex>> paths;
        std::set<Vertex> seen{center};
        bool disjoint = true;
        for (const auto& [d, u] : picked) {
            auto p = nice_path(g, z, center, u);
            if (!p) {
                disjoint = false;
                break;
            }
            for (size_t idx = 1; idx < p->size(); ++idx)
                if (!seen.insert((*p)[idx]).second) disjoint = false;
            paths.push_back(*p);
        }
        if (disjoint) {
            std::vector<Vertex> hull(seen.begin(), seen.end());
            SubgraphRef ref = SubgraphRef::of(g, hull);
            bool induced = static_cast<long long>(ref.induced_edges().size()) == total;
            if (induced) {
                ConfigurationHit hit;
                hit.family = ConfigurationHit::Family::Star;
                hit.subgraph = ref;
                hit.anchor_vertices = {center};
                for (const auto& [d, u] : picked) hit.anchor_vertices.push_back(u);
                hit.paths = paths;
                hit.size_bound_claimed = 1 + static_cast<int>(total);
                return hit;
            }
        }
        // intersecting or chorded path union: the pair configuration applies
        return find_nice_path_pair(g, z, std::min(max_total, 28));
    }
    return std::nullopt;
}

namespace {

// simple 6-face boundaries as vertex sets, keyed by face id
std::map<int, std::vector<Vertex>> six_face_vertex_sets(const PlaneGraph& g) {
    std::map<int, std::vector<Vertex>> out;
    for (const Face& f : g.faces()) {
        if (f.length() != 6) continue;
        std::vector<Vertex> walk = f.vertex_walk();
        std::set<Vertex> distinct(walk.begin(), walk.end());
        if (distinct.size() != 6) continue;
        out[f.id] = std::vector<Vertex>(distinct.begin(), distinct.end());
    }
    return out;
}

bool faces_share_edge(const PlaneGraph& g, int fa, int fb) {
    for (const Dart& d : g.face(fa).boundary)
        if (g.face_of_dart(d.to, d.from) == fb) return true;
    return false;
}

}  // namespace

std::optional<ConfigurationHit> find_two_faces(const PlaneGraph& g, const ZMarker& z) {
    auto six = six_face_vertex_sets(g);
    auto degrees_ok = [&](const std::vector<Vertex>& vs) {
        for (Vertex v : vs)
            if (g.degree(v) > 3 || z.contains(v)) return false;
        return true;
    };
    for (const auto& [f1, vs1] : six) {
        if (!degrees_ok(vs1)) continue;
        for (const auto& [f2, vs2] : six) {
            if (f1 == f2 || !degrees_ok(vs2)) continue;
            if (!faces_share_edge(g, f1, f2)) continue;
            bool f2_deg2 = false;
            for (Vertex v : vs2)
                if (g.degree(v) == 2) f2_deg2 = true;
            if (!f2_deg2) continue;
            std::set<Vertex> hull(vs1.begin(), vs1.end());
            hull.insert(vs2.begin(), vs2.end());
            ConfigurationHit hit;
            hit.family = ConfigurationHit::Family::TwoFace;
            hit.subgraph = SubgraphRef::of(g, {hull.begin(), hull.end()});
            hit.anchor_faces = {f1, f2};
            hit.size_bound_claimed = 10;
            if (hit.subgraph.size() > 10) continue;  // cannot happen with a shared edge
            return hit;
        }
    }
    return std::nullopt;
}

std::optional<ConfigurationHit> find_three_faces(const PlaneGraph& g, const ZMarker& z) {
    auto six = six_face_vertex_sets(g);
    for (Vertex w : g.vertices()) {
        std::vector<int> at;
        for (int fid : g.faces_at(w))
            if (six.count(fid)) at.push_back(fid);
        std::sort(at.begin(), at.end());
        if (at.size() < 3) continue;
        for (size_t a = 0; a < at.size(); ++a)
            for (size_t b = a + 1; b < at.size(); ++b)
                for (size_t c = b + 1; c < at.size(); ++c) {
                    std::set<Vertex> hull;
                    bool ok = true;
                    for (int fid : {at[a], at[b], at[c]})
                        for (Vertex v : six.at(fid)) {
                            if (g.degree(v) > 3 || z.contains(v)) ok = false;
                            hull.insert(v);
                        }
                    if (!ok || hull.size() > 13) continue;
                    ConfigurationHit hit;
                    hit.family = ConfigurationHit::Family::ThreeFace;
                    hit.subgraph = SubgraphRef::of(g, {hull.begin(), hull.end()});
                    hit.anchor_vertices = {w};
                    hit.anchor_faces = {at[a], at[b], at[c]};
                    hit.size_bound_claimed = 13;
                    return hit;
                }
    }
    return std::nullopt;
}

std::optional<ConfigurationHit> find_any(const PlaneGraph& g, const ZMarker& z, int max_size) {
    if (auto hit = find_degree_le1(g, z)) return hit;
    int cap = std::min(28, max_size - 1);
    if (cap >= 1) {
        if (auto hit = find_nice_path_pair(g, z, cap)) return hit;
        if (auto hit = find_star(g, z, cap)) return hit;
    }
    if (max_size >= 10)
        if (auto hit = find_two_faces(g, z)) return hit;
    if (max_size >= 13)
        if (auto hit = find_three_faces(g, z)) return hit;
    return std::nullopt;
}

ReducibleCertificate structural_certificate(const ConfigurationHit& hit, const PlaneGraph& g,
                                            const ZMarker& z) {
    const SubgraphRef& h = hit.subgraph;
    if (h.host != &g) throw CertificateFailed("hit does not reference this host graph");
    for (Vertex v : h.verts)
        if (z.contains(v)) throw CertificateFailed("subgraph touches Z");
    if (h.size() > hit.size_bound_claimed)
        throw CertificateFailed("subgraph exceeds its claimed size bound");

    std::string why;
    if (!degree_slack_ok(g, h, &why)) throw CertificateFailed("degree slack: " + why);

    ReducibleCertificate cert;
    cert.subgraph = h;
    cert.checked_fix = true;
    cert.degree_slack_ok = true;
    cert.subgraph_size = h.size();

    switch (hit.family) {
        case ConfigurationHit::Family::DegreeLe1: {
            if (h.size() != 1 || g.degree(h.verts[0]) > 1)
                throw CertificateFailed("degree<=1 evidence does not match the subgraph");
            cert.kind = ReducibleCertificate::Kind::DegreeLe1;
            cert.evidence = {{"vertex", h.verts[0]}, {"host_degree", g.degree(h.verts[0])}};
            return cert;
        }
        case ConfigurationHit::Family::NicePathPair:
        case ConfigurationHit::Family::Star: {
            if (!tree_peel_ok(g, h, &why))
                throw CertificateFailed("greedy tree peeling fails: " + why);
            // every logged path must be Z-nice in the host
            for (const auto& p : hit.paths) {
                for (size_t i = 1; i + 1 < p.size(); ++i)
                    if (g.degree(p[i]) != 3 || z.contains(p[i]))
                        throw CertificateFailed("logged path is not Z-nice");
            }
            cert.kind = hit.family == ConfigurationHit::Family::NicePathPair
                            ? ReducibleCertificate::Kind::Path
                            : ReducibleCertificate::Kind::Star;
            nlohmann::json paths = nlohmann::json::array();
            for (const auto& p : hit.paths) paths.push_back(p);
            cert.evidence = {{"anchors", hit.anchor_vertices},
                             {"paths", paths},
                             {"tree_peel", true}};
            return cert;
        }
        case ConfigurationHit::Family::TwoFace:
        case ConfigurationHit::Family::ThreeFace: {
            // the subgraph must be exactly the vertices incident with the faces
            std::set<Vertex> expect;
            for (int fid : hit.anchor_faces)
                for (const Dart& d : g.face(fid).boundary) expect.insert(d.from);
            if (std::vector<Vertex>(expect.begin(), expect.end()) != h.verts)
                throw CertificateFailed("subgraph is not the face-incident vertex set");
            if (!gallai_style_ok(g, h, &why))
                throw CertificateFailed("degree-colorability replay fails: " + why);
            cert.kind = hit.family == ConfigurationHit::Family::TwoFace
                            ? ReducibleCertificate::Kind::TwoFace
                            : ReducibleCertificate::Kind::ThreeFace;
            cert.evidence = {{"faces", hit.anchor_faces}, {"gallai_replay", true}};
            return cert;
        }
    }
    throw CertificateFailed("unknown configuration family");
}

}  // namespace girth6
