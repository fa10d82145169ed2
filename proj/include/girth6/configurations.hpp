#pragma once

#include <optional>
#include <vector>

#include "girth6/plane_graph.hpp"
#include "girth6/reducibility.hpp"

namespace girth6 {

struct ConfigurationHit {
    enum class Family { DegreeLe1, NicePathPair, Star, TwoFace, ThreeFace };
    Family family = Family::DegreeLe1;
    SubgraphRef subgraph;
    std::vector<Vertex> anchor_vertices;          // path: {u,v}; star: {center, leaves...}
    std::vector<int> anchor_faces;                // two-face / three-face
    std::vector<std::vector<Vertex>> paths;       // nice paths backing path/star hits
    int size_bound_claimed = 0;
};

std::string to_string(ConfigurationHit::Family f);

// Smallest-id vertex of degree <= 1 outside Z.
std::optional<ConfigurationHit> find_degree_le1(const PlaneGraph& g, const ZMarker& z);

// Two distinct degree-2 vertices outside Z joined by a Z-nice path of length
// <= max_len; the pair is chosen lexicographically by (u, v) and the returned
// path is the lex-smallest shortest one, verified induced.
std::optional<ConfigurationHit> find_nice_path_pair(const PlaneGraph& g, const ZMarker& z,
                                                    int max_len = 28);

// Degree >= 4 center outside Z with deg-1 many degree-2 vertices Z-nicely
// reachable; falls back to the pair configuration when the paths intersect
// away from the center or their union is not induced.
std::optional<ConfigurationHit> find_star(const PlaneGraph& g, const ZMarker& z,
                                          int max_total = 28);

// Two 6-faces sharing an edge, every incident vertex of degree <= 3 and
// outside Z, the second face holding a degree-2 vertex.
std::optional<ConfigurationHit> find_two_faces(const PlaneGraph& g, const ZMarker& z);

// Three 6-faces around a common vertex, every incident vertex of degree <= 3
// and outside Z.
std::optional<ConfigurationHit> find_three_faces(const PlaneGraph& g, const ZMarker& z);

// Family order degree<=1 < path < star < two-face < three-face; first hit wins.
std::optional<ConfigurationHit> find_any(const PlaneGraph& g, const ZMarker& z,
                                         int max_size = 29);

// Replays the configuration family's coloring argument as machine-checked
// evidence, without
// enumerating assignments.  Throws CertificateFailed when the evidence does
// not hold (tampered hit or detector bug).
ReducibleCertificate structural_certificate(const ConfigurationHit& hit, const PlaneGraph& g,
                                            const ZMarker& z);

}  // namespace girth6
