#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "girth6/errors.hpp"

namespace girth6 {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct Dart {
    Vertex from = -1, to = -1;
    friend bool operator==(const Dart&, const Dart&) = default;
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct Face {
    int id = -1;
    std::vector<Dart> boundary;  // closed walk, one dart per boundary step
    int length() const { return static_cast<int>(boundary.size()); }
    std::vector<Vertex> vertex_walk() const;  // from-vertices of the boundary darts
};

// Rotate/reflect a closed walk to its lexicographically smallest vertex sequence.
std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& walk);

// Combinatorial plane embedding: per-vertex clockwise neighbor order.  Faces are
// traced at construction time and the object is immutable afterwards, so all
// queries are pure.
class PlaneGraph {
  public:
    PlaneGraph() = default;

    // Throws ParseError / AsymmetricAdjacency / NonPlanarEmbedding.
    static PlaneGraph from_rotation(const std::vector<Vertex>& vertices,
                                    const std::map<Vertex, std::vector<Vertex>>& rotation,
                                    const std::optional<std::vector<Vertex>>& outer_boundary = {});

    const std::vector<Vertex>& vertices() const { return verts_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return edge_count_; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    bool has_vertex(Vertex v) const { return index_.count(v) > 0; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return rot_[idx(v)]; }
    int degree(Vertex v) const { return static_cast<int>(rot_[idx(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;
    std::vector<Edge> edges() const;

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[id]; }
    int outer_face_id() const { return outer_face_; }
    // Faces incident with v, in no particular order.
    const std::vector<int>& faces_at(Vertex v) const { return vertex_faces_[idx(v)]; }
    int face_of_dart(Vertex u, Vertex v) const;

    bool connected() const;
    // connected, >= 3 vertices, no cut vertex
    bool two_connected() const;
    std::vector<std::vector<Vertex>> components() const;

    // Length of a shortest cycle; nullopt when the graph is a forest.
    std::optional<int> girth() const;

    // Induced subgraph on `keep`, rotation inherited.  The embedding stays plane.
    PlaneGraph induced(const std::vector<Vertex>& keep,
                       const std::optional<std::vector<Vertex>>& outer_boundary = {}) const;

  private:
    int idx(Vertex v) const {
        auto it = index_.find(v);
        if (it == index_.end()) throw PreconditionFailed("unknown vertex " + std::to_string(v));
        return it->second;
    }
    void trace_faces();
    void check_euler() const;

    std::vector<Vertex> verts_;  // sorted
    std::map<Vertex, int> index_;
    std::vector<std::vector<Vertex>> rot_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> vertex_faces_;
    std::map<Dart, int> dart_face_;
    int outer_face_ = -1;
    int edge_count_ = 0;
};

// Reference to an induced subgraph of a host plane graph.
struct SubgraphRef {
    const PlaneGraph* host = nullptr;
    std::vector<Vertex> verts;  // sorted, subset of host vertices

    static SubgraphRef of(const PlaneGraph& g, std::vector<Vertex> vertices);
    // Validates that `edges` is exactly the induced edge set; throws NotInduced.
    static SubgraphRef with_edges(const PlaneGraph& g, std::vector<Vertex> vertices,
                                  const std::vector<Edge>& edges);

    bool contains(Vertex v) const;
    int size() const { return static_cast<int>(verts.size()); }
    std::vector<Vertex> neighbors_in(Vertex v) const;  // induced neighbors
    int degree_in(Vertex v) const { return static_cast<int>(neighbors_in(v).size()); }
    std::vector<Edge> induced_edges() const;
    bool connected() const;
};

struct ZMarker {
    enum class Kind { Empty, SingleVertex, SixCycle };
    Kind kind = Kind::Empty;
    std::vector<Vertex> verts;  // cycle order (canonical) for SixCycle, single id otherwise

    static ZMarker empty() { return {}; }
    static ZMarker single(Vertex v) { return {Kind::SingleVertex, {v}}; }
    // Validates that `cycle` is a 6-cycle of g; stores the canonical order.
    static ZMarker six_cycle(const PlaneGraph& g, std::vector<Vertex> cycle);

    bool contains(Vertex v) const;
    int size() const { return static_cast<int>(verts.size()); }
};

struct BlockDecomposition {
    std::vector<SubgraphRef> blocks;   // sorted by canonical vertex list
    std::vector<Vertex> cut_vertices;  // sorted
};

// Standard block / cut-vertex decomposition.  Throws Disconnected.
BlockDecomposition blocks(const PlaneGraph& g);

struct SixCycleInfo {
    std::vector<Vertex> cycle;  // canonical order
    bool facial = false;
    int face_id = -1;  // when facial
};

// All 6-cycles, each tagged facial or not.  Requires girth >= 6 (GirthTooSmall).
std::vector<SixCycleInfo> six_cycles(const PlaneGraph& g);

// Vertices strictly inside the disk bounded by `cycle` (the side not containing
// the outer face).
std::vector<Vertex> cycle_interior(const PlaneGraph& g, const std::vector<Vertex>& cycle);

// Non-facial 6-cycle with inclusion-minimal interior; lexicographic tie-break.
std::optional<ZMarker> minimal_nonfacial_six_cycle(const PlaneGraph& g);

// Subgraph drawn in the closed disk of a non-facial 6-cycle z.  Asserts the
// result is 2-connected and that every 6-cycle in it bounds a face.
PlaneGraph interior_closure(const PlaneGraph& g, const ZMarker& z);

// Z-nice distance: length of a shortest u-v path whose internal vertices have
// degree exactly three and avoid Z.  Endpoints are unconstrained.  u == v is
// rejected (PreconditionFailed).
std::optional<int> nice_distance(const PlaneGraph& g, const ZMarker& z, Vertex u, Vertex v);

// Lexicographically smallest among the shortest Z-nice paths, oriented u -> v.
std::optional<std::vector<Vertex>> nice_path(const PlaneGraph& g, const ZMarker& z, Vertex u,
                                             Vertex v);

// 0 when u is incident with f, else min nice_distance(v, u) over degree-3
// vertices v outside Z incident with f.
std::optional<int> nice_face_distance(const PlaneGraph& g, const ZMarker& z, int face_id,
                                      Vertex u);

}  // namespace girth6
