#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "girth6/plane_graph.hpp"
#include "girth6/rational.hpp"

namespace girth6 {

using Color = int;

// Plain adjacency view; both PlaneGraph and SubgraphRef convert to it, so the
// coloring solvers do not care about embeddings.
struct SimpleGraph {
    std::vector<Vertex> verts;  // sorted
    std::map<Vertex, std::vector<Vertex>> adj;

    static SimpleGraph from(const PlaneGraph& g);
    static SimpleGraph from(const SubgraphRef& h);
    static SimpleGraph from_edges(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

    int degree(Vertex v) const { return static_cast<int>(adj.at(v).size()); }
    bool connected() const;
    // block vertex sets + cut vertices (Tarjan); used by the Gallai test
    std::pair<std::vector<std::vector<Vertex>>, std::vector<Vertex>> blocks_and_cuts() const;
};

struct ListAssignment {
    std::map<Vertex, std::set<Color>> lists;

    const std::set<Color>& at(Vertex v) const { return lists.at(v); }
    int size_at(Vertex v) const { return static_cast<int>(lists.at(v).size()); }
    static ListAssignment uniform(const std::vector<Vertex>& vs, const std::set<Color>& colors);
};

struct Coloring {
    std::map<Vertex, Color> colors;
    friend bool operator==(const Coloring&, const Coloring&) = default;
    friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

// Independent validity check used by tests and certificate verification.
bool is_proper_list_coloring(const SimpleGraph& g, const ListAssignment& L, const Coloring& c);

struct WeightedRequest {
    std::map<std::pair<Vertex, Color>, Rational> weights;

    Rational total() const;
    Rational weight(Vertex v, Color c) const;
    // A plain request is the 0/1 special case: one unit on (v, r(v)).
    static WeightedRequest from_request(const std::map<Vertex, Color>& r);
    // Throws PreconditionFailed when a weighted pair uses a color outside L(v)
    // or a negative weight.
    void validate_against(const ListAssignment& L) const;
};

// Backtracking search: smallest remaining list first, unit propagation,
// colors tried in ascending order.  Deterministic.
std::optional<Coloring> find_coloring(const SimpleGraph& g, const ListAssignment& L);

enum class GallaiVerdict { Guaranteed, Unknown };

// Degree-colorability certificate: Guaranteed iff some vertex has list larger
// than its degree or some block is neither complete nor an odd cycle.
// Requires h connected and |L(u)| >= deg_h(u) everywhere (PreconditionFailed).
GallaiVerdict gallai_certificate(const SubgraphRef& h, const ListAssignment& L);
GallaiVerdict gallai_certificate(const SimpleGraph& h, const ListAssignment& L);

// Exact branch-and-bound maximization of total captured weight.
std::optional<std::pair<Coloring, Rational>> max_weighted_request(const SimpleGraph& g,
                                                                  const ListAssignment& L,
                                                                  const WeightedRequest& w);

// All L-colorings in deterministic (lexicographic) order; CapExceeded beyond cap.
std::vector<Coloring> enumerate_colorings(const SimpleGraph& g, const ListAssignment& L,
                                          long long cap);

}  // namespace girth6
