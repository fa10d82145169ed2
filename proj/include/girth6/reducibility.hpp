#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "girth6/coloring.hpp"
#include "girth6/plane_graph.hpp"

#include "json.hpp"

namespace girth6 {

// Required list size per vertex of H: deg_H(v) + k - deg_G(v), with the
// pin (value 1 at one vertex) and -1 on an independent set applied on top.
struct DemandFunction {
    std::map<Vertex, int> values;

    DemandFunction pinned(Vertex v) const {
        DemandFunction f = *this;
        f.values.at(v) = 1;
        return f;
    }
    DemandFunction minus_indicator(const std::vector<Vertex>& I) const {
        DemandFunction f = *this;
        for (Vertex v : I) f.values.at(v) -= 1;
        return f;
    }
};

// Throws NotInduced via SubgraphRef::with_edges construction path; k >= 3.
DemandFunction demand(const PlaneGraph& g, const SubgraphRef& h, int k);

// Default vertex order for canonical enumeration: smallest demand first, then id.
std::vector<Vertex> demand_order(const DemandFunction& f);

// Exact number of list assignments produced by the restricted-growth
// enumeration below (saturating; independent of adjacency).
long long predicted_assignment_count(const DemandFunction& f, const std::vector<Vertex>& order);

// Every assignment with |L(v)| = f(v) exactly, one representative per color
// renaming class up to the restricted-growth construction: processing vertices
// in `order`, each list is drawn from {1..m+f(v)} where m is the largest color
// used so far.  Throws BudgetExceeded when the predicted count exceeds budget.
std::vector<ListAssignment> enumerate_assignments(const DemandFunction& f,
                                                  const std::vector<Vertex>& order,
                                                  long long budget);

enum class CheckVerdict { True, False, Budget };

struct FixCounterexample {
    Vertex pinned = -1;
    ListAssignment lists;
};

struct FixResult {
    CheckVerdict verdict = CheckVerdict::True;
    std::optional<FixCounterexample> counterexample;
    long long nodes_explored = 0;
};

// (FIX): for every v in V(H) and every exact-size (demand pinned at v)
// assignment, H is colorable.  Exact sizes suffice because colorability is
// monotone in list size.
FixResult check_fix(const PlaneGraph& g, const SubgraphRef& h, int k, long long budget);

struct ForbCounterexample {
    std::vector<Vertex> independent_set;
    ListAssignment lists;
};

struct ForbResult {
    CheckVerdict verdict = CheckVerdict::True;
    std::optional<ForbCounterexample> counterexample;
    long long nodes_explored = 0;
};

// (FORB): for every d-independent I with |I| <= k-2 (empty set included),
// H is colorable from every exact-size (demand - 1_I) assignment.
ForbResult check_forb(const PlaneGraph& g, const SubgraphRef& h, int d, int k, long long budget);

struct ReducibleCertificate {
    enum class Kind { BruteForce, Path, Star, TwoFace, ThreeFace, DegreeLe1 };
    Kind kind = Kind::BruteForce;
    SubgraphRef subgraph;
    nlohmann::json evidence;
    bool checked_fix = false;
    bool degree_slack_ok = false;
    int subgraph_size = 0;
};

std::string to_string(ReducibleCertificate::Kind k);

struct Refusal {
    std::string reason;
    bool budget_exceeded = false;
    std::optional<FixCounterexample> counterexample;
};

enum class ReducibilityMode { Auto, Brute, Structural };

constexpr long long kDefaultNodeBudget = 5'000'000;

// 3-reducibility: degree slack deg_H >= deg_G - 1 everywhere plus (FIX) for
// k = 3; (FORB) then follows and d is irrelevant.  Auto mode certifies
// degree<=1 vertices and trees structurally and falls back to brute force.
std::variant<ReducibleCertificate, Refusal> is_3_reducible(
    const PlaneGraph& g, const SubgraphRef& h, long long budget = kDefaultNodeBudget,
    ReducibilityMode mode = ReducibilityMode::Auto);

// --- structural evidence checks, shared with the configurations module ---

// H is a tree whose demands allow greedy coloring from any pinned root
// (every unpinned vertex keeps at least two colors).
bool tree_peel_ok(const PlaneGraph& g, const SubgraphRef& h, std::string* why = nullptr);

// Gallai-style replay for the face configurations: degree slack, host degrees
// <= 3, and for every pin x: H-x connected plus a slack vertex or a block that
// is neither complete nor an odd cycle.
bool gallai_style_ok(const PlaneGraph& g, const SubgraphRef& h, std::string* why = nullptr);

bool degree_slack_ok(const PlaneGraph& g, const SubgraphRef& h, std::string* why = nullptr);

// Engine entry, exposed for tests: is H colorable from EVERY assignment with
// the exact sizes given by f (colors considered up to renaming)?
struct ForallResult {
    CheckVerdict verdict = CheckVerdict::True;
    ListAssignment counterexample;  // set when verdict == False
    long long nodes_explored = 0;
};
ForallResult forall_exact_assignments_colorable(const SimpleGraph& h, const DemandFunction& f,
                                                long long node_budget);

}  // namespace girth6
