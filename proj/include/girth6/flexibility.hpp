#pragma once

#include <map>
#include <optional>
#include <vector>

#include "girth6/coloring.hpp"
#include "girth6/rational.hpp"

namespace girth6 {

using VertexColorPair = std::pair<Vertex, Color>;

struct EpsilonWeighted {
    Rational eps;  // exact optimum of max_q min_{(v,c)} Pr[phi(v)=c]
    Rational gap;  // 0 on the exact path
    std::vector<std::pair<Coloring, Rational>> witness_distribution;  // positive mass only
    VertexColorPair worst_pair{-1, -1};  // lex-smallest minimizing pair under the witness
    std::map<VertexColorPair, Rational> dual_weights;  // worst weighted request, sums to 1
    long long coloring_count = 0;
};

struct EpsilonUnweighted {
    Rational eps;
    std::map<Vertex, Color> worst_request;
    long long request_count = 0;
    long long coloring_count = 0;
};

struct EpsilonReport {
    std::optional<EpsilonWeighted> weighted;
    std::optional<EpsilonUnweighted> unweighted;
    std::vector<VertexColorPair> unrealizable;
};

// Largest eps for which every weighted request is eps-satisfiable, computed as
// an exact minimax LP over the full coloring list.  Both the primal witness
// distribution and the dual worst weights are certified by direct evaluation.
// Throws NotColorable / CapExceeded.
EpsilonWeighted epsilon_weighted(const SimpleGraph& g, const ListAssignment& L, long long cap,
                                 const Rational& tolerance = Rational(0));

// Minimum over all nonempty requests of (best achievable matches) / |dom(r)|.
// Requires prod(|L(v)|+1) - 1 <= cap.
EpsilonUnweighted epsilon_unweighted(const SimpleGraph& g, const ListAssignment& L,
                                     long long cap);

// Pairs (v, c in L(v)) no L-coloring realizes.
std::vector<VertexColorPair> pair_realizability(const SimpleGraph& g, const ListAssignment& L);

}  // namespace girth6
