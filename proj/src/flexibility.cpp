#include "girth6/flexibility.hpp"

#include <algorithm>
#include <functional>

namespace girth6 {

namespace {

void require_lists_cover(const SimpleGraph& g, const ListAssignment& L) {
    for (Vertex v : g.verts)
        if (!L.lists.count(v))
            throw PreconditionFailed("list assignment misses vertex " + std::to_string(v));
}

}  // namespace

namespace {

// Dense exact-rational simplex tableau for the minimax LP
//
//   max t   s.t.  sum_j M[r][j] q_j - t >= 0  (one row per pair r)
//                 sum_j q_j = 1,  q >= 0, t >= 0
//
// Rows are stored flipped (-M q + t + s = 0) so the slacks form a feasible
// basis once q_0 is pivoted into the sum row.  Bland's rule keeps the exact
// arithmetic cycle-free and deterministic.
struct MinimaxLP {
    int n = 0, m = 0;                   // colorings, pairs
    std::vector<std::vector<Rational>> T;  // (m+1) x (n + 1 + m)
    std::vector<Rational> b;
    std::vector<Rational> obj;          // reduced costs
    std::vector<int> basis;             // column index per row

    int col_q(int j) const { return j; }
    int col_t() const { return n; }
    int col_s(int r) const { return n + 1 + r; }

    void build(const std::vector<std::vector<char>>& M) {
        m = static_cast<int>(M.size());
        n = static_cast<int>(M.empty() ? 0 : M[0].size());
        int cols = n + 1 + m;
        T.assign(m + 1, std::vector<Rational>(cols, Rational(0)));
        b.assign(m + 1, Rational(0));
        obj.assign(cols, Rational(0));
        for (int r = 0; r < m; ++r) {
            for (int j = 0; j < n; ++j) T[r][col_q(j)] = Rational(-(int)M[r][j]);
            T[r][col_t()] = Rational(1);
            T[r][col_s(r)] = Rational(1);
        }
        for (int j = 0; j < n; ++j) T[m][col_q(j)] = Rational(1);
        b[m] = Rational(1);
        obj[col_t()] = Rational(1);

        basis.assign(m + 1, -1);
        for (int r = 0; r < m; ++r) basis[r] = col_s(r);
        basis[m] = col_q(0);
        // eliminate q_0 from the pair rows: row_r += M[r][0] * sum_row
        for (int r = 0; r < m; ++r) {
            Rational factor = -T[r][col_q(0)];
            if (factor.sign() == 0) continue;
            for (int c = 0; c < cols; ++c) {
                if (T[m][c].sign() == 0) continue;
                T[r][c] += factor * T[m][c];
            }
            b[r] += factor * b[m];
        }
    }

    void pivot(int row, int col) {
        int cols = static_cast<int>(T[0].size());
        Rational p = T[row][col];
        for (int c = 0; c < cols; ++c)
            if (T[row][c].sign() != 0) T[row][c] /= p;
        b[row] /= p;
        for (int r = 0; r <= m; ++r) {
            if (r == row || T[r][col].sign() == 0) continue;
            Rational f = T[r][col];
            for (int c = 0; c < cols; ++c)
                if (T[row][c].sign() != 0) T[r][c] -= f * T[row][c];
            b[r] -= f * b[row];
        }
        if (obj[col].sign() != 0) {
            Rational f = obj[col];
            for (int c = 0; c < cols; ++c)
                if (T[row][c].sign() != 0) obj[c] -= f * T[row][c];
        }
        basis[row] = col;
    }

    void solve() {
        int cols = static_cast<int>(T[0].size());
        while (true) {
            int enter = -1;
            for (int c = 0; c < cols; ++c)
                if (obj[c].sign() > 0) {
                    enter = c;
                    break;
                }
            if (enter < 0) return;
            int leave = -1;
            Rational best_ratio;
            for (int r = 0; r <= m; ++r) {
                if (T[r][enter].sign() <= 0) continue;
                Rational ratio = b[r] / T[r][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) throw PreconditionFailed("minimax LP is unbounded (internal error)");
            pivot(leave, enter);
        }
    }

    Rational value_of(int col) const {
        for (int r = 0; r <= m; ++r)
            if (basis[r] == col) return b[r];
        return Rational(0);
    }
};

}  // namespace

EpsilonWeighted epsilon_weighted(const SimpleGraph& g, const ListAssignment& L, long long cap,
                                 const Rational& tolerance) {
    (void)tolerance;  // the exact path certifies a zero gap
    require_lists_cover(g, L);
    std::vector<Coloring> colorings = enumerate_colorings(g, L, cap);
    if (colorings.empty()) throw NotColorable("graph admits no list coloring");

    std::vector<VertexColorPair> pairs;
    for (Vertex v : g.verts)
        for (Color c : L.at(v)) pairs.push_back({v, c});
    if (pairs.empty()) throw PreconditionFailed("no (vertex, color) pairs to satisfy");

    const int n = static_cast<int>(colorings.size());
    const int m = static_cast<int>(pairs.size());
    std::vector<std::vector<char>> M(m, std::vector<char>(n, 0));
    for (int r = 0; r < m; ++r)
        for (int j = 0; j < n; ++j)
            if (colorings[j].colors.at(pairs[r].first) == pairs[r].second) M[r][j] = 1;

    MinimaxLP lp;
    lp.build(M);
    lp.solve();

    EpsilonWeighted out;
    out.coloring_count = n;
    out.eps = lp.value_of(lp.col_t());
    out.gap = Rational(0);

    std::vector<Rational> q(n, Rational(0));
    for (int j = 0; j < n; ++j) q[j] = lp.value_of(lp.col_q(j));
    for (int j = 0; j < n; ++j)
        if (q[j].sign() > 0) out.witness_distribution.push_back({colorings[j], q[j]});

    // primal certificate: the distribution is a distribution and its smallest
    // pair probability equals the reported eps
    Rational qsum;
    for (const auto& [col, p] : out.witness_distribution) qsum += p;
    if (qsum != Rational(1)) throw PreconditionFailed("LP witness does not sum to 1");
    bool first = true;
    Rational min_prob;
    for (int r = 0; r < m; ++r) {
        Rational prob;
        for (int j = 0; j < n; ++j)
            if (M[r][j]) prob += q[j];
        if (first || prob < min_prob) {
            min_prob = prob;
            out.worst_pair = pairs[r];
            first = false;
        }
    }
    if (m > 0 && min_prob != out.eps)
        throw PreconditionFailed("primal certificate mismatch in epsilon LP");

    // dual certificate: normalized dual weights bound every coloring's value
    std::vector<Rational> y(m, Rational(0));
    Rational ysum;
    for (int r = 0; r < m; ++r) {
        y[r] = -lp.obj[lp.col_s(r)];
        if (y[r].sign() < 0) throw PreconditionFailed("negative dual weight in epsilon LP");
        ysum += y[r];
    }
    if (ysum.sign() > 0) {
        Rational best_col;
        for (int j = 0; j < n; ++j) {
            Rational val;
            for (int r = 0; r < m; ++r)
                if (M[r][j]) val += y[r];
            if (val > best_col) best_col = val;
        }
        if (best_col / ysum != out.eps)
            throw PreconditionFailed("dual certificate mismatch in epsilon LP");
        for (int r = 0; r < m; ++r)
            if (y[r].sign() > 0) out.dual_weights[pairs[r]] = y[r] / ysum;
    }
    return out;
}

EpsilonUnweighted epsilon_unweighted(const SimpleGraph& g, const ListAssignment& L,
                                     long long cap) {
    require_lists_cover(g, L);
    long long prod = 1;
    bool overflow = false;
    for (Vertex v : g.verts) {
        long long opts = L.size_at(v) + 1;
        if (prod > (cap + 2) / opts) {
            overflow = true;
            break;
        }
        prod *= opts;
    }
    long long request_count = overflow ? cap + 1 : prod - 1;  // empty request dropped
    if (request_count > cap)
        throw CapExceeded("request enumeration exceeds cap", request_count);

    std::vector<Coloring> colorings = enumerate_colorings(g, L, cap);
    if (colorings.empty()) throw NotColorable("graph admits no list coloring");

    EpsilonUnweighted out;
    out.coloring_count = static_cast<long long>(colorings.size());
    out.request_count = request_count;

    std::map<Vertex, Color> request;
    bool have = false;
    Rational best;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == g.verts.size()) {
            if (request.empty()) return;
            int best_matches = 0;
            for (const Coloring& col : colorings) {
                int matches = 0;
                for (const auto& [v, c] : request)
                    if (col.colors.at(v) == c) matches++;
                best_matches = std::max(best_matches, matches);
            }
            Rational ratio(best_matches, static_cast<long long>(request.size()));
            if (!have || ratio < best) {
                best = ratio;
                out.worst_request = request;
                have = true;
            }
            return;
        }
        Vertex v = g.verts[i];
        rec(i + 1);  // unrequested
        for (Color c : L.at(v)) {
            request[v] = c;
            rec(i + 1);
            request.erase(v);
        }
    };
    rec(0);
    out.eps = best;
    return out;
}

std::vector<VertexColorPair> pair_realizability(const SimpleGraph& g, const ListAssignment& L) {
    require_lists_cover(g, L);
    std::vector<VertexColorPair> out;
    for (Vertex v : g.verts) {
        for (Color c : L.at(v)) {
            ListAssignment pinned = L;
            pinned.lists[v] = {c};
            if (!find_coloring(g, pinned)) out.push_back({v, c});
        }
    }
    return out;
}

}  // namespace girth6
