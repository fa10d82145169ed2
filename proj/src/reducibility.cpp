#include "girth6/reducibility.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

namespace girth6 {

DemandFunction demand(const PlaneGraph& g, const SubgraphRef& h, int k) {
    if (k < 3) throw PreconditionFailed("demand requires k >= 3");
    DemandFunction f;
    for (Vertex v : h.verts) f.values[v] = h.degree_in(v) + k - g.degree(v);
    return f;
}

std::vector<Vertex> demand_order(const DemandFunction& f) {
    std::vector<Vertex> order;
    for (const auto& [v, val] : f.values) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        int fa = f.values.at(a), fb = f.values.at(b);
        return fa != fb ? fa < fb : a < b;
    });
    return order;
}

namespace {

long long sat_add(long long a, long long b) {
    if (a > std::numeric_limits<long long>::max() - b) return std::numeric_limits<long long>::max();
    return a + b;
}

long long sat_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<long long>::max() / b) return std::numeric_limits<long long>::max();
    return a * b;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = sat_mul(r, n - i) / (i + 1);
    return r;
}

}  // namespace

long long predicted_assignment_count(const DemandFunction& f, const std::vector<Vertex>& order) {
    // DP over the running maximum color; the count ignores adjacency.
    std::map<int, long long> by_max{{0, 1}};
    for (Vertex v : order) {
        int size = f.values.at(v);
        if (size < 0) return 0;
        std::map<int, long long> next;
        for (const auto& [m, cnt] : by_max) {
            // stay at m: subsets of {1..m}; or reach m+j by including m+j
            long long stay = binom(m, size);
            if (stay > 0) next[m] = sat_add(next[m], sat_mul(cnt, stay));
            for (int j = 1; j <= size; ++j) {
                long long ways = binom(m + j - 1, size - 1);
                if (ways > 0) next[m + j] = sat_add(next[m + j], sat_mul(cnt, ways));
            }
        }
        by_max = std::move(next);
    }
    long long total = 0;
    for (const auto& [m, cnt] : by_max) total = sat_add(total, cnt);
    return total;
}

namespace {

// Visits size-`k` subsets of {1..limit} in lexicographic order.
void for_each_subset(int limit, int k, const std::function<void(const std::vector<Color>&)>& fn) {
    std::vector<Color> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == k) {
            fn(pick);
            return;
        }
        int need = k - static_cast<int>(pick.size());
        for (int c = from; c + need - 1 <= limit; ++c) {
            pick.push_back(c);
            rec(c + 1);
            pick.pop_back();
        }
    };
    rec(1);
}

}  // namespace

std::vector<ListAssignment> enumerate_assignments(const DemandFunction& f,
                                                  const std::vector<Vertex>& order,
                                                  long long budget) {
    for (const auto& [v, val] : f.values)
        if (val < 0) throw PreconditionFailed("negative demand value");
    long long predicted = predicted_assignment_count(f, order);
    if (predicted > budget)
        throw BudgetExceeded("assignment enumeration needs " + std::to_string(predicted) +
                                 " items, budget " + std::to_string(budget),
                             predicted);

    std::vector<ListAssignment> out;
    ListAssignment current;
    std::function<void(size_t, int)> rec = [&](size_t i, int max_used) {
        if (i == order.size()) {
            out.push_back(current);
            return;
        }
        Vertex v = order[i];
        int size = f.values.at(v);
        for_each_subset(max_used + size, size, [&](const std::vector<Color>& pick) {
            current.lists[v] = std::set<Color>(pick.begin(), pick.end());
            int m = max_used;
            for (Color c : pick) m = std::max(m, c);
            rec(i + 1, m);
        });
        current.lists.erase(v);
    };
    rec(0, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Universal-assignment colorability engine.
//
// Vertices are processed in an order that keeps the "boundary" (processed
// vertices with unprocessed neighbors) small.  The search state after i
// vertices is the set S of proper colorings of the processed part projected
// onto the boundary.  The verdict of a subtree depends only on (i, S up to
// color renaming), so completed subtrees are memoized under a canonical form
// of S.  An empty S is a counterexample and aborts the whole search.
// ---------------------------------------------------------------------------

namespace {

struct EngineBudget : std::exception {};

struct Engine {
    const SimpleGraph& h;
    std::vector<Vertex> order;
    std::vector<int> sizes;                      // demand per position
    std::vector<std::vector<int>> nbr_positions; // positions in boundary(i) adjacent to order[i]
    std::vector<std::vector<int>> keep_positions;// projection (boundary(i) + v) -> boundary(i+1)
    std::vector<int> boundary_size;
    long long budget;
    long long nodes = 0;
    std::map<std::pair<int, std::vector<std::vector<Color>>>, bool> memo_true;
    std::vector<std::vector<Color>> chosen;      // lists picked along the current path
    std::optional<std::vector<std::vector<Color>>> counterexample;

    Engine(const SimpleGraph& graph, long long node_budget) : h(graph), budget(node_budget) {}

    // Greedy order: grow a connected prefix, always adding the neighbor that
    // minimizes the resulting boundary (ties by id).
    void build_order(const DemandFunction& f) {
        std::set<Vertex> left(h.verts.begin(), h.verts.end());
        std::set<Vertex> done;
        auto boundary_after = [&](Vertex cand) {
            int b = 0;
            for (Vertex x : done) {
                for (Vertex y : h.adj.at(x))
                    if (y != cand && !done.count(y)) {
                        b++;
                        break;
                    }
            }
            for (Vertex y : h.adj.at(cand))
                if (!done.count(y)) {
                    b++;
                    break;
                }
            return b;
        };
        while (!left.empty()) {
            Vertex best = -1;
            int best_b = 0;
            bool have_adjacent = false;
            for (Vertex cand : left) {
                bool adjacent = false;
                for (Vertex y : h.adj.at(cand))
                    if (done.count(y)) adjacent = true;
                if (!done.empty() && have_adjacent && !adjacent) continue;
                int b = boundary_after(cand);
                bool better;
                if (best == -1)
                    better = true;
                else if (adjacent && !have_adjacent)
                    better = true;  // prefer staying connected
                else if (adjacent == have_adjacent)
                    better = b < best_b || (b == best_b && cand < best);
                else
                    better = false;
                if (better) {
                    best = cand;
                    best_b = b;
                    have_adjacent = adjacent;
                }
            }
            order.push_back(best);
            done.insert(best);
            left.erase(best);
        }
        const int n = static_cast<int>(order.size());
        sizes.resize(n);
        for (int i = 0; i < n; ++i) sizes[i] = f.values.at(order[i]);

        // boundary(i): processed vertices that still have unprocessed neighbors,
        // listed in processing order
        std::map<Vertex, int> pos_of;
        for (int i = 0; i < n; ++i) pos_of[order[i]] = i;
        nbr_positions.resize(n);
        keep_positions.resize(n);
        boundary_size.resize(n + 1);
        std::vector<Vertex> boundary;
        boundary_size[0] = 0;
        for (int i = 0; i < n; ++i) {
            Vertex v = order[i];
            for (int bi = 0; bi < static_cast<int>(boundary.size()); ++bi)
                for (Vertex y : h.adj.at(boundary[bi]))
                    if (y == v) nbr_positions[i].push_back(bi);
            // extended boundary = boundary + v; project to next boundary
            std::vector<Vertex> ext = boundary;
            ext.push_back(v);
            std::vector<Vertex> next;
            for (int bi = 0; bi < static_cast<int>(ext.size()); ++bi) {
                Vertex x = ext[bi];
                bool live = false;
                for (Vertex y : h.adj.at(x))
                    if (pos_of.at(y) > i) live = true;
                if (live) {
                    keep_positions[i].push_back(bi);
                    next.push_back(x);
                }
            }
            boundary = std::move(next);
            boundary_size[i + 1] = static_cast<int>(boundary.size());
        }
    }

    // Exact canonical form of S under color renaming: colors are grouped by a
    // label-free invariant, then all bijections refining the group order are
    // tried and the lexicographically smallest relabeled set wins.
    static std::optional<std::vector<std::vector<Color>>> canonical(
        const std::vector<std::vector<Color>>& S) {
        std::set<Color> color_set;
        for (const auto& tup : S)
            for (Color c : tup) color_set.insert(c);
        std::vector<Color> colors(color_set.begin(), color_set.end());
        const int K = static_cast<int>(colors.size());
        if (K == 0) return S;
        if (K > 9) return std::nullopt;

        std::map<Color, std::vector<int>> invariant;
        int width = S.empty() ? 0 : static_cast<int>(S[0].size());
        for (Color c : colors) {
            std::vector<int> inv(width, 0);
            for (const auto& tup : S)
                for (int p = 0; p < width; ++p)
                    if (tup[p] == c) inv[p]++;
            invariant[c] = std::move(inv);
        }
        std::stable_sort(colors.begin(), colors.end(),
                         [&](Color a, Color b) { return invariant[a] < invariant[b]; });
        std::vector<std::vector<Color>> groups;
        for (Color c : colors) {
            if (groups.empty() || invariant[groups.back().front()] != invariant[c])
                groups.push_back({c});
            else
                groups.back().push_back(c);
        }
        long long perms = 1;
        for (const auto& gset : groups) {
            long long f = 1;
            for (size_t i = 2; i <= gset.size(); ++i) f *= static_cast<long long>(i);
            perms *= f;
            if (perms > 5040) return std::nullopt;
        }

        std::optional<std::vector<std::vector<Color>>> best;
        std::vector<std::vector<Color>> group_perm = groups;
        std::function<void(size_t)> try_groups = [&](size_t gi) {
            if (gi == group_perm.size()) {
                std::map<Color, Color> relabel;
                int next = 1;
                for (const auto& gset : group_perm)
                    for (Color c : gset) relabel[c] = next++;
                std::vector<std::vector<Color>> mapped;
                mapped.reserve(S.size());
                for (const auto& tup : S) {
                    std::vector<Color> m(tup.size());
                    for (size_t p = 0; p < tup.size(); ++p) m[p] = relabel[tup[p]];
                    mapped.push_back(std::move(m));
                }
                std::sort(mapped.begin(), mapped.end());
                if (!best || mapped < *best) best = std::move(mapped);
                return;
            }
            std::sort(group_perm[gi].begin(), group_perm[gi].end());
            do {
                try_groups(gi + 1);
            } while (std::next_permutation(group_perm[gi].begin(), group_perm[gi].end()));
        };
        try_groups(0);
        return best;
    }

    bool run() {
        std::vector<std::vector<Color>> root{{}};
        return dfs(0, root, 0);
    }

    // true: every completion colorable; false: counterexample recorded
    bool dfs(int i, const std::vector<std::vector<Color>>& S, int max_used) {
        if (i == static_cast<int>(order.size())) return true;
        std::optional<std::vector<std::vector<Color>>> key;
        if (boundary_size[i] <= 4 && S.size() <= 128) {
            key = canonical(S);
            if (key) {
                auto it = memo_true.find({i, *key});
                if (it != memo_true.end()) return true;
            }
        }

        int size = sizes[i];
        if (size <= 0) {
            // exact size 0 means an empty list: never colorable
            chosen.push_back({});
            record_counterexample(i);
            return false;
        }

        bool all_true = true;
        std::vector<Color> pick;
        std::function<bool(int)> lists = [&](int from) {
            if (static_cast<int>(pick.size()) == size) {
                if (++nodes > budget) throw EngineBudget{};
                std::set<std::vector<Color>> next_set;
                for (const auto& beta : S) {
                    for (Color c : pick) {
                        bool conflict = false;
                        for (int bp : nbr_positions[i])
                            if (beta[bp] == c) {
                                conflict = true;
                                break;
                            }
                        if (conflict) continue;
                        std::vector<Color> ext = beta;
                        ext.push_back(c);
                        std::vector<Color> proj;
                        proj.reserve(keep_positions[i].size());
                        for (int kp : keep_positions[i]) proj.push_back(ext[kp]);
                        next_set.insert(std::move(proj));
                    }
                }
                chosen.push_back(pick);
                if (next_set.empty()) {
                    record_counterexample(i);
                    return false;
                }
                std::vector<std::vector<Color>> next(next_set.begin(), next_set.end());
                int m = max_used;
                for (Color c : pick) m = std::max(m, c);
                if (!dfs(i + 1, next, m)) return false;
                chosen.pop_back();
                return true;
            }
            int need = size - static_cast<int>(pick.size());
            for (int c = from; c + need - 1 <= max_used + size; ++c) {
                pick.push_back(c);
                if (!lists(c + 1)) return false;
                pick.pop_back();
            }
            return true;
        };
        all_true = lists(1);
        if (all_true && key) memo_true.emplace(std::make_pair(i, *key), true);
        return all_true;
    }

    void record_counterexample(int i) {
        // current prefix of chosen lists plus default exact-size lists behind it
        std::vector<std::vector<Color>> full = chosen;
        for (int j = i + 1; j < static_cast<int>(order.size()); ++j) {
            std::vector<Color> dflt;
            for (int c = 1; c <= sizes[j]; ++c) dflt.push_back(c);
            full.push_back(std::move(dflt));
        }
        counterexample = std::move(full);
    }
};

}  // namespace

ForallResult forall_exact_assignments_colorable(const SimpleGraph& h, const DemandFunction& f,
                                                long long node_budget) {
    ForallResult res;
    // components are independent; a bad assignment on one extends to the whole
    std::set<Vertex> seen;
    for (Vertex s : h.verts) {
        if (seen.count(s)) continue;
        std::vector<Vertex> comp;
        std::deque<Vertex> q{s};
        seen.insert(s);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            comp.push_back(x);
            for (Vertex y : h.adj.at(x))
                if (seen.insert(y).second) q.push_back(y);
        }
        SimpleGraph sub;
        std::sort(comp.begin(), comp.end());
        sub.verts = comp;
        for (Vertex v : comp) sub.adj[v] = h.adj.at(v);
        DemandFunction fsub;
        for (Vertex v : comp) fsub.values[v] = f.values.at(v);

        Engine eng(sub, node_budget - res.nodes_explored);
        eng.build_order(fsub);
        bool ok;
        try {
            ok = eng.run();
        } catch (const EngineBudget&) {
            res.verdict = CheckVerdict::Budget;
            res.nodes_explored += eng.nodes;
            return res;
        }
        res.nodes_explored += eng.nodes;
        if (!ok) {
            res.verdict = CheckVerdict::False;
            ListAssignment L;
            for (size_t i = 0; i < eng.order.size(); ++i) {
                const auto& lst = (*eng.counterexample)[i];
                L.lists[eng.order[i]] = std::set<Color>(lst.begin(), lst.end());
            }
            // default lists on the other components keep sizes exact
            for (Vertex v : h.verts) {
                if (L.lists.count(v)) continue;
                std::set<Color> dflt;
                for (int c = 1; c <= std::max(0, f.values.at(v)); ++c) dflt.insert(c);
                L.lists[v] = std::move(dflt);
            }
            res.counterexample = std::move(L);
            return res;
        }
    }
    return res;
}

FixResult check_fix(const PlaneGraph& g, const SubgraphRef& h, int k, long long budget) {
    DemandFunction f = demand(g, h, k);
    SimpleGraph hs = SimpleGraph::from(h);
    FixResult out;
    for (Vertex v : h.verts) {
        ForallResult r =
            forall_exact_assignments_colorable(hs, f.pinned(v), budget - out.nodes_explored);
        out.nodes_explored += r.nodes_explored;
        if (r.verdict == CheckVerdict::Budget) {
            out.verdict = CheckVerdict::Budget;
            return out;
        }
        if (r.verdict == CheckVerdict::False) {
            out.verdict = CheckVerdict::False;
            out.counterexample = FixCounterexample{v, std::move(r.counterexample)};
            return out;
        }
    }
    return out;
}

namespace {

// pairwise distances within H
std::map<Vertex, std::map<Vertex, int>> subgraph_distances(const SimpleGraph& h) {
    std::map<Vertex, std::map<Vertex, int>> dist;
    for (Vertex s : h.verts) {
        std::map<Vertex, int>& d = dist[s];
        d[s] = 0;
        std::deque<Vertex> q{s};
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : h.adj.at(x))
                if (!d.count(y)) {
                    d[y] = d[x] + 1;
                    q.push_back(y);
                }
        }
    }
    return dist;
}

}  // namespace

ForbResult check_forb(const PlaneGraph& g, const SubgraphRef& h, int d, int k, long long budget) {
    if (d < 0) throw PreconditionFailed("check_forb requires d >= 0");
    DemandFunction f = demand(g, h, k);
    SimpleGraph hs = SimpleGraph::from(h);
    auto dist = subgraph_distances(hs);

    std::vector<std::vector<Vertex>> independent_sets{{}};
    std::function<void(size_t, std::vector<Vertex>&)> build = [&](size_t start,
                                                                  std::vector<Vertex>& cur) {
        if (static_cast<int>(cur.size()) >= k - 2) return;
        for (size_t i = start; i < h.verts.size(); ++i) {
            Vertex v = h.verts[i];
            bool ok = true;
            for (Vertex u : cur) {
                auto it = dist.at(u).find(v);
                int du = it == dist.at(u).end() ? std::numeric_limits<int>::max() : it->second;
                if (du <= d) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            cur.push_back(v);
            independent_sets.push_back(cur);
            build(i + 1, cur);
            cur.pop_back();
        }
    };
    std::vector<Vertex> cur;
    build(0, cur);

    ForbResult out;
    for (const auto& I : independent_sets) {
        ForallResult r = forall_exact_assignments_colorable(hs, f.minus_indicator(I),
                                                            budget - out.nodes_explored);
        out.nodes_explored += r.nodes_explored;
        if (r.verdict == CheckVerdict::Budget) {
            out.verdict = CheckVerdict::Budget;
            return out;
        }
        if (r.verdict == CheckVerdict::False) {
            out.verdict = CheckVerdict::False;
            out.counterexample = ForbCounterexample{I, std::move(r.counterexample)};
            return out;
        }
    }
    return out;
}

namespace {

Refusal make_refusal(std::string reason, bool budget = false,
                     std::optional<FixCounterexample> ce = std::nullopt) {
    Refusal r;
    r.reason = std::move(reason);
    r.budget_exceeded = budget;
    r.counterexample = std::move(ce);
    return r;
}

}  // namespace

std::string to_string(ReducibleCertificate::Kind k) {
    switch (k) {
        case ReducibleCertificate::Kind::BruteForce: return "brute-force";
        case ReducibleCertificate::Kind::Path: return "path";
        case ReducibleCertificate::Kind::Star: return "star";
        case ReducibleCertificate::Kind::TwoFace: return "two-face";
        case ReducibleCertificate::Kind::ThreeFace: return "three-face";
        case ReducibleCertificate::Kind::DegreeLe1: return "degree<=1";
    }
    return "?";
}

bool degree_slack_ok(const PlaneGraph& g, const SubgraphRef& h, std::string* why) {
    for (Vertex v : h.verts) {
        if (h.degree_in(v) < g.degree(v) - 1) {
            if (why)
                *why = "deg_H(" + std::to_string(v) + ") = " + std::to_string(h.degree_in(v)) +
                       " < deg_G - 1 = " + std::to_string(g.degree(v) - 1);
            return false;
        }
    }
    return true;
}

bool tree_peel_ok(const PlaneGraph& g, const SubgraphRef& h, std::string* why) {
    if (h.verts.empty()) {
        if (why) *why = "empty subgraph";
        return false;
    }
    if (!h.connected()) {
        if (why) *why = "subgraph is disconnected";
        return false;
    }
    long long edges = h.induced_edges().size();
    if (edges != static_cast<long long>(h.verts.size()) - 1) {
        if (why) *why = "subgraph is not a tree";
        return false;
    }
    if (h.verts.size() == 1) return true;  // the pin alone colors it
    DemandFunction f = demand(g, h, 3);
    // lists pinned at any root leave >= 2 colors elsewhere: greedy works
    for (const auto& [v, val] : f.values) {
        if (val < 2) {
            if (why) *why = "some unpinned vertex would have fewer than two colors";
            return false;
        }
    }
    return true;
}

bool gallai_style_ok(const PlaneGraph& g, const SubgraphRef& h, std::string* why) {
    std::string slack_why;
    if (!degree_slack_ok(g, h, &slack_why)) {
        if (why) *why = slack_why;
        return false;
    }
    for (Vertex v : h.verts) {
        if (g.degree(v) > 3) {
            if (why) *why = "host degree above three at " + std::to_string(v);
            return false;
        }
    }
    SimpleGraph hs = SimpleGraph::from(h);
    for (Vertex x : h.verts) {
        SimpleGraph rest;
        for (Vertex v : hs.verts)
            if (v != x) rest.verts.push_back(v);
        for (Vertex v : rest.verts) {
            std::vector<Vertex> nb;
            for (Vertex w : hs.adj.at(v))
                if (w != x) nb.push_back(w);
            rest.adj[v] = std::move(nb);
        }
        if (!rest.connected()) {
            if (why) *why = "H - " + std::to_string(x) + " is disconnected";
            return false;
        }
        bool slack_vertex = false;
        for (Vertex v : rest.verts)
            if (g.degree(v) == 2) slack_vertex = true;
        if (slack_vertex) continue;
        auto [block_sets, cuts] = rest.blocks_and_cuts();
        bool witness = false;
        for (const auto& bs : block_sets) {
            std::set<Vertex> in(bs.begin(), bs.end());
            int n = static_cast<int>(bs.size());
            long long edges = 0;
            bool all_deg2 = true;
            for (Vertex v : bs) {
                int deg = 0;
                for (Vertex w : rest.adj.at(v))
                    if (in.count(w)) deg++;
                edges += deg;
                if (deg != 2) all_deg2 = false;
            }
            edges /= 2;
            bool complete = edges == static_cast<long long>(n) * (n - 1) / 2;
            bool odd_cycle = all_deg2 && n >= 3 && n % 2 == 1 && edges == n;
            if (!complete && !odd_cycle) {
                witness = true;
                break;
            }
        }
        if (!witness) {
            if (why)
                *why = "H - " + std::to_string(x) +
                       " has neither a degree-2 slack vertex nor a usable block";
            return false;
        }
    }
    return true;
}

std::variant<ReducibleCertificate, Refusal> is_3_reducible(const PlaneGraph& g,
                                                           const SubgraphRef& h,
                                                           long long budget,
                                                           ReducibilityMode mode) {
    if (h.verts.empty()) return make_refusal("empty subgraph");
    std::string why;
    if (!degree_slack_ok(g, h, &why)) return make_refusal("degree slack violated: " + why);

    auto make_cert = [&](ReducibleCertificate::Kind kind, nlohmann::json evidence) {
        ReducibleCertificate cert;
        cert.kind = kind;
        cert.subgraph = h;
        cert.evidence = std::move(evidence);
        cert.checked_fix = true;
        cert.degree_slack_ok = true;
        cert.subgraph_size = h.size();
        return cert;
    };

    if (mode != ReducibilityMode::Brute) {
        if (h.size() == 1 && g.degree(h.verts[0]) <= 1) {
            return make_cert(ReducibleCertificate::Kind::DegreeLe1,
                             {{"vertex", h.verts[0]}, {"host_degree", g.degree(h.verts[0])}});
        }
        if (tree_peel_ok(g, h)) {
            int maxdeg = 0;
            for (Vertex v : h.verts) maxdeg = std::max(maxdeg, h.degree_in(v));
            DemandFunction f = demand(g, h, 3);
            nlohmann::json dem = nlohmann::json::object();
            for (const auto& [v, val] : f.values) dem[std::to_string(v)] = val;
            return make_cert(maxdeg <= 2 ? ReducibleCertificate::Kind::Path
                                         : ReducibleCertificate::Kind::Star,
                             {{"tree_peel", true}, {"demand", dem}});
        }
        if (mode == ReducibilityMode::Structural)
            return make_refusal("no structural recognizer applies (not a degree<=1 vertex or a "
                               "greedy-colorable tree); run the configuration finders instead");
    }

    FixResult fix = check_fix(g, h, 3, budget);
    if (fix.verdict == CheckVerdict::Budget)
        return make_refusal("brute-force budget exceeded", true);
    if (fix.verdict == CheckVerdict::False)
        return make_refusal("(FIX) fails", false, fix.counterexample);
    return make_cert(ReducibleCertificate::Kind::BruteForce,
                     {{"pins_checked", h.size()}, {"nodes_explored", fix.nodes_explored}});
}

}  // namespace girth6
