#include "girth6/discharging.hpp"

#include <algorithm>
#include <functional>

#include "girth6/io.hpp"

namespace girth6 {

std::string to_string(Rule r) {
    switch (r) {
        case Rule::T0: return "T0";
        case Rule::T1: return "T1";
        case Rule::T2: return "T2";
    }
    return "?";
}

Rational ChargeLedger::sum_initial() const {
    Rational s;
    for (const auto& [e, c] : initial) s += c;
    return s;
}

Rational ChargeLedger::sum_final() const {
    Rational s;
    for (const auto& [e, c] : final_charge) s += c;
    return s;
}

void check_discharging_preconditions(const PlaneGraph& g, const ZMarker& z) {
    std::vector<std::string> bad;
    if (g.vertex_count() < 3) bad.push_back("|V| >= 3");
    if (!g.two_connected()) bad.push_back("2-connected");
    auto gi = g.girth();
    if (gi && *gi < 6) bad.push_back("girth >= 6");
    if (!gi) bad.push_back("has a cycle");  // 2-connected graphs always do
    if (bad.empty()) {
        for (const SixCycleInfo& info : six_cycles(g))
            if (!info.facial) {
                bad.push_back("every 6-cycle bounds a face");
                break;
            }
    }
    switch (z.kind) {
        case ZMarker::Kind::SingleVertex:
            if (!g.has_vertex(z.verts[0])) bad.push_back("Z vertex belongs to the graph");
            break;
        case ZMarker::Kind::SixCycle:
            break;  // ZMarker::six_cycle validated the cycle against its host
        case ZMarker::Kind::Empty:
            bad.push_back("Z is a vertex or a 6-cycle");
            break;
    }
    if (!bad.empty()) {
        std::string msg = "discharging hypotheses violated:";
        for (const auto& b : bad) msg += " [" + b + "]";
        throw PreconditionFailed(msg);
    }
}

ChargeLedger initial_charges(const PlaneGraph& g, const ZMarker& z) {
    check_discharging_preconditions(g, z);
    ChargeLedger led;
    led.z = z;
    led.delta = z.kind == ZMarker::Kind::SingleVertex ? 6 : 12;
    for (Vertex v : g.vertices()) {
        Rational ch;
        if (z.contains(v))
            ch = z.kind == ZMarker::Kind::SingleVertex ? Rational(2 * g.degree(v))
                                                       : Rational(2 * g.degree(v) - 4);
        else
            ch = Rational(2 * g.degree(v) - 6);
        led.initial[Entity{false, v}] = ch;
    }
    for (const Face& f : g.faces()) led.initial[Entity{true, f.id}] = Rational(f.length() - 6);
    led.final_charge = led.initial;

    if (led.sum_initial() != Rational(led.delta - 12))
        throw PreconditionFailed("Euler charge identity failed: sum ch0 != delta - 12");
    return led;
}

namespace {

std::optional<Edge> first_edge(const std::vector<Vertex>& path) {
    if (path.size() < 2) return std::nullopt;
    return Edge{path[0], path[1]};
}

}  // namespace

ChargeLedger apply_rules(const PlaneGraph& g, const ZMarker& z) {
    ChargeLedger led = initial_charges(g, z);

    std::vector<Vertex> receivers;
    for (Vertex u : g.vertices())
        if (g.degree(u) == 2 && !z.contains(u)) receivers.push_back(u);

    std::map<Vertex, int> intake01;
    std::vector<Transfer> transfers;

    // (T0) every Z vertex sends 2 to each degree-2 vertex at nice distance <= 7
    for (Vertex zv : z.verts) {
        for (Vertex u : receivers) {
            auto d = nice_distance(g, z, u, zv);
            if (!d || *d > 7) continue;
            auto path = nice_path(g, z, zv, u);
            Transfer t{Rule::T0, Entity{false, zv}, u, 2, *path, first_edge(*path)};
            transfers.push_back(std::move(t));
            intake01[u] += 2;
        }
    }
    // (T1) every degree>=4 vertex outside Z sends 1 likewise
    for (Vertex v : g.vertices()) {
        if (z.contains(v) || g.degree(v) < 4) continue;
        for (Vertex u : receivers) {
            auto d = nice_distance(g, z, u, v);
            if (!d || *d > 7) continue;
            auto path = nice_path(g, z, v, u);
            Transfer t{Rule::T1, Entity{false, v}, u, 1, *path, first_edge(*path)};
            transfers.push_back(std::move(t));
            intake01[u] += 1;
        }
    }
    // (T2) every face of length >= 7 sends 1 to each eligible degree-2 vertex
    // with total T0+T1 intake <= 1 and nice face distance <= 3
    for (const Face& f : g.faces()) {
        if (f.length() < 7) continue;
        std::set<Vertex> on;
        for (const Dart& d : f.boundary) on.insert(d.from);
        for (Vertex u : receivers) {
            if (intake01[u] > 1) continue;
            if (on.count(u)) {
                transfers.push_back(Transfer{Rule::T2, Entity{true, f.id}, u, 1, {}, {}});
                continue;
            }
            // pick the incident degree-3 vertex realizing the minimum distance
            std::optional<int> best;
            Vertex best_v = -1;
            for (Vertex v : on) {
                if (g.degree(v) != 3 || z.contains(v)) continue;
                auto d = nice_distance(g, z, v, u);
                if (d && (!best || *d < *best || (*d == *best && v < best_v))) {
                    best = d;
                    best_v = v;
                }
            }
            if (!best || *best > 3) continue;
            auto path = nice_path(g, z, best_v, u);
            transfers.push_back(
                Transfer{Rule::T2, Entity{true, f.id}, u, 1, *path, first_edge(*path)});
        }
    }

    // canonical log order: rule, then sender (vertices before faces), receiver
    std::sort(transfers.begin(), transfers.end(), [](const Transfer& a, const Transfer& b) {
        if (a.rule != b.rule) return static_cast<int>(a.rule) < static_cast<int>(b.rule);
        if (a.sender != b.sender) return a.sender < b.sender;
        return a.receiver < b.receiver;
    });
    for (size_t i = 1; i < transfers.size(); ++i) {
        const Transfer &p = transfers[i - 1], &c = transfers[i];
        if (p.rule == c.rule && p.sender == c.sender && p.receiver == c.receiver)
            throw PreconditionFailed("duplicate (rule, sender, receiver) transfer");
    }

    for (const Transfer& t : transfers) {
        led.final_charge[t.sender] -= Rational(t.amount);
        led.final_charge[Entity{false, t.receiver}] += Rational(t.amount);
    }
    led.transfers = std::move(transfers);

    if (led.sum_final() != led.sum_initial())
        throw PreconditionFailed("charge conservation failed");
    return led;
}

AuditVerdict audit(const PlaneGraph& g, const ZMarker& z) {
    AuditVerdict verdict;
    verdict.ledger = apply_rules(g, z);

    std::optional<Entity> negative, positive;
    for (const auto& [e, ch] : verdict.ledger.final_charge) {
        if (ch.sign() < 0 && !negative) negative = e;
        if (ch.sign() > 0 && !positive) positive = e;
    }
    if (!negative) {
        verdict.all_nonnegative = true;
        verdict.positive_witness = positive;
        return verdict;
    }
    verdict.negative_entity = negative;
    verdict.negative_charge = verdict.ledger.final_charge.at(*negative);
    auto hit = find_any(g, z, 29);
    if (!hit) {
        verdict.extraction_failed = true;
        verdict.extraction_error = "no configuration family matched";
        return verdict;
    }
    try {
        verdict.extracted = structural_certificate(*hit, g, z);
    } catch (const CertificateFailed& e) {
        verdict.extraction_failed = true;
        verdict.extraction_error = e.what();
    }
    return verdict;
}

std::vector<FaceBoundViolation> face_charge_bound_check(const ChargeLedger& ledger,
                                                        const PlaneGraph& g, const ZMarker&) {
    auto ceil_div = [](long long a, long long b) {
        long long q = a / b, r = a % b;
        if (r != 0 && a > 0) q++;
        return q;
    };
    std::vector<FaceBoundViolation> out;
    for (const Face& f : g.faces()) {
        if (f.length() < 7) continue;
        Rational bound(ceil_div(3LL * f.length() - 24, 4));
        Rational have = ledger.final_charge.at(Entity{true, f.id});
        if (have < bound) out.push_back({f.id, have, bound});
    }
    return out;
}

namespace {

// Certificates coming out of the restricted graph G are re-verified against
// the original host: same host degrees on H, and the structural evidence must
// hold with g0 as host.
ReducibleCertificate reverify_against(const PlaneGraph& g0, const ReducibleCertificate& cert,
                                      const PlaneGraph& g, const std::string& stage) {
    SubgraphRef h0 = SubgraphRef::of(g0, cert.subgraph.verts);
    for (Vertex v : h0.verts)
        if (g.degree(v) != g0.degree(v))
            throw TheoremViolationDiagnostic(
                stage + ": host degree of " + std::to_string(v) + " differs in the restriction",
                "");
    std::string why;
    bool ok = false;
    switch (cert.kind) {
        case ReducibleCertificate::Kind::DegreeLe1:
            ok = h0.size() == 1 && g0.degree(h0.verts[0]) <= 1;
            why = "degree<=1 evidence";
            break;
        case ReducibleCertificate::Kind::Path:
        case ReducibleCertificate::Kind::Star:
            ok = tree_peel_ok(g0, h0, &why) && degree_slack_ok(g0, h0, &why);
            break;
        case ReducibleCertificate::Kind::TwoFace:
        case ReducibleCertificate::Kind::ThreeFace:
            ok = gallai_style_ok(g0, h0, &why);
            break;
        case ReducibleCertificate::Kind::BruteForce: {
            auto res = is_3_reducible(g0, h0, kDefaultNodeBudget, ReducibilityMode::Brute);
            ok = std::holds_alternative<ReducibleCertificate>(res);
            why = ok ? "" : std::get<Refusal>(res).reason;
            break;
        }
    }
    if (!ok)
        throw TheoremViolationDiagnostic(stage + ": certificate fails against g0: " + why, "");
    ReducibleCertificate out = cert;
    out.subgraph = h0;
    return out;
}

}  // namespace

ReducibleCertificate theorem_pipeline(const PlaneGraph& g0, PipelineTrace* trace) {
    if (g0.vertex_count() == 0) throw PreconditionFailed("empty graph");

    // the minimum-degree shortcut needs no girth; check it before the gate
    ZMarker none = ZMarker::empty();
    if (auto hit = find_degree_le1(g0, none)) {
        if (trace) *trace = PipelineTrace{};
        return structural_certificate(*hit, g0, none);
    }
    auto gi = g0.girth();
    if (gi && *gi < 6) throw GirthTooSmall("theorem pipeline requires girth >= 6");

    // all degrees >= 2: work inside the component holding the smallest vertex
    std::vector<Vertex> comp = g0.components().front();
    PlaneGraph comp_graph = g0.induced(comp);

    BlockDecomposition dec = blocks(comp_graph);
    std::set<Vertex> cutset(dec.cut_vertices.begin(), dec.cut_vertices.end());
    const SubgraphRef* leaf = nullptr;
    for (const SubgraphRef& b : dec.blocks) {
        int cuts_in = 0;
        for (Vertex v : b.verts)
            if (cutset.count(v)) cuts_in++;
        if (cuts_in <= 1 && (leaf == nullptr || b.verts < leaf->verts)) leaf = &b;
    }
    if (!leaf) throw PreconditionFailed("no leaf block found");
    PlaneGraph g1 = comp_graph.induced(leaf->verts);
    Vertex z1_vertex = leaf->verts.front();
    for (Vertex v : leaf->verts)
        if (cutset.count(v)) z1_vertex = v;  // the attachment vertex when G1 != G0

    PipelineTrace local;
    local.component = comp;
    local.block = leaf->verts;

    PlaneGraph g = std::move(g1);
    ZMarker z = ZMarker::single(z1_vertex);
    if (auto zc = minimal_nonfacial_six_cycle(g)) {
        z = *zc;
        g = interior_closure(g, z);
        z = ZMarker::six_cycle(g, z.verts);
        local.used_interior_closure = true;
        local.closure_size = g.vertex_count();
    }
    local.z = z;
    if (trace) *trace = local;

    auto hit = find_any(g, z, 29);
    if (!hit) {
        AuditVerdict verdict = audit(g, z);
        throw TheoremViolationDiagnostic("no reducible configuration found",
                                         audit_to_json(verdict, g).dump());
    }
    ReducibleCertificate cert = structural_certificate(*hit, g, z);
    return reverify_against(g0, cert, g, "pipeline");
}

PeelResult peel_decomposition(const PlaneGraph& g0, int rounds_cap) {
    PeelResult out;
    out.stages.push_back(g0);
    int rounds = 0;
    while (out.stages.back().vertex_count() > 0) {
        if (++rounds > rounds_cap)
            throw BudgetExceeded("peel did not finish within " + std::to_string(rounds_cap) +
                                     " rounds",
                                 rounds);
        const PlaneGraph& current = out.stages.back();
        ReducibleCertificate cert = theorem_pipeline(current);
        cert.subgraph = SubgraphRef::of(current, cert.subgraph.verts);
        std::set<Vertex> remove(cert.subgraph.verts.begin(), cert.subgraph.verts.end());
        std::vector<Vertex> keep;
        for (Vertex v : current.vertices())
            if (!remove.count(v)) keep.push_back(v);
        PlaneGraph next = current.induced(keep);
        out.certificates.push_back(std::move(cert));
        out.stages.push_back(std::move(next));
    }
    return out;
}

}  // namespace girth6
