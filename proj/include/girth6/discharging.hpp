#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "girth6/configurations.hpp"
#include "girth6/plane_graph.hpp"
#include "girth6/rational.hpp"
#include "girth6/reducibility.hpp"

namespace girth6 {

enum class Rule { T0, T1, T2 };
std::string to_string(Rule r);

// Charge carrier: a vertex or a face.  Vertices order before faces.
struct Entity {
    bool is_face = false;
    int id = -1;
    friend bool operator==(const Entity&, const Entity&) = default;
    friend auto operator<=>(const Entity&, const Entity&) = default;
    std::string str() const { return (is_face ? "f" : "v") + std::to_string(id); }
};

struct Transfer {
    Rule rule = Rule::T0;
    Entity sender;
    Vertex receiver = -1;
    int amount = 0;                       // 2 for T0, 1 for T1/T2
    std::vector<Vertex> path;             // fixed shortest Z-nice path, sender side first
    std::optional<Edge> through_edge;     // first edge of the path when length >= 1
};

struct ChargeLedger {
    ZMarker z;
    int delta = 0;  // 6 for a vertex Z, 12 for a 6-cycle Z
    std::map<Entity, Rational> initial;
    std::vector<Transfer> transfers;
    std::map<Entity, Rational> final_charge;

    Rational sum_initial() const;
    Rational sum_final() const;
};

// Hypothesis gate shared by the discharging entry points; throws
// PreconditionFailed naming every violated hypothesis.
void check_discharging_preconditions(const PlaneGraph& g, const ZMarker& z);

// ch0(v) = 2deg-6 off Z, 2deg for a single-vertex Z, 2deg-4 on a 6-cycle Z;
// ch0(f) = |f|-6.  Asserts the Euler identity sum = delta - 12.
ChargeLedger initial_charges(const PlaneGraph& g, const ZMarker& z);

// Runs T0 and T1, then T2 against the completed T0+T1 intake.  Each transfer
// logs one deterministic shortest Z-nice path and its through-edge.
ChargeLedger apply_rules(const PlaneGraph& g, const ZMarker& z);

struct AuditVerdict {
    ChargeLedger ledger;
    bool all_nonnegative = false;
    std::optional<Entity> positive_witness;   // present when something is positive
    std::optional<Entity> negative_entity;    // smallest negative entity
    std::optional<Rational> negative_charge;
    std::optional<ReducibleCertificate> extracted;
    bool extraction_failed = false;
    std::string extraction_error;
};

// Charge audit: nonnegative final charges everywhere, or a negative
// entity plus an extracted (verified) reducible configuration.
AuditVerdict audit(const PlaneGraph& g, const ZMarker& z);

struct FaceBoundViolation {
    int face_id = -1;
    Rational final_charge;
    Rational bound;
};

// Diagnostic: faces of length >= 7 must keep at least ceil((3|f|-24)/4).
std::vector<FaceBoundViolation> face_charge_bound_check(const ChargeLedger& ledger,
                                                        const PlaneGraph& g, const ZMarker& z);

struct PipelineTrace {
    std::vector<Vertex> component;
    std::vector<Vertex> block;
    ZMarker z;
    bool used_interior_closure = false;
    int closure_size = 0;
};

// Proof replay: min-degree shortcut, leaf block, minimal non-facial 6-cycle
// restriction, Z-avoiding finders, verification against both the restricted
// graph and the original.  Throws TheoremViolationDiagnostic with the audit
// ledger when no configuration is found (must not happen on valid inputs).
ReducibleCertificate theorem_pipeline(const PlaneGraph& g0, PipelineTrace* trace = nullptr);

// Repeatedly extract a certificate and delete its vertices until empty.  Each
// certificate is hosted on the peel stage it was extracted from; the stages
// are kept alongside (deque keeps references stable).
struct PeelResult {
    std::deque<PlaneGraph> stages;
    std::vector<ReducibleCertificate> certificates;

    PeelResult() = default;
    PeelResult(const PeelResult&) = delete;
    PeelResult& operator=(const PeelResult&) = delete;
    PeelResult(PeelResult&&) = default;
    PeelResult& operator=(PeelResult&&) = default;
};

PeelResult peel_decomposition(const PlaneGraph& g0, int rounds_cap);

}  // namespace girth6
