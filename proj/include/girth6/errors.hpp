#pragma once

#include <stdexcept>
#include <string>

namespace girth6 {

// Every refusal the toolkit can emit carries a stable machine-readable code;
// the CLI maps codes to exit status (0 ok, 2 refusal/cap, 3 theorem violation).
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(msg), code(std::move(c)) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

struct AsymmetricAdjacency : Error {
    explicit AsymmetricAdjacency(const std::string& msg) : Error("AsymmetricAdjacency", msg) {}
};

struct NonPlanarEmbedding : Error {
    explicit NonPlanarEmbedding(const std::string& msg) : Error("NonPlanarEmbedding", msg) {}
};

struct Disconnected : Error {
    explicit Disconnected(const std::string& msg) : Error("Disconnected", msg) {}
};

struct GirthTooSmall : Error {
    explicit GirthTooSmall(const std::string& msg) : Error("GirthTooSmall", msg) {}
};

struct FacialCycle : Error {
    explicit FacialCycle(const std::string& msg) : Error("FacialCycle", msg) {}
};

struct NotInduced : Error {
    explicit NotInduced(const std::string& msg) : Error("NotInduced", msg) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& msg) : Error("PreconditionFailed", msg) {}
};

// Carries a lower bound on how many items exist beyond the budget/cap.
struct BudgetExceeded : Error {
    long long lower_bound;
    explicit BudgetExceeded(const std::string& msg, long long lb = 0)
        : Error("BudgetExceeded", msg), lower_bound(lb) {}
};

struct CapExceeded : Error {
    long long lower_bound;
    explicit CapExceeded(const std::string& msg, long long lb = 0)
        : Error("CapExceeded", msg), lower_bound(lb) {}
};

struct NotColorable : Error {
    explicit NotColorable(const std::string& msg) : Error("NotColorable", msg) {}
};

struct UnknownFixture : Error {
    explicit UnknownFixture(const std::string& msg) : Error("UnknownFixture", msg) {}
};

struct CertificateFailed : Error {
    explicit CertificateFailed(const std::string& msg) : Error("CertificateFailed", msg) {}
};

// The theorem guarantees a configuration on valid inputs; if none is found the
// pipeline throws this with the full audit ledger attached for diagnosis.
struct TheoremViolationDiagnostic : Error {
    std::string ledger_json;
    TheoremViolationDiagnostic(const std::string& msg, std::string ledger)
        : Error("TheoremViolationDiagnostic", msg), ledger_json(std::move(ledger)) {}
};

}  // namespace girth6
