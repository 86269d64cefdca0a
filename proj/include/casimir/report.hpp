#pragma once

#include "casimir/io.hpp"
#include "casimir/theorems.hpp"

namespace casimir {

struct AnalyzeOptions {
    /// fd, zhu, class-equation, schneider or all.
    std::string check = "all";
    /// regular, delta-one, custom; empty picks custom when the input has a lambda.
    std::string lambda;
    std::optional<int> conductor;
    std::optional<long> prime;
    bool parallel = true;
    bool timing = false;
    std::uint64_t seed = 0x5eed;
};

struct AnalyzeResult {
    Json report;
    int exit_code = 0;
};

/// Exit status for an error kind: 2 for invalid input, 3 for internal
/// inconsistencies, 1 for negative mathematical verdicts.
int exit_code_for(ErrorKind kind);

/// verify -> Frobenius structure -> Wedderburn -> requested checks.
AnalyzeResult analyze(const Json& input, const AnalyzeOptions& opts);

/// Human-readable rendering of a report.
std::string render_text(const Json& report);

/// Re-checks every certificate carried by a report (idempotent equations,
/// characters, minimal polynomials) against the embedded input only.
Verification replay_report(const Json& report);

Json certificate_json(const IntegralityCertificate& c);

/// Report with the "provenance" entry (prime, precision, timing) removed.
Json without_provenance(const Json& report);

}  // namespace casimir
