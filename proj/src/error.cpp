#include "casimir/error.hpp"

namespace casimir {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::ConductorMismatch: return "ConductorMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotATraceForm: return "NotATraceForm";
        case ErrorKind::Degenerate: return "Degenerate";
        case ErrorKind::NotSemisimple: return "NotSemisimple";
        case ErrorKind::BadPrime: return "BadPrime";
        case ErrorKind::PrecisionExceeded: return "PrecisionExceeded";
        case ErrorKind::SplitUncertified: return "SplitUncertified";
        case ErrorKind::NonSplitCenter: return "NonSplitCenter";
        case ErrorKind::InapplicableHypothesis: return "InapplicableHypothesis";
        case ErrorKind::EquivalenceViolation: return "EquivalenceViolation";
        case ErrorKind::NotUnimodular: return "NotUnimodular";
        case ErrorKind::NormalizationImpossible: return "NormalizationImpossible";
        case ErrorKind::NotASymmetricHomomorphism: return "NotASymmetricHomomorphism";
        case ErrorKind::NonIntegralFusion: return "NonIntegralFusion";
        case ErrorKind::AxiomFailure: return "AxiomFailure";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace casimir
