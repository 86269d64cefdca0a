#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace casimir {

enum class ErrorKind {
    InvalidInput,
    ConductorMismatch,
    DivisionByZero,
    DimensionMismatch,
    NotATraceForm,
    Degenerate,
    NotSemisimple,
    BadPrime,
    PrecisionExceeded,
    SplitUncertified,
    NonSplitCenter,
    InapplicableHypothesis,
    EquivalenceViolation,
    NotUnimodular,
    NormalizationImpossible,
    NotASymmetricHomomorphism,
    NonIntegralFusion,
    AxiomFailure,
    Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace casimir
