#pragma once

#include "casimir/hopf.hpp"
#include "casimir/integrality.hpp"

namespace casimir {

struct RepresentationRing {
    /// fusion[S][T][U] = multiplicity of U in S (x) T.
    std::vector<std::vector<std::vector<int>>> fusion;
    /// Index of S* for every S.
    std::vector<int> dual;
    int trivial = -1;
    /// delta([S]) = chi_S(Lambda0).
    Element delta;
    /// H.dim x |Irr H|; column S is chi_S in the dual basis of H*.
    CMatrix embedding;
    AlgebraPtr algebra;
    /// (R_k(H), delta).
    FrobeniusStructure frobenius;
    Verification checks;

    int size() const { return static_cast<int>(dual.size()); }
};

/// Fusion constants from convolution of characters, duals from S^T chi_S,
/// delta from Lambda0, plus the checks delta([S]) = [S = triv],
/// delta([S][T]) = [T = S*], chi_k an algebra map into H* with
/// delta = ev(Lambda0) o chi_k, and the Casimir element of (R_k(H), delta)
/// equal to sum_S [S] (x) [S*]. NonIntegralFusion if a multiplicity is not a
/// nonnegative integer.
RepresentationRing representation_ring(const HopfAlgebra& H, const IntegralData& I, const WedderburnData& W);

/// Full Hopf pipeline for the equivalence "c_lambda integral iff degrees divide dim H".
struct HopfDivisibility {
    IntegralData integrals;
    HopfCasimirData casimir;
    WedderburnData wedderburn;
    DivisibilityVerdict verdict;
};
HopfDivisibility frobenius_divisibility_hopf(const HopfAlgebra& H, const WedderburnOptions& opts = {});

struct ZhuComponent {
    int degree = 0;
    bool central = false;
    /// Lambda <- chi_{S*} = (dim H / d(S)) e(S) holds exactly.
    bool identity_holds = false;
    bool coefficients_in_Z_zeta = false;
    IntegralityCertificate certificate;
    bool divides = false;
};
struct ZhuReport {
    std::vector<ZhuComponent> components;
    Verification checks;
};
ZhuReport zhu_check(const HopfAlgebra& H, const IntegralData& I, const WedderburnData& W, const RepresentationRing& RR);

struct ClassEquationComponent {
    int degree = 0;
    int induced_dimension = 0;
    bool divides = false;
    Cyclotomic scalar;
};
struct ClassEquationReport {
    WedderburnData ring_wedderburn;
    std::vector<ClassEquationComponent> components;
    Verification checks;
};
ClassEquationReport class_equation_check(const HopfAlgebra& H, const IntegralData& I, const RepresentationRing& RR,
                                         const WedderburnOptions& opts = {});

struct SchneiderComponent {
    /// Index in Irr H of the block Psi(e(S')) lands on.
    int block = -1;
    int degree = 0;
    int induced_dimension = 0;
    bool divides = false;
};
struct SchneiderReport {
    FactorizableVerdict factorizable{false, 0};
    /// H.dim x |Irr H|, Psi = Phi o chi_k.
    CMatrix Psi;
    WedderburnData ring_wedderburn;
    std::vector<SchneiderComponent> components;
    Verification checks;
};
/// Requires a factorizable verdict (InapplicableHypothesis otherwise).
SchneiderReport schneider_check(const HopfAlgebra& H, const IntegralData& I, const QuasitriangularData& Q,
                                const WedderburnData& W, const RepresentationRing& RR,
                                const WedderburnOptions& opts = {});

struct PullbackComponent {
    int degree = 0;
    /// Index in Irr D of the pulled-back character.
    int block = -1;
    bool square_divides = false;
};
struct PullbackReport {
    std::vector<PullbackComponent> components;
    Verification checks;
};
/// Irreducibles of K pulled back along a surjective Hopf map pi: D -> K are
/// irreducibles of D, so Schneider's bound on D bounds their degrees.
PullbackReport pullback_degrees(const HopfAlgebra& D, const WedderburnData& WD, const HopfAlgebra& K,
                                const WedderburnData& WK, const CMatrix& pi);

/// Re-expresses every scalar of H over Q(zeta_m), n | m.
HopfAlgebra extend_conductor(const HopfAlgebra& H, int conductor);

}  // namespace casimir
