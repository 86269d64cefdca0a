#pragma once

#include <optional>

#include "casimir/frobenius.hpp"
#include "casimir/group.hpp"

namespace casimir {

/// Hopf structure over a structure-constant algebra. Tensors use the flat
/// Kronecker layout of algebra.hpp.
struct HopfAlgebra {
    AlgebraPtr algebra;
    /// coproduct[k] = Delta(x_k) in A (x) A.
    std::vector<Element> coproduct;
    Element counit;
    /// Column j is S(x_j).
    CMatrix antipode;
    /// Optional universal R-matrix in A (x) A.
    std::optional<Element> R;

    const Algebra& A() const { return *algebra; }
    int dim() const { return algebra->dim(); }
};

/// Delta extended linearly to an element.
Element coproduct_of(const HopfAlgebra& H, const Element& a);
/// Convolution product of linear forms on H: (f g)(h) = f(h_1) g(h_2).
Element convolve(const HopfAlgebra& H, const Element& f, const Element& g);

/// Coassociativity, counit laws, multiplicativity of Delta and epsilon, the
/// two-sided antipode axiom and S^2 = Id, each failure with a basis witness.
Verification verify_hopf(const HopfAlgebra& H, Exec exec = Exec::Automatic);

HopfAlgebra group_algebra(const FiniteGroup& G, int conductor = 0);
/// Dual on the dual basis: multiplication and comultiplication, unit and
/// counit swap roles; the antipode is transposed.
HopfAlgebra dual_hopf(const HopfAlgebra& H);
/// D(G) on the basis delta_x (x) g, index x*|G| + g, with its canonical R.
HopfAlgebra drinfeld_double(const FiniteGroup& G, int conductor = 0);
/// Same Hopf algebra with R = 1 (x) 1 (quasitriangular when cocommutative).
HopfAlgebra with_trivial_R(const HopfAlgebra& H);

struct IntegralData {
    /// Two-sided integral with epsilon(Lambda) = dim H.
    Element Lambda;
    /// chi_reg / dim H, an integral of the dual.
    Element lambda;
    /// Lambda / dim H.
    Element Lambda0;
};

/// Solves h Lambda = epsilon(h) Lambda; NotUnimodular if the left integral is
/// not a right integral, NormalizationImpossible if epsilon(Lambda) = 0.
IntegralData integrals(const HopfAlgebra& H);
Verification verify_integrals(const HopfAlgebra& H, const IntegralData& I);

struct HopfCasimirData {
    Element casimir;
    Element gamma_one;
    /// Gamma^Lambda(epsilon) computed in H* with Frobenius form f -> f(Lambda).
    Element dual_gamma_counit;
};

/// The four expressions S(L1) (x) L2, L2 (x) S(L1), S(L2) (x) L1, L1 (x) S(L2)
/// are compared with each other and with the dual-basis Casimir element of
/// lambda; also Gamma(1) = dim H and, on the dual side, Gamma^Lambda(eps) = eps.
/// Any mismatch throws Internal.
HopfCasimirData hopf_casimir(const HopfAlgebra& H, const IntegralData& I);

// ---- quasitriangular structure ----------------------------------------------

struct QuasitriangularData {
    Element R;
    Element R_inverse;
    /// b = tau(R) R.
    Element b;
    /// Column j is Phi(f_j) for the dual basis functional f_j.
    CMatrix Phi;
};

/// Invertibility of R and the three axioms
///   (Delta (x) Id)R = R13 R23, (Id (x) Delta)R = R13 R12, tau(Delta h) R = R Delta(h),
/// plus the counit identities used for Phi. Throws AxiomFailure with the
/// failing identity.
QuasitriangularData quasitriangular_verify(const HopfAlgebra& H, Exec exec = Exec::Automatic);

struct FactorizableVerdict {
    bool factorizable;
    int phi_rank;
};
FactorizableVerdict factorizable_check(const HopfAlgebra& H, const QuasitriangularData& Q);

/// Surjection D(G) -> kG, delta_x (x) g -> [x = e] g, as a matrix kG <- D(G).
CMatrix double_projection(const FiniteGroup& G, const HopfAlgebra& D, const HopfAlgebra& kG);

}  // namespace casimir
