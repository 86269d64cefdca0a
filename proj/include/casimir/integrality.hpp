#pragma once

#include <functional>
#include <optional>
#include <string>

#include "casimir/wedderburn.hpp"

namespace casimir {

using QPolynomial = Polynomial<Rational>;

struct IntegralityCertificate {
    std::string element;
    QPolynomial minimal_polynomial{Rational(0)};
    bool integral = false;
    /// First non-integer coefficient when not integral.
    std::optional<Rational> witness;
};

/// Minimal polynomial over Q of an element of a unital k-algebra, given only
/// through left multiplication by the element and the unit. Scalars are
/// restricted to Q coordinatewise on the power basis, lazily.
QPolynomial minimal_polynomial_over_Q(const Element& unit, const std::function<Element(const Element&)>& times_a);
QPolynomial minimal_polynomial_over_Q(const Algebra& B, const Element& a);
/// u in A (x) A with the tensor product algebra structure.
QPolynomial minimal_polynomial_over_Q(const Algebra& A, const Element& u, bool tensor_square);
QPolynomial minimal_polynomial_over_Q(const Cyclotomic& a);

IntegralityCertificate certify_polynomial(std::string element, QPolynomial m);
IntegralityCertificate is_integral_over_Z(const Algebra& B, const Element& a);
IntegralityCertificate is_integral_over_Z_tensor(const Algebra& A, const Element& u);
IntegralityCertificate is_integral_over_Z(const Cyclotomic& a);

/// m(a) = 0 and no proper monic divisor of m over Q annihilates a (checked
/// through the degree of the Krylov space, which equals deg m).
bool replay_certificate(const Element& unit, const std::function<Element(const Element&)>& times_a,
                        const IntegralityCertificate& cert);

std::string format_rational_polynomial(const QPolynomial& p);

struct DivisibilityVerdict {
    Rational gamma;
    std::vector<int> degrees;
    std::vector<bool> divides;
    IntegralityCertificate casimir;
    /// Both sides agree, so this is the common answer.
    bool holds = false;
};

/// Direct division d(S) | Gamma(1) against integrality of c_lambda. Requires a
/// fully split decomposition and Gamma(1) in Z 1 (InapplicableHypothesis);
/// disagreement raises EquivalenceViolation.
DivisibilityVerdict frobenius_divisibility_verdict(const FrobeniusStructure& F, const WedderburnData& W);

struct RelativeComponent {
    int degree = 0;
    int induced_dimension = 0;
    Cyclotomic scalar;
    IntegralityCertificate certificate;
    /// Present when both Gamma^mu(1) and the induced dimension are rational integers.
    std::optional<bool> divides;
};

struct RelativeDivisibility {
    Cyclotomic gamma_mu;
    IntegralityCertificate casimir;
    std::vector<RelativeComponent> components;
};

/// phi: A -> B as a B.dim x A.dim matrix; both algebra-map and mu o phi = lambda
/// are re-verified (NotASymmetricHomomorphism). For each S the induced
/// dimension is rank(R_{phi(e(S))} on B) / d(S), and Gamma^mu(1)/dim Ind is
/// checked to equal Gamma^lambda(1)_S / d(S).
RelativeDivisibility relative_divisibility(const CMatrix& phi, const FrobeniusStructure& FA,
                                           const FrobeniusStructure& FB, const WedderburnData& WA);

}  // namespace casimir
