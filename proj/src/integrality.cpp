#include "casimir/integrality.hpp"

namespace casimir {

namespace {

Vector<Rational> flatten(const Element& v) {
    Vector<Rational> out;
    if (v.empty()) return out;
    const int phi = v.front().field().degree();
    out.reserve(v.size() * static_cast<std::size_t>(phi));
    for (const auto& c : v)
        for (int i = 0; i < phi; ++i) out.push_back(c.coeff(i));
    return out;
}

Element evaluate_q(const QPolynomial& m, const Element& unit, const std::function<Element(const Element&)>& times_a) {
    const CyclotomicField& field = unit.front().field();
    Element acc = zero_vector(unit.size(), Cyclotomic(field));
    for (int i = m.degree(); i >= 0; --i) acc = times_a(acc) + scale(Cyclotomic(field, m[i]), unit);
    return acc;
}

}  // namespace

QPolynomial minimal_polynomial_over_Q(const Element& unit, const std::function<Element(const Element&)>& times_a) {
    require(!unit.empty(), ErrorKind::DimensionMismatch, "empty algebra");
    KrylovRelation<Rational> kr(Rational(0));
    Element v = unit;
    while (kr.add(flatten(v))) v = times_a(v);
    return kr.relation_polynomial();
}

QPolynomial minimal_polynomial_over_Q(const Algebra& B, const Element& a) {
    return minimal_polynomial_over_Q(B.unit(), [&](const Element& v) { return B.multiply(a, v); });
}

QPolynomial minimal_polynomial_over_Q(const Algebra& A, const Element& u, bool) {
    Element one = pure_tensor(A.unit(), A.unit());
    return minimal_polynomial_over_Q(one, [&](const Element& v) { return tensor_multiply(A, A, u, v); });
}

QPolynomial minimal_polynomial_over_Q(const Cyclotomic& a) {
    Element one{Cyclotomic(a.field(), Rational(1))};
    return minimal_polynomial_over_Q(one, [&](const Element& v) { return Element{a * v[0]}; });
}

std::string format_rational_polynomial(const QPolynomial& p) {
    return format_polynomial(p, [](const Rational& q) { return q.get_str(); });
}

IntegralityCertificate certify_polynomial(std::string element, QPolynomial m) {
    IntegralityCertificate c;
    c.element = std::move(element);
    c.integral = true;
    for (int i = 0; i <= m.degree(); ++i)
        if (m[i].get_den() != 1) {
            c.integral = false;
            c.witness = m[i];
            break;
        }
    c.minimal_polynomial = std::move(m);
    return c;
}

IntegralityCertificate is_integral_over_Z(const Algebra& B, const Element& a) {
    return certify_polynomial(describe_element(a), minimal_polynomial_over_Q(B, a));
}

IntegralityCertificate is_integral_over_Z_tensor(const Algebra& A, const Element& u) {
    return certify_polynomial("tensor " + describe_element(u), minimal_polynomial_over_Q(A, u, true));
}

IntegralityCertificate is_integral_over_Z(const Cyclotomic& a) {
    return certify_polynomial(a.to_string(), minimal_polynomial_over_Q(a));
}

bool replay_certificate(const Element& unit, const std::function<Element(const Element&)>& times_a,
                        const IntegralityCertificate& cert) {
    const QPolynomial& m = cert.minimal_polynomial;
    if (!m.is_monic()) return false;
    if (!is_zero_vector(evaluate_q(m, unit, times_a))) return false;
    // 1, a, ..., a^{deg m - 1} independent over Q
    KrylovRelation<Rational> kr(Rational(0));
    Element v = unit;
    for (int i = 0; i < m.degree(); ++i) {
        if (!kr.add(flatten(v))) return false;
        v = times_a(v);
    }
    bool integral = true;
    for (int i = 0; i <= m.degree(); ++i) integral = integral && m[i].get_den() == 1;
    return integral == cert.integral;
}

DivisibilityVerdict frobenius_divisibility_verdict(const FrobeniusStructure& F, const WedderburnData& W) {
    const Algebra& A = F.A();
    if (!W.all_split())
        fail(ErrorKind::InapplicableHypothesis, "a Wedderburn component is not split-certified over the base field");
    Element g1 = casimir_trace(F, A.unit());
    auto s = scalar_value(A, g1);
    if (!s || !s->is_rational() || s->rational_value().get_den() != 1)
        fail(ErrorKind::InapplicableHypothesis,
             "Gamma(1) = " + describe_element(g1) + " is not an integer multiple of 1");

    DivisibilityVerdict v;
    v.gamma = s->rational_value();
    v.degrees = W.degrees;
    bool all = true;
    for (int d : W.degrees) {
        bool ok = mpz_class(v.gamma.get_num() % d) == 0;
        v.divides.push_back(ok);
        all = all && ok;
    }
    v.casimir = is_integral_over_Z_tensor(A, F.casimir);
    v.casimir.element = "c_lambda";
    if (all != v.casimir.integral)
        fail(ErrorKind::EquivalenceViolation,
             std::string("degrees ") + (all ? "divide" : "do not divide") + " Gamma(1) = " + v.gamma.get_str() +
                 " but c_lambda is " + (v.casimir.integral ? "" : "not ") + "integral, minimal polynomial " +
                 format_rational_polynomial(v.casimir.minimal_polynomial));
    v.holds = all;
    return v;
}

RelativeDivisibility relative_divisibility(const CMatrix& phi, const FrobeniusStructure& FA,
                                           const FrobeniusStructure& FB, const WedderburnData& WA) {
    const Algebra& A = FA.A();
    const Algebra& B = FB.A();
    Verification hom = verify_algebra_map(A, B, phi);
    if (!hom.passed()) fail(ErrorKind::NotASymmetricHomomorphism, hom.summary());
    for (int i = 0; i < A.dim(); ++i)
        if (evaluate(FB.lambda, phi.column(i)) != FA.lambda[i])
            fail(ErrorKind::NotASymmetricHomomorphism,
                 "mu(phi(x" + std::to_string(i) + ")) = " + evaluate(FB.lambda, phi.column(i)).to_string() +
                     " but lambda(x" + std::to_string(i) + ") = " + FA.lambda[i].to_string());
    if (!WA.all_split()) fail(ErrorKind::InapplicableHypothesis, "source decomposition is not split-certified");

    RelativeDivisibility out;
    auto gm = scalar_value(B, casimir_trace(FB, B.unit()));
    if (!gm) fail(ErrorKind::InapplicableHypothesis, "Gamma^mu(1) is not a scalar");
    out.gamma_mu = *gm;
    out.casimir = is_integral_over_Z_tensor(A, FA.casimir);
    out.casimir.element = "c_lambda";
    if (!out.casimir.integral) fail(ErrorKind::InapplicableHypothesis, "c_lambda is not integral over Z");

    for (std::size_t s = 0; s < WA.size(); ++s) {
        RelativeComponent c;
        c.degree = WA.degrees[s];
        Element e = phi.apply(WA.idempotents[s]);
        int r = rank(B.right_matrix(e));
        require(r > 0, ErrorKind::Degenerate, "induced module is zero for component " + std::to_string(s));
        require(r % c.degree == 0, ErrorKind::Internal,
                "rank " + std::to_string(r) + " of B phi(e) is not divisible by d = " + std::to_string(c.degree));
        c.induced_dimension = r / c.degree;
        c.scalar = out.gamma_mu * Cyclotomic(B.zero().field(), Rational(1, c.induced_dimension));
        Cyclotomic expected = gamma_component(FA, WA, s) * Cyclotomic(A.zero().field(), Rational(1, c.degree));
        require(c.scalar.conductor() == expected.conductor() && c.scalar == expected, ErrorKind::EquivalenceViolation,
                "Gamma^mu(1)/dim Ind = " + c.scalar.to_string() + " but Gamma^lambda(1)_S/d(S) = " + expected.to_string());
        c.certificate = is_integral_over_Z(c.scalar);
        if (out.gamma_mu.is_rational() && out.gamma_mu.rational_value().get_den() == 1)
            c.divides = c.certificate.integral;
        out.components.push_back(std::move(c));
    }
    return out;
}

}  // namespace casimir
