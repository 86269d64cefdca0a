#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace casimir;
using fx::q;

namespace {
const CyclotomicField& QQ() { return fx::Q(); }

QPolynomial qp(std::initializer_list<Rational> low_first) { return QPolynomial(Rational(0), std::vector<Rational>(low_first)); }

template <class F>
ErrorKind error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Internal;
}

FrobeniusStructure hopf_form(const HopfAlgebra& H) { return frobenius_structure(H.algebra, delta_one_form(H.A())); }
}  // namespace

TEST_CASE("minimal polynomials over Q") {
    auto k = fx::ground();
    CHECK(minimal_polynomial_over_Q(*k, k->unit()) == qp({-1, 1}));
    CHECK(minimal_polynomial_over_Q(*k, fx::vec(QQ(), {Rational(1, 2)})) == qp({Rational(-1, 2), 1}));
    CHECK(minimal_polynomial_over_Q(Cyclotomic::zeta(CyclotomicField::get(4))) == qp({1, 0, 1}));
    CHECK(minimal_polynomial_over_Q(Cyclotomic::zeta(CyclotomicField::get(5))) == qp({1, 1, 1, 1, 1}));

    auto kC2 = fx::kG("C2", 1);
    auto F = hopf_form(kC2);
    CHECK(minimal_polynomial_over_Q(kC2.A(), F.casimir, true) == qp({0, -2, 1}));
}

TEST_CASE("restriction of scalars sees the whole field") {
    // zeta_3 * 1 in k = Q(zeta_3): degree 2 over Q even though the algebra is one-dimensional
    const auto& K3 = CyclotomicField::get(3);
    auto k = fx::ground(K3);
    Element a{Cyclotomic::zeta(K3)};
    CHECK(minimal_polynomial_over_Q(*k, a) == qp({1, 1, 1}));
}

TEST_CASE("integrality certificates") {
    auto k = fx::ground();
    auto half = is_integral_over_Z(*k, fx::vec(QQ(), {Rational(1, 2)}));
    CHECK_FALSE(half.integral);
    REQUIRE(half.witness.has_value());
    CHECK(*half.witness == Rational(-1, 2));
    CHECK(is_integral_over_Z(Cyclotomic::zeta(CyclotomicField::get(4))).integral);
    CHECK(format_rational_polynomial(qp({1, 0, 1})) == "x^2 + 1");

    auto kS3 = fx::kG("S3", 3);
    auto F = hopf_form(kS3);
    auto c = is_integral_over_Z_tensor(kS3.A(), F.casimir);
    CHECK(c.integral);
    CHECK_FALSE(c.witness.has_value());
}

TEST_CASE("certificates replay") {
    auto kS3 = fx::kG("S3", 3);
    const auto& A = kS3.A();
    Element a = A.zero_element();
    a[1] = q(A.zero().field(), 2);
    a[4] = Cyclotomic::zeta(A.zero().field());
    auto cert = is_integral_over_Z(A, a);
    CHECK(cert.integral);
    auto times = [&](const Element& v) { return A.multiply(a, v); };
    CHECK(replay_certificate(A.unit(), times, cert));
    auto forged = cert;
    forged.minimal_polynomial = forged.minimal_polynomial * qp({0, 1});
    CHECK_FALSE(replay_certificate(A.unit(), times, forged));
}

TEST_CASE("integral elements are closed under sums and products") {
    std::mt19937_64 rng(4);
    auto kD4 = fx::kG("D4");
    const auto& A = kD4.A();
    for (int t = 0; t < 5; ++t) {
        Element a = random_element(A, rng, 2), b = random_element(A, rng, 2);
        REQUIRE(is_integral_over_Z(A, a).integral);
        REQUIRE(is_integral_over_Z(A, b).integral);
        CHECK(is_integral_over_Z(A, a + b).integral);
        CHECK(is_integral_over_Z(A, A.multiply(a, b)).integral);
    }
}

TEST_CASE("divisibility verdict") {
    auto kS3 = fx::kG("S3", 3);
    auto F = hopf_form(kS3);
    auto W = central_primitive_idempotents(F);
    auto v = frobenius_divisibility_verdict(F, W);
    CHECK(v.gamma == 6);
    CHECK(v.degrees == std::vector<int>{1, 1, 2});
    CHECK(v.divides == std::vector<bool>{true, true, true});
    CHECK(v.casimir.integral);
    CHECK(v.holds);

    auto k = fx::ground();
    auto Fk = frobenius_structure(k, fx::vec(QQ(), {1}));
    auto vk = frobenius_divisibility_verdict(Fk, central_primitive_idempotents(Fk));
    CHECK(vk.holds);
    CHECK(vk.gamma == 1);
}

TEST_CASE("rescaled forms") {
    auto kC2 = fx::kG("C2", 1);
    // u = 3 gives lambda' = 3 lambda and Gamma'(1) = 2/3
    auto F3 = frobenius_structure(kC2.algebra, fx::vec(QQ(), {3, 0}));
    CHECK(scalar_value(kC2.A(), casimir_trace(F3, kC2.A().unit())) == q(QQ(), 2, 3));
    auto W = central_primitive_idempotents(F3);
    CHECK(error_of([&] { frobenius_divisibility_verdict(F3, W); }) == ErrorKind::InapplicableHypothesis);

    auto Fthird = frobenius_structure(kC2.algebra, fx::vec(QQ(), {Rational(1, 3), 0}));
    auto v = frobenius_divisibility_verdict(Fthird, central_primitive_idempotents(Fthird));
    CHECK(v.gamma == 6);
    CHECK(v.holds);
    CHECK(v.casimir.minimal_polynomial == qp({0, -6, 1}));
}

TEST_CASE("non-split components are outside the hypothesis") {
    auto kQ8 = fx::kG("Q8", 1);
    auto F = hopf_form(kQ8);
    auto W = central_primitive_idempotents(F);
    CHECK(error_of([&] { frobenius_divisibility_verdict(F, W); }) == ErrorKind::InapplicableHypothesis);
}

TEST_CASE("relative divisibility along the identity") {
    auto kS3 = fx::kG("S3", 3);
    auto F = hopf_form(kS3);
    auto W = central_primitive_idempotents(F);
    auto id = CMatrix::identity(6, kS3.A().zero());
    auto r = relative_divisibility(id, F, F, W);
    REQUIRE(r.components.size() == 3);
    CHECK(r.components[2].degree == 2);
    CHECK(r.components[2].induced_dimension == 2);
    CHECK(r.components[2].scalar == q(kS3.A().zero().field(), 3));
    for (const auto& c : r.components) {
        CHECK(c.certificate.integral);
        REQUIRE(c.divides.has_value());
        CHECK(*c.divides);
    }
}

TEST_CASE("relative divisibility from the ground field") {
    auto kS3 = fx::kG("S3", 1);
    auto F = hopf_form(kS3);
    auto Fk = frobenius_structure(fx::ground(), fx::vec(QQ(), {1}));
    auto Wk = central_primitive_idempotents(Fk);
    auto phi = CMatrix::from_columns({kS3.A().unit()}, 6, kS3.A().zero());
    auto r = relative_divisibility(phi, Fk, F, Wk);
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].induced_dimension == 6);
    CHECK(r.components[0].scalar == q(QQ(), 1));
}

TEST_CASE("relative divisibility rejects non-symmetric maps") {
    auto kS3 = fx::kG("S3", 1);
    auto F = hopf_form(kS3);
    auto Fk = frobenius_structure(fx::ground(), fx::vec(QQ(), {2}));
    auto Wk = central_primitive_idempotents(Fk);
    auto phi = CMatrix::from_columns({kS3.A().unit()}, 6, kS3.A().zero());
    CHECK(error_of([&] { relative_divisibility(phi, Fk, F, Wk); }) == ErrorKind::NotASymmetricHomomorphism);
    auto not_unital = CMatrix::from_columns({kS3.A().basis(1)}, 6, kS3.A().zero());
    CHECK(error_of([&] { relative_divisibility(not_unital, Fk, F, Wk); }) == ErrorKind::NotASymmetricHomomorphism);
}

TEST_CASE("character map into the dual") {
    auto kS3 = fx::kG("S3", 3);
    auto I = integrals(kS3);
    auto W = central_primitive_idempotents(kS3.A());
    auto RR = representation_ring(kS3, I, W);
    auto dual = dual_hopf(kS3);
    auto FB = frobenius_structure(dual.algebra, I.Lambda0);
    auto WR = central_primitive_idempotents(RR.frobenius);
    auto r = relative_divisibility(RR.embedding, RR.frobenius, FB, WR);
    CHECK(r.gamma_mu == q(kS3.A().zero().field(), 6));
    std::vector<int> dims;
    std::vector<Cyclotomic> scalars;
    for (const auto& c : r.components) {
        dims.push_back(c.induced_dimension);
        CHECK(c.certificate.integral);
        CHECK(c.scalar * q(c.scalar.field(), c.induced_dimension) == r.gamma_mu);
    }
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<int>{1, 2, 3});
}
