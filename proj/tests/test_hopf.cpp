#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace casimir;
using fx::q;

namespace {
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

const CyclotomicField& field_of(const HopfAlgebra& H) { return H.A().zero().field(); }

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

struct Pipeline {
    HopfAlgebra H;
    IntegralData I;
    WedderburnData W;
    RepresentationRing RR;

    explicit Pipeline(HopfAlgebra h)
        : H(std::move(h)), I(integrals(H)), W(central_primitive_idempotents(H.A())), RR(representation_ring(H, I, W)) {}
};
}  // namespace

TEST_CASE("hopf axioms") {
    for (const char* g : {"C2", "S3", "Q8"}) {
        auto H = fx::kG(g);
        CHECK(verify_hopf(H).passed());
        CHECK(verify_hopf(dual_hopf(H)).passed());
    }
    auto bad = fx::kG("S3");
    bad.antipode = CMatrix::identity(6, bad.A().zero());
    auto v = verify_hopf(bad);
    CHECK_FALSE(v.passed());
    CHECK(v.summary().find("S(h1) h2") != std::string::npos);
}

TEST_CASE("integrals of a group algebra") {
    auto kS3 = fx::kG("S3");
    const auto& K = field_of(kS3);
    auto I = integrals(kS3);
    for (int g = 0; g < 6; ++g) CHECK(I.Lambda[g] == q(K, 1));
    CHECK(I.lambda == delta_one_form(kS3.A()));
    CHECK(I.Lambda0 == scale(q(K, 1, 6), I.Lambda));
    CHECK(verify_integrals(kS3, I).passed());
}

TEST_CASE("hopf casimir values") {
    for (auto H : {fx::kG("C2"), fx::kG("S3"), dual_hopf(fx::kG("S3")), drinfeld_double(named_group("C2"))}) {
        auto I = integrals(H);
        auto C = hopf_casimir(H, I);
        CHECK(scalar_value(H.A(), C.gamma_one) == q(field_of(H), H.dim()));
        CHECK(C.dual_gamma_counit == H.counit);
        auto F = frobenius_structure(H.algebra, I.lambda);
        CHECK(C.casimir == F.casimir);
    }
}

TEST_CASE("duality") {
    auto kC2 = fx::kG("C2", 1);
    auto D = dual_hopf(kC2);
    CHECK(D.counit == fx::vec(fx::Q(), {1, 0}));
    CHECK(D.A().unit() == fx::vec(fx::Q(), {1, 1}));
    auto kS3 = fx::kG("S3");
    CHECK(hopf_json(dual_hopf(dual_hopf(kS3))) == hopf_json(kS3));
    CHECK(center_basis(dual_hopf(kS3).A()).size() == 6);
}

TEST_CASE("drinfeld doubles") {
    auto D2 = drinfeld_double(named_group("C2"));
    CHECK(D2.dim() == 4);
    CHECK(verify_hopf(D2).passed());
    auto D6 = drinfeld_double(named_group("S3"));
    CHECK(D6.dim() == 36);
    CHECK(verify_hopf(D6).passed());
    CHECK(D6.R.has_value());
}

TEST_CASE("representation ring of S3") {
    Pipeline P(fx::kG("S3"));
    const auto& RR = P.RR;
    CHECK_MESSAGE(RR.checks.passed(), RR.checks.summary());
    REQUIRE(RR.size() == 3);
    int v = -1, sgn = -1;
    for (int s = 0; s < 3; ++s) {
        if (P.W.degrees[s] == 2) v = s;
        else if (s != RR.trivial) sgn = s;
    }
    REQUIRE(v >= 0);
    REQUIRE(sgn >= 0);
    // V (x) V = triv + sgn + V
    CHECK(RR.fusion[v][v][RR.trivial] == 1);
    CHECK(RR.fusion[v][v][sgn] == 1);
    CHECK(RR.fusion[v][v][v] == 1);
    for (int t = 0; t < 3; ++t)
        for (int u = 0; u < 3; ++u) CHECK(RR.fusion[RR.trivial][t][u] == (t == u ? 1 : 0));
    CHECK(RR.dual == std::vector<int>{0, 1, 2});
    CHECK(RR.delta[RR.trivial] == q(field_of(P.H), 1));
}

TEST_CASE("duals of irreducibles in an abelian group") {
    Pipeline P(fx::kG("C6"));
    CHECK(P.RR.checks.passed());
    int self_dual = 0;
    for (int s = 0; s < 6; ++s) self_dual += P.RR.dual[s] == s;
    CHECK(self_dual == 2);
}

TEST_CASE("frobenius divisibility through the hopf pipeline") {
    auto r = frobenius_divisibility_hopf(fx::kG("S3"));
    CHECK(r.verdict.holds);
    CHECK(r.verdict.gamma == 6);
    auto d = frobenius_divisibility_hopf(dual_hopf(fx::kG("S3")));
    CHECK(d.verdict.degrees == std::vector<int>(6, 1));
    CHECK(d.verdict.holds);
}

TEST_CASE("zhu on group algebras") {
    for (const char* g : {"S3", "Q8"}) {
        Pipeline P(fx::kG(g));
        auto z = zhu_check(P.H, P.I, P.W, P.RR);
        CHECK_MESSAGE(z.checks.passed(), z.checks.summary());
        for (const auto& c : z.components) {
            CHECK(c.central);
            CHECK(c.identity_holds);
            CHECK(c.coefficients_in_Z_zeta);
            CHECK(c.divides);
        }
    }
}

TEST_CASE("zhu is silent on non-central characters") {
    Pipeline P(dual_hopf(fx::kG("S3")));
    auto z = zhu_check(P.H, P.I, P.W, P.RR);
    int central = 0;
    for (const auto& c : z.components) central += c.central;
    CHECK(central == 1);
}

TEST_CASE("class equation") {
    Pipeline P(fx::kG("S3"));
    auto r = class_equation_check(P.H, P.I, P.RR);
    CHECK_MESSAGE(r.checks.passed(), r.checks.summary());
    std::vector<int> dims;
    for (const auto& c : r.components) {
        dims.push_back(c.induced_dimension);
        CHECK(c.divides);
    }
    CHECK(sorted(dims) == std::vector<int>{1, 2, 3});

    for (auto H : {fx::kG("D4"), fx::kG("Q8"), dual_hopf(fx::kG("S3"))}) {
        Pipeline Q(H);
        auto rq = class_equation_check(Q.H, Q.I, Q.RR);
        CHECK(rq.checks.passed());
        for (const auto& c : rq.components) {
            CHECK(c.divides);
            CHECK(H.dim() % c.induced_dimension == 0);
        }
    }
}

TEST_CASE("trivial R-matrix is not factorizable") {
    auto H = with_trivial_R(fx::kG("S3"));
    auto Q = quasitriangular_verify(H);
    auto f = factorizable_check(H, Q);
    CHECK_FALSE(f.factorizable);
    CHECK(f.phi_rank == 1);
    Pipeline P(H);
    CHECK(error_of([&] { schneider_check(P.H, P.I, Q, P.W, P.RR); }) == ErrorKind::InapplicableHypothesis);
}

TEST_CASE("broken R-matrix is rejected") {
    auto H = with_trivial_R(fx::kG("S3"));
    (*H.R)[1 * 6 + 2] = q(field_of(H), 1);
    CHECK(error_of([&] { quasitriangular_verify(H); }) == ErrorKind::AxiomFailure);
}

TEST_CASE("schneider on doubles") {
    Pipeline P2(drinfeld_double(named_group("C2")));
    auto Q2 = quasitriangular_verify(P2.H);
    auto r2 = schneider_check(P2.H, P2.I, Q2, P2.W, P2.RR);
    CHECK(r2.factorizable.factorizable);
    for (const auto& c : r2.components) {
        CHECK(c.degree == 1);
        CHECK(c.divides);
    }

    Pipeline P(drinfeld_double(named_group("S3")));
    CHECK(P.W.degrees == std::vector<int>{1, 1, 2, 2, 2, 2, 3, 3});
    auto Q = quasitriangular_verify(P.H);
    auto r = schneider_check(P.H, P.I, Q, P.W, P.RR);
    CHECK_MESSAGE(r.checks.passed(), r.checks.summary());
    CHECK(r.factorizable.phi_rank == 36);
    for (const auto& c : r.components) {
        CHECK(c.induced_dimension == c.degree * c.degree);
        CHECK(c.divides);
    }

    auto kS3 = fx::kG("S3");
    auto WK = central_primitive_idempotents(kS3.A());
    auto pi = double_projection(named_group("S3"), P.H, kS3);
    auto pb = pullback_degrees(P.H, P.W, kS3, WK, pi);
    CHECK(pb.checks.passed());
    std::vector<int> degs;
    for (const auto& c : pb.components) {
        degs.push_back(c.degree);
        CHECK(c.square_divides);
    }
    CHECK(sorted(degs) == std::vector<int>{1, 1, 2});
}
