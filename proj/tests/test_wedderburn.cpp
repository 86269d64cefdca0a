#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace casimir;
using fx::q;

namespace {
const CyclotomicField& QQ() { return fx::Q(); }

std::vector<long> residues(const ModElement& e) {
    std::vector<long> out;
    for (const auto& r : e) out.push_back(r.coeffs().empty() ? 0 : r.coeffs()[0].get_si());
    return out;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

ModularAlgebra reduce_to(const Algebra& A, const ResidueRing& R) {
    return A.map_scalars(Residue(R), [&](const Cyclotomic& c) { return Residue::reduce(c, R); });
}

ModElement mod_vector(const ResidueRing& R, std::initializer_list<long> xs) {
    ModElement v;
    for (long x : xs) v.emplace_back(R, x);
    return v;
}

Element s3_element(const CyclotomicField& K, Rational scale_by, std::initializer_list<long> coeffs) {
    Element v;
    for (long c : coeffs) v.push_back(Cyclotomic(K, scale_by * c));
    return v;
}
}  // namespace

TEST_CASE("modular split of kC2 mod 7") {
    auto kC2 = fx::kG("C2", 1);
    auto Z = center_data(kC2.A());
    auto ms = modular_split(kC2.A(), Z, 7);
    CHECK(ms.prime == 7);
    REQUIRE(ms.idempotents.size() == 2);
    std::vector<std::vector<long>> got{residues(ms.idempotents[0]), residues(ms.idempotents[1])};
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::vector<long>>{{4, 3}, {4, 4}});
    CHECK(ms.degrees == std::vector<int>{1, 1});
}

TEST_CASE("modular split degrees") {
    auto kS3 = fx::kG("S3", 1);
    CHECK(sorted(modular_split(kS3.A(), center_data(kS3.A()), 7).degrees) == std::vector<int>{1, 1, 2});
    auto M2 = fx::matrix_algebra(2);
    CHECK(modular_split(*M2, center_data(*M2), 5).degrees == std::vector<int>{2});
}

TEST_CASE("hensel lifting of idempotents") {
    auto kC2 = fx::kG("C2", 1);
    const auto& R1 = ResidueRing::get(7, 1, QQ());
    const auto& R2 = ResidueRing::get(7, 2, QQ());
    auto target = reduce_to(kC2.A(), R2);
    CHECK(residues(hensel_lift_idempotent(target, mod_vector(R1, {4, 4}))) == std::vector<long>{25, 25});
    CHECK(residues(hensel_lift_idempotent(target, mod_vector(R1, {0, 0}))) == std::vector<long>{0, 0});
    CHECK(residues(hensel_lift_idempotent(target, mod_vector(R1, {1, 0}))) == std::vector<long>{1, 0});
}

TEST_CASE("good prime policy") {
    auto kS3 = fx::kG("S3", 3);
    auto Z = center_data(kS3.A());
    std::string why;
    CHECK_FALSE(is_good_prime(kS3.A(), Z, 3, &why));
    CHECK_FALSE(why.empty());
    CHECK_FALSE(is_good_prime(kS3.A(), Z, 7, nullptr));  // splits in Q(zeta_3)
    CHECK(is_good_prime(kS3.A(), Z, 5, nullptr));
    auto ps = good_primes(kS3.A(), 3);
    REQUIRE(ps.size() == 3);
    for (long p : ps) {
        CHECK(p > 12);
        CHECK(p % 3 == 2);
    }
}

TEST_CASE("rational S3 idempotents") {
    auto kS3 = fx::kG("S3", 1);
    auto W = central_primitive_idempotents(kS3.A());
    CHECK(W.degrees == std::vector<int>{1, 1, 2});
    CHECK(W.all_split());
    auto v = verify_wedderburn(kS3.A(), W);
    CHECK_MESSAGE(v.passed(), v.summary());
    auto has = [&](const Element& e) { return std::find(W.idempotents.begin(), W.idempotents.end(), e) != W.idempotents.end(); };
    CHECK(has(s3_element(QQ(), Rational(1, 6), {1, 1, 1, 1, 1, 1})));
    CHECK(has(s3_element(QQ(), Rational(1, 6), {1, -1, -1, -1, 1, 1})));
    CHECK(has(s3_element(QQ(), Rational(1, 3), {2, 0, 0, 0, -1, -1})));
}

TEST_CASE("characters of S3") {
    auto kS3 = fx::kG("S3", 3);
    const auto& K = kS3.A().zero().field();
    auto W = central_primitive_idempotents(kS3.A());
    REQUIRE(W.size() == 3);
    CHECK(W.characters[2] == s3_element(K, Rational(1), {2, 0, 0, 0, -1, -1}));
    Element sum = kS3.A().zero_element();
    for (std::size_t s = 0; s < W.size(); ++s) sum = sum + scale(q(K, W.degrees[s]), W.characters[s]);
    CHECK(sum == regular_character(kS3.A()));
    auto chis = irreducible_characters(kS3.A(), W);
    CHECK(chis == W.characters);
}

TEST_CASE("ground field and matrix algebra") {
    auto k = fx::ground();
    auto W = central_primitive_idempotents(*k);
    CHECK(W.degrees == std::vector<int>{1});
    CHECK(W.idempotents[0] == fx::vec(QQ(), {1}));
    auto M3 = fx::matrix_algebra(3);
    auto W3 = central_primitive_idempotents(*M3);
    CHECK(W3.degrees == std::vector<int>{3});
    CHECK(W3.all_split());
}

TEST_CASE("quaternion group over Q(i)") {
    auto kQ8 = fx::kG("Q8");
    CHECK(kQ8.A().zero().conductor() == 4);
    auto W = central_primitive_idempotents(kQ8.A());
    CHECK(W.degrees == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(W.all_split());
    CHECK(verify_wedderburn(kQ8.A(), W).passed());
}

TEST_CASE("cprid formula and the form on idempotents") {
    for (const char* g : {"C2", "S3", "D4"}) {
        auto H = fx::kG(g);
        auto F = frobenius_structure(H.algebra, delta_one_form(H.A()));
        auto W = central_primitive_idempotents(F);
        auto v = verify_cprid_formula(F, W);
        CHECK_MESSAGE(v.passed(), v.summary());
        const auto& K = H.A().zero().field();
        for (std::size_t s = 0; s < W.size(); ++s) {
            auto gamma = gamma_component(F, W, s);
            CHECK(gamma == q(K, H.dim()));
            CHECK(evaluate(F.lambda, W.idempotents[s]) == q(K, W.degrees[s] * W.degrees[s]) / gamma);
        }
    }
}

TEST_CASE("casimir square components") {
    auto kC2 = fx::kG("C2", 1);
    auto F2 = frobenius_structure(kC2.algebra, delta_one_form(kC2.A()));
    auto T2 = casimir_square_components(F2, central_primitive_idempotents(F2));
    CHECK(T2.checks.passed());
    CHECK(T2.casimir_square[0][0] == q(QQ(), 4));
    CHECK(T2.casimir_square[1][1] == q(QQ(), 4));
    CHECK(T2.casimir[0][1].is_zero());

    auto kS3 = fx::kG("S3", 3);
    const auto& K = kS3.A().zero().field();
    auto F = frobenius_structure(kS3.algebra, delta_one_form(kS3.A()));
    auto T = casimir_square_components(F, central_primitive_idempotents(F));
    CHECK_MESSAGE(T.checks.passed(), T.checks.summary());
    CHECK(T.casimir_square[0][0] == q(K, 36));
    CHECK(T.casimir_square[1][1] == q(K, 36));
    CHECK(T.casimir_square[2][2] == q(K, 9));
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t)
            if (s != t) CHECK(T.casimir[s][t].is_zero());
}

TEST_CASE("three primes give the same decomposition") {
    for (const char* g : {"S3", "D4", "A4"}) {
        auto H = fx::kG(g);
        auto ps = good_primes(H.A(), 3);
        REQUIRE(ps.size() == 3);
        std::vector<WedderburnData> ws;
        for (long p : ps) {
            WedderburnOptions o;
            o.prime = p;
            ws.push_back(central_primitive_idempotents(H.A(), o));
            CHECK(ws.back().prime_used == p);
        }
        CHECK(ws[0].same_decomposition(ws[1]));
        CHECK(ws[0].same_decomposition(ws[2]));
    }
}

TEST_CASE("non-semisimple input") {
    // k[x]/x^2
    std::vector<std::tuple<int, int, int, Cyclotomic>> t{
        {0, 0, 0, q(QQ(), 1)}, {0, 1, 1, q(QQ(), 1)}, {1, 0, 1, q(QQ(), 1)}};
    Algebra A = Algebra::from_triples(2, Cyclotomic(QQ()), t, fx::vec(QQ(), {1, 0}));
    try {
        certify_semisimple(A);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSemisimple);
    }
}

TEST_CASE("bad explicit prime") {
    auto kS3 = fx::kG("S3", 3);
    WedderburnOptions o;
    o.prime = 3;
    try {
        central_primitive_idempotents(kS3.A(), o);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadPrime);
    }
}

TEST_CASE("quaternion group over Q is not split") {
    // the degree-2 block is the rational quaternions
    auto kQ8 = fx::kG("Q8", 1);
    auto W = central_primitive_idempotents(kQ8.A());
    CHECK(W.degrees == std::vector<int>{1, 1, 1, 1, 2});
    CHECK_FALSE(W.all_split());
    CHECK(W.split_certified == std::vector<bool>{true, true, true, true, false});
}
