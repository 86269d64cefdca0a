#include <doctest.h>

#include <random>

#include "casimir/roots.hpp"
#include "fixtures.hpp"

using namespace casimir;

namespace {
std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}
}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
    CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(7) == 6);
}

TEST_CASE("zeta arithmetic") {
    const auto& K4 = CyclotomicField::get(4);
    auto i = Cyclotomic::zeta(K4);
    CHECK(i * i == Cyclotomic(K4, Rational(-1)));

    const auto& K3 = CyclotomicField::get(3);
    auto w = Cyclotomic::zeta(K3);
    CHECK(w.inverse() == Cyclotomic(K3, {Rational(-1), Rational(-1)}));
    CHECK(w * w * w == Cyclotomic(K3, Rational(1)));
    CHECK(Cyclotomic::zeta(K3, 2) == w * w);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(7);
    for (int n : {1, 3, 4, 8, 12}) {
        const auto& K = CyclotomicField::get(n);
        for (int t = 0; t < 20; ++t) {
            auto a = random_scalar(K, rng), b = random_scalar(K, rng), c = random_scalar(K, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(K, Rational(1)));
        }
    }
}

TEST_CASE("division by zero") {
    const auto& K = CyclotomicField::get(5);
    try {
        Cyclotomic(K).inverse();
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("conductor mismatch") {
    auto a = Cyclotomic::zeta(CyclotomicField::get(3));
    auto b = Cyclotomic::zeta(CyclotomicField::get(4));
    try {
        (void)(a + b);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ConductorMismatch);
    }
}

TEST_CASE("string round trip") {
    std::mt19937_64 rng(11);
    for (int n : {1, 5, 12}) {
        const auto& K = CyclotomicField::get(n);
        for (int t = 0; t < 20; ++t) {
            auto a = random_scalar(K, rng, 7) * Rational(1, 3);
            CHECK(Cyclotomic::parse(a.to_string(), K) == a);
        }
    }
    const auto& K4 = CyclotomicField::get(4);
    CHECK(Cyclotomic::parse("z^2", K4) == Cyclotomic(K4, Rational(-1)));
    CHECK(Cyclotomic::parse("1/2 - 3*z", K4).to_string() == "1/2 - 3*z");
    CHECK(Cyclotomic(K4).to_string() == "0");
}

TEST_CASE("galois action and embedding") {
    const auto& K3 = CyclotomicField::get(3);
    auto w = Cyclotomic::zeta(K3);
    CHECK(w.galois(2) == w * w);
    const auto& K6 = CyclotomicField::get(6);
    auto e = embed(w, K6);
    CHECK(e == Cyclotomic::zeta(K6, 2));
    CHECK(embed(w * w + w, K6) == e * e + e);
}

TEST_CASE("rational reconstruction") {
    CHECK(rational_reconstruct(Integer(25), Integer(49)) == Rational(1, 2));
    CHECK(rational_reconstruct(Integer(0), Integer(1000003)) == Rational(0));
    Integer M = Integer(1000003) * 1000033;
    Rational x = Rational(-17) / 391;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), Integer(391).get_mpz_t(), M.get_mpz_t());
    Integer r = ((Integer(-17) * inv) % M + M) % M;
    CHECK(rational_reconstruct(r, M) == x);
    CHECK_FALSE(rational_reconstruct(Integer(3), Integer(7)).has_value());
}

TEST_CASE("residue field arithmetic") {
    const auto& K4 = CyclotomicField::get(4);
    const auto& F49 = ResidueRing::get(7, 1, K4);
    CHECK(F49.residue_field_size() == 49);
    Residue i = Residue::reduce(Cyclotomic::zeta(K4), F49);
    CHECK(i * i == Residue(F49, -1));
    Residue a(F49, {Integer(3), Integer(5)});
    CHECK(a * a.inverse() == Residue(F49, 1));
    CHECK(Residue::reduce(Cyclotomic(K4, Rational(1, 2)), F49) == Residue(F49, 4));
    try {
        F49.reduce(Rational(1, 7));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadPrime);
    }
}

TEST_CASE("roots over finite fields and exact roots") {
    const auto& K4 = CyclotomicField::get(4);
    const auto& F = ResidueRing::get(7, 1, K4);
    std::mt19937_64 rng(3);
    // x^2 + 1 splits in F_49
    Polynomial<Residue> f(Residue(F), {Residue(F, 1), Residue(F), Residue(F, 1)});
    CHECK(residue_field_roots(f, rng).size() == 2);

    Polynomial<Cyclotomic> g(Cyclotomic(K4), {Cyclotomic(K4, Rational(1)), Cyclotomic(K4), Cyclotomic(K4, Rational(1))});
    auto roots = exact_roots(g);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) CHECK(g.evaluate(r).is_zero());

    const auto& Q = CyclotomicField::rationals();
    Polynomial<Cyclotomic> h(Cyclotomic(Q), {Cyclotomic(Q, Rational(-2)), Cyclotomic(Q), Cyclotomic(Q, Rational(1))});
    CHECK(exact_roots(h).empty());
    Polynomial<Cyclotomic> s(Cyclotomic(Q), {Cyclotomic(Q, Rational(-1, 4)), Cyclotomic(Q), Cyclotomic(Q, Rational(1))});
    CHECK(exact_roots(s).size() == 2);
}

TEST_CASE("newton lifting") {
    const auto& Q = CyclotomicField::rationals();
    // x^2 - 2 has root 3 mod 7
    Polynomial<Cyclotomic> f(Cyclotomic(Q), {Cyclotomic(Q, Rational(-2)), Cyclotomic(Q), Cyclotomic(Q, Rational(1))});
    const auto& R1 = ResidueRing::get(7, 1, Q);
    const auto& R2 = ResidueRing::get(7, 2, Q);
    Residue r = newton_lift_root(f, Residue(R1, 3), R2);
    CHECK(r * r == Residue(R2, 2));
}

TEST_CASE("inert primes") {
    long p = next_inert_prime(10, 4);
    CHECK(p % 4 == 3);
    CHECK(p > 10);
}
