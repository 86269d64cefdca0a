#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "fixtures.hpp"

using namespace casimir;
using fx::q;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string degrees_string(const std::vector<int>& d) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << "}";
    return os.str();
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

const CyclotomicField& field_of(const Algebra& A) { return A.zero().field(); }

struct Named {
    std::string name;
    FrobeniusStructure F;
};

/// Test algebras with their forms: group algebras with the Hopf form, matrix
/// algebras with the trace, a commutative dual, doubles and a custom form.
std::vector<Named> test_algebras() {
    std::vector<Named> out;
    for (const char* g : {"C2", "C6", "S3", "D4", "Q8", "A4"}) {
        auto H = fx::kG(g);
        out.push_back({std::string("k") + g, frobenius_structure(H.algebra, delta_one_form(H.A()))});
    }
    auto QS3 = fx::kG("S3", 1);
    out.push_back({"QS3", frobenius_structure(QS3.algebra, delta_one_form(QS3.A()))});
    for (int n : {2, 3}) out.push_back({"M" + std::to_string(n), frobenius_structure(fx::matrix_algebra(n), fx::matrix_trace(n))});
    auto dual = dual_hopf(fx::kG("S3"));
    out.push_back({"(kS3)*", frobenius_structure(dual.algebra, integrals(dual).lambda)});
    for (const char* g : {"C2", "S3"}) {
        auto D = drinfeld_double(named_group(g));
        out.push_back({std::string("D(") + g + ")", frobenius_structure(D.algebra, integrals(D).lambda)});
    }
    auto kC2 = fx::kG("C2", 1);
    out.push_back({"kC2 custom", frobenius_structure(kC2.algebra, fx::vec(fx::Q(), {3, 1}))});
    return out;
}

std::vector<std::pair<std::string, HopfAlgebra>> hopf_instances() {
    return {{"kC2", fx::kG("C2")},
            {"kS3", fx::kG("S3")},
            {"kQ8", fx::kG("Q8")},
            {"kA4", fx::kG("A4")},
            {"(kS3)*", dual_hopf(fx::kG("S3"))},
            {"D(C2)", drinfeld_double(named_group("C2"))},
            {"D(S3)", drinfeld_double(named_group("S3"))}};
}

Outcome frobenius_theorem() {
    Outcome o;
    const std::map<std::string, std::vector<int>> expected{{"C2", {1, 1}},          {"C6", std::vector<int>(6, 1)},
                                                           {"S3", {1, 1, 2}},       {"D4", {1, 1, 1, 1, 2}},
                                                           {"Q8", {1, 1, 1, 1, 2}}, {"A4", {1, 1, 1, 3}}};
    std::string worst;
    double slowest = 0;
    for (const auto& [g, want] : expected) {
        auto t0 = std::chrono::steady_clock::now();
        auto H = fx::kG(g);
        auto r = frobenius_divisibility_hopf(H);
        const auto& v = r.verdict;
        o.require(r.wedderburn.degrees == want, g + ": degrees " + degrees_string(r.wedderburn.degrees));
        o.require(v.casimir.integral, g + ": c_lambda not certified integral");
        o.require(std::all_of(v.divides.begin(), v.divides.end(), [](bool b) { return b; }), g + ": a degree fails to divide");
        o.require(v.holds, g + ": verdict negative");
        o.require(v.gamma == H.dim(), g + ": Gamma(1) != |G|");
        auto primes = good_primes(H.A(), 3);
        for (std::size_t i = 1; i < primes.size(); ++i) {
            WedderburnOptions w;
            w.prime = primes[i];
            o.require(central_primitive_idempotents(H.A(), w).same_decomposition(r.wedderburn),
                      g + ": decomposition differs at p = " + std::to_string(primes[i]));
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > slowest) {
            slowest = s;
            worst = g;
        }
        o.require(s < 10.0, g + ": " + std::to_string(s) + " s exceeds 10 s");
    }
    if (o.pass) o.detail = "6 groups, slowest " + worst + " " + std::to_string(slowest).substr(0, 5) + " s";
    return o;
}

Outcome casimir_identities(const std::vector<Named>& algebras) {
    Outcome o;
    std::mt19937_64 rng(2024);
    for (const auto& [name, F] : algebras) {
        auto c = check_casimir_identities(F);
        o.require(c.passed(), name + ": " + c.summary());
        auto t = check_trace_identities(F, rng, 50, 20);
        o.require(t.passed(), name + ": " + t.summary());
    }
    if (o.pass) o.detail = std::to_string(algebras.size()) + " algebras, 50 endomorphisms each";
    return o;
}

Outcome idempotent_formula(const std::vector<Named>& algebras) {
    Outcome o;
    for (const auto& [name, F] : algebras) {
        auto W = central_primitive_idempotents(F);
        auto v = verify_cprid_formula(F, W);
        o.require(v.passed(), name + ": " + v.summary());
    }
    auto QS3 = fx::kG("S3", 1);
    auto W = central_primitive_idempotents(QS3.A());
    auto make = [&](Rational s, std::initializer_list<long> c) {
        Element e;
        for (long x : c) e.push_back(Cyclotomic(fx::Q(), s * x));
        return e;
    };
    for (const auto& e : {make(Rational(1, 6), {1, 1, 1, 1, 1, 1}), make(Rational(1, 6), {1, -1, -1, -1, 1, 1}),
                          make(Rational(1, 3), {2, 0, 0, 0, -1, -1})})
        o.require(std::find(W.idempotents.begin(), W.idempotents.end(), e) != W.idempotents.end(),
                  "QS3 idempotent " + describe_element(e) + " missing");
    if (o.pass) o.detail = std::to_string(algebras.size()) + " algebras; QS3 idempotents reproduced";
    return o;
}

Outcome casimir_square() {
    Outcome o;
    auto kS3 = fx::kG("S3");
    auto I = integrals(kS3);
    auto F = frobenius_structure(kS3.algebra, I.lambda);
    auto T = casimir_square_components(F, central_primitive_idempotents(F));
    o.require(T.checks.passed(), T.checks.summary());
    const auto& K = field_of(kS3.A());
    std::vector<Cyclotomic> want{q(K, 36), q(K, 36), q(K, 9)};
    for (int s = 0; s < 3; ++s) {
        o.require(T.casimir_square[s][s] == want[static_cast<std::size_t>(s)],
                  "diagonal " + std::to_string(s) + " = " + T.casimir_square[s][s].to_string());
        for (int t = 0; t < 3; ++t)
            if (s != t) o.require(T.casimir[s][t].is_zero(), "off-diagonal component nonzero");
    }
    if (o.pass) o.detail = "kS3 diagonal {36,36,9}, off-diagonal 0, c^2 = (Gamma x Id)(c)";
    return o;
}

Outcome hopf_layer() {
    Outcome o;
    for (const char* g : {"C2", "S3", "Q8", "A4"}) {
        auto H = fx::kG(g);
        auto I = integrals(H);
        const auto& K = field_of(H.A());
        o.require(std::all_of(I.Lambda.begin(), I.Lambda.end(), [&](const Cyclotomic& c) { return c == q(K, 1); }),
                  std::string(g) + ": Lambda != sum of g");
        o.require(I.lambda == delta_one_form(H.A()), std::string(g) + ": lambda != delta_1");
    }
    for (const auto& [name, H] : hopf_instances()) {
        auto I = integrals(H);
        auto vi = verify_integrals(H, I);
        o.require(vi.passed(), name + ": " + vi.summary());
        auto C = hopf_casimir(H, I);  // throws on a four-way mismatch
        o.require(scalar_value(H.A(), C.gamma_one) == q(field_of(H.A()), H.dim()), name + ": Gamma(1) != dim H");
        o.require(C.dual_gamma_counit == H.counit, name + ": dual Gamma(eps) != eps");
        o.require(C.casimir == frobenius_structure(H.algebra, I.lambda).casimir, name + ": dual-basis Casimir differs");
    }
    if (o.pass) o.detail = std::to_string(hopf_instances().size()) + " Hopf instances";
    return o;
}

struct Pipeline {
    HopfAlgebra H;
    IntegralData I;
    WedderburnData W;
    RepresentationRing RR;
    explicit Pipeline(HopfAlgebra h)
        : H(std::move(h)), I(integrals(H)), W(central_primitive_idempotents(H.A())), RR(representation_ring(H, I, W)) {}
};

Outcome class_equation() {
    Outcome o;
    std::string detail;
    for (auto [name, H] : std::vector<std::pair<std::string, HopfAlgebra>>{
             {"kS3", fx::kG("S3")}, {"kD4", fx::kG("D4")}, {"kQ8", fx::kG("Q8")}, {"(kS3)*", dual_hopf(fx::kG("S3"))}}) {
        auto t0 = std::chrono::steady_clock::now();
        Pipeline P(H);
        auto r = class_equation_check(P.H, P.I, P.RR);
        o.require(r.checks.passed(), name + ": " + r.checks.summary());
        std::vector<int> dims;
        for (const auto& c : r.components) {
            dims.push_back(c.induced_dimension);
            o.require(c.divides && H.dim() % c.induced_dimension == 0, name + ": induced dimension does not divide");
        }
        if (name == "kS3") o.require(sorted(dims) == std::vector<int>{1, 2, 3}, "kS3 induced " + degrees_string(dims));
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.require(s < 30.0, name + " took " + std::to_string(s) + " s");
        detail += (detail.empty() ? "" : ", ") + name + " " + degrees_string(sorted(dims));
    }
    if (o.pass) o.detail = detail;
    return o;
}

Outcome zhu() {
    Outcome o;
    for (const char* g : {"C6", "S3", "D4", "Q8", "A4"}) {
        Pipeline P(fx::kG(g));
        auto z = zhu_check(P.H, P.I, P.W, P.RR);
        o.require(z.checks.passed(), std::string(g) + ": " + z.checks.summary());
        for (const auto& c : z.components) {
            o.require(c.central, std::string(g) + ": character not central");
            o.require(c.identity_holds, std::string(g) + ": Lambda <- chi != (|G|/d) e");
            o.require(c.coefficients_in_Z_zeta && c.certificate.integral, std::string(g) + ": not integral");
            o.require(c.divides, std::string(g) + ": degree does not divide");
        }
    }
    if (o.pass) o.detail = "kC6, kS3, kD4, kQ8, kA4: all characters central, identity exact";
    return o;
}

Outcome schneider() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    Pipeline P(drinfeld_double(named_group("S3")));
    auto Q = quasitriangular_verify(P.H);
    auto r = schneider_check(P.H, P.I, Q, P.W, P.RR);
    o.require(r.factorizable.factorizable && r.factorizable.phi_rank == 36, "D(S3) not factorizable");
    o.require(r.checks.passed(), r.checks.summary());
    o.require(P.W.degrees == std::vector<int>{1, 1, 2, 2, 2, 2, 3, 3}, "D(S3) degrees " + degrees_string(P.W.degrees));
    int sum = 0;
    for (int d : P.W.degrees) sum += d * d;
    o.require(sum == 36, "sum of squares " + std::to_string(sum));
    for (const auto& c : r.components) {
        o.require(c.divides && 36 % (c.degree * c.degree) == 0, "square does not divide 36");
        o.require(c.induced_dimension == c.degree * c.degree, "induced dimension != d^2");
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(s < 300.0, "D(S3) took " + std::to_string(s) + " s");

    auto T = with_trivial_R(fx::kG("S3"));
    auto QT = quasitriangular_verify(T);
    auto f = factorizable_check(T, QT);
    o.require(!f.factorizable && f.phi_rank == 1, "(kS3, 1 x 1) reported factorizable");
    if (o.pass)
        o.detail = "D(S3) rank 36, degrees {1,1,2,2,2,2,3,3}, " + std::to_string(s).substr(0, 5) +
                   " s; (kS3, 1 x 1) rank 1";
    return o;
}

template <class F>
std::optional<Error> caught(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e;
    }
    return std::nullopt;
}

Outcome negative_controls() {
    Outcome o;
    auto kC2 = fx::kG("C2", 1);
    Element deg = fx::vec(fx::Q(), {1, 1});
    auto e = caught([&] { frobenius_structure(kC2.algebra, deg); });
    o.require(e && e->kind() == ErrorKind::Degenerate, "degenerate form accepted");
    auto w = degeneracy_witness(kC2.A(), deg);
    o.require(w && !is_zero_vector(*w), "no ideal witness");
    if (w)
        for (int i = 0; i < 2; ++i)
            o.require(evaluate(deg, kC2.A().multiply(kC2.A().basis(i), *w)).is_zero(), "witness ideal not in ker lambda");

    auto kS3 = fx::kG("S3");
    auto bad = fx::perturbed(kS3.A(), 1, 2, 0, q(field_of(kS3.A()), 1));
    o.require(!verify_algebra(*bad).passed(), "perturbed structure constants accepted");
    auto badH = kS3;
    badH.algebra = bad;
    o.require(!verify_hopf(badH).passed(), "perturbed Hopf algebra accepted");

    auto M2 = fx::matrix_algebra(2);
    Element lam = fx::matrix_trace(2);
    lam[1] = q(fx::Q(), 1);
    auto nt = caught([&] { frobenius_structure(M2, lam); });
    o.require(nt && nt->kind() == ErrorKind::NotATraceForm, "non-trace form accepted");
    o.require(!check_casimir_identities(frobenius_structure_unchecked(M2, lam)).passed(), "switch invariance survived");

    auto F3 = frobenius_structure(kC2.algebra, fx::vec(fx::Q(), {3, 0}));
    o.require(scalar_value(kC2.A(), casimir_trace(F3, kC2.A().unit())) == q(fx::Q(), 2, 3), "rescaled Gamma(1) != 2/3");
    auto W = central_primitive_idempotents(F3);
    auto ih = caught([&] { frobenius_divisibility_verdict(F3, W); });
    o.require(ih && ih->kind() == ErrorKind::InapplicableHypothesis, "rescaled form did not raise InapplicableHypothesis");
    if (o.pass) o.detail = "Degenerate, AxiomFailure witnesses, NotATraceForm, InapplicableHypothesis at Gamma = 2/3";
    return o;
}

Outcome determinism() {
    Outcome o;
    std::vector<std::pair<std::string, Json>> fixtures;
    for (const char* g : {"C2", "C6", "S3", "D4", "Q8", "A4", "dual(S3)", "D(C2)", "D(S3)"})
        fixtures.emplace_back(g, *group_shorthand(g));
    fixtures.emplace_back("M2", algebra_json(*fx::matrix_algebra(2), fx::matrix_trace(2)));
    fixtures.emplace_back("kC2 custom", algebra_json(fx::kG("C2", 1).A(), fx::vec(fx::Q(), {3, 1})));
    for (const auto& [name, j] : fixtures) {
        auto in = parse_input(j);
        auto primes = good_primes(*in.algebra, 3);
        o.require(primes.size() == 3, name + ": fewer than three good primes");
        std::optional<WedderburnData> first;
        std::optional<Json> report;
        std::optional<int> code;
        for (long p : primes) {
            WedderburnOptions w;
            w.prime = p;
            auto W = central_primitive_idempotents(*in.algebra, w);
            o.require(W.prime_used == p, name + ": prime not honoured");
            if (!first) first = W;
            else o.require(W.same_decomposition(*first), name + ": decomposition differs at p = " + std::to_string(p));
            AnalyzeOptions a;
            a.prime = p;
            auto r = analyze(j, a);
            if (!code) code = r.exit_code;
            o.require(r.exit_code == *code, name + ": exit status differs at p = " + std::to_string(p));
            o.require(r.exit_code <= 1, name + ": analyze exit " + std::to_string(r.exit_code) + " at p = " + std::to_string(p));
            auto stripped = without_provenance(r.report);
            if (!report) report = stripped;
            else o.require(stripped == *report, name + ": report differs at p = " + std::to_string(p));
        }
    }
    if (o.pass) o.detail = std::to_string(fixtures.size()) + " fixtures x 3 primes";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    auto algebras = test_algebras();
    std::vector<std::pair<int, std::function<Outcome()>>> criteria{
        {1, frobenius_theorem},
        {2, [&] { return casimir_identities(algebras); }},
        {3, [&] { return idempotent_formula(algebras); }},
        {4, casimir_square},
        {5, hopf_layer},
        {6, class_equation},
        {7, zhu},
        {8, schneider},
        {9, negative_controls},
        {10, determinism},
    };
    for (auto& [n, run] : criteria) {
        if (only && n != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << "  [" << ms << " ms]"
                  << std::endl;
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
