#include "casimir/theorems.hpp"

#include <algorithm>

namespace casimir {

namespace {

/// H* on the dual basis: f_i f_j = sum_k Delta(x_k)_{ij} f_k, unit epsilon.
Algebra dual_algebra(const HopfAlgebra& H) {
    const int n = H.dim();
    std::vector<std::tuple<int, int, int, Cyclotomic>> entries;
    for (int k = 0; k < n; ++k)
        for (int ij = 0; ij < n * n; ++ij)
            if (!H.coproduct[k][ij].is_zero()) entries.emplace_back(ij / n, ij % n, k, H.coproduct[k][ij]);
    return Algebra::from_triples(n, H.A().zero(), entries, H.counit);
}

bool integer_value(const Cyclotomic& c, long* out) {
    if (!c.is_rational() || c.rational_value().get_den() != 1) return false;
    if (!c.rational_value().get_num().fits_slong_p()) return false;
    *out = c.rational_value().get_num().get_si();
    return true;
}

Cyclotomic constant(const Algebra& A, long v) { return Cyclotomic(A.zero().field(), Rational(v)); }

}  // namespace

RepresentationRing representation_ring(const HopfAlgebra& H, const IntegralData& I, const WedderburnData& W) {
    require(W.all_split(), ErrorKind::InapplicableHypothesis, "representation ring needs a split-certified H");
    const Algebra& A = H.A();
    const int n = H.dim();
    const int r = static_cast<int>(W.size());
    RepresentationRing RR;
    RR.embedding = CMatrix::from_columns(W.characters, n, A.zero());

    RR.fusion.assign(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
    std::vector<std::tuple<int, int, int, Cyclotomic>> entries;
    for (int s = 0; s < r; ++s)
        for (int t = 0; t < r; ++t) {
            Element prod = convolve(H, W.characters[s], W.characters[t]);
            auto coeffs = solve(RR.embedding, prod);
            if (!coeffs)
                fail(ErrorKind::NonIntegralFusion,
                     "chi_" + std::to_string(s) + " chi_" + std::to_string(t) + " is not a combination of characters");
            for (int u = 0; u < r; ++u) {
                long m = 0;
                if (!integer_value((*coeffs)[u], &m) || m < 0)
                    fail(ErrorKind::NonIntegralFusion, "multiplicity of " + std::to_string(u) + " in " +
                                                           std::to_string(s) + " (x) " + std::to_string(t) + " is " +
                                                           (*coeffs)[u].to_string());
                RR.fusion[s][t][u] = static_cast<int>(m);
                if (m != 0) entries.emplace_back(s, t, u, constant(A, m));
            }
        }

    for (int s = 0; s < r; ++s)
        if (W.characters[s] == H.counit) RR.trivial = s;
    require(RR.trivial >= 0, ErrorKind::Internal, "counit is not among the irreducible characters");

    CMatrix St = H.antipode.transpose();
    for (int s = 0; s < r; ++s) {
        Element chi_dual = St.apply(W.characters[s]);
        int match = -1;
        for (int t = 0; t < r; ++t)
            if (W.characters[t] == chi_dual) match = t;
        require(match >= 0, ErrorKind::Internal, "chi o S is not an irreducible character for S = " + std::to_string(s));
        RR.dual.push_back(match);
    }

    Element unit = zero_vector(static_cast<std::size_t>(r), A.zero());
    unit[RR.trivial] = constant(A, 1);
    RR.algebra = std::make_shared<const Algebra>(Algebra::from_triples(r, A.zero(), entries, unit));
    for (int s = 0; s < r; ++s) RR.delta.push_back(evaluate(W.characters[s], I.Lambda0));

    Verification& v = RR.checks;
    v.merge(verify_algebra(*RR.algebra), "R_k(H): ");
    for (int s = 0; s < r; ++s) {
        v.check(RR.delta[s] == constant(A, s == RR.trivial ? 1 : 0), "delta([S]) != [S = triv] for S = " + std::to_string(s));
        for (int t = 0; t < r; ++t) {
            int triv = RR.fusion[s][t][RR.trivial];
            v.check(triv == (t == RR.dual[s] ? 1 : 0), "delta([S][T]) != [T = S*] for (" + std::to_string(s) + ", " +
                                                           std::to_string(t) + ")");
        }
    }
    Algebra Hd = dual_algebra(H);
    v.merge(verify_algebra_map(*RR.algebra, Hd, RR.embedding), "chi_k: ");
    for (int s = 0; s < r; ++s)
        v.check(evaluate(RR.embedding.column(s), I.Lambda0) == RR.delta[s], "delta != ev(Lambda0) o chi_k");

    RR.frobenius = frobenius_structure(RR.algebra, RR.delta);
    Element expected = zero_vector(static_cast<std::size_t>(r * r), A.zero());
    for (int s = 0; s < r; ++s) expected[s * r + RR.dual[s]] = constant(A, 1);
    v.check(RR.frobenius.casimir == expected, "Casimir element of (R_k(H), delta) != sum [S] (x) [S*]");
    return RR;
}

HopfDivisibility frobenius_divisibility_hopf(const HopfAlgebra& H, const WedderburnOptions& opts) {
    HopfDivisibility out;
    out.integrals = integrals(H);
    out.casimir = hopf_casimir(H, out.integrals);
    out.wedderburn = central_primitive_idempotents(H.A(), opts);
    FrobeniusStructure F = frobenius_structure(H.algebra, out.integrals.lambda);
    out.verdict = frobenius_divisibility_verdict(F, out.wedderburn);
    return out;
}

ZhuReport zhu_check(const HopfAlgebra& H, const IntegralData& I, const WedderburnData& W, const RepresentationRing& RR) {
    const Algebra& A = H.A();
    const int n = H.dim();
    Algebra Hd = dual_algebra(H);
    Element dLambda = coproduct_of(H, I.Lambda);
    ZhuReport rep;
    for (std::size_t s = 0; s < W.size(); ++s) {
        ZhuComponent c;
        c.degree = W.degrees[s];
        const Element& chi = W.characters[s];
        c.central = true;
        for (int j = 0; j < n && c.central; ++j)
            c.central = Hd.multiply(chi, Hd.basis(j)) == Hd.multiply(Hd.basis(j), chi);
        if (c.central) {
            Element lhs = contract_first(W.characters[RR.dual[s]], dLambda, n, n);
            Element rhs = scale(Cyclotomic(A.zero().field(), Rational(n) / c.degree), W.idempotents[s]);
            c.identity_holds = lhs == rhs;
            rep.checks.check(c.identity_holds, "Lambda <- chi_{S*} != (dim H/d(S)) e(S) for S = " + std::to_string(s));
            c.coefficients_in_Z_zeta =
                std::all_of(lhs.begin(), lhs.end(), [](const Cyclotomic& x) { return x.is_algebraic_integer_coordinates(); });
            c.certificate = is_integral_over_Z(A, lhs);
            c.certificate.element = "Lambda <- chi_{S*}";
            c.divides = c.certificate.integral && n % c.degree == 0;
            rep.checks.check(c.certificate.integral == (n % c.degree == 0),
                             "integrality of Lambda <- chi_{S*} disagrees with d(S) | dim H for S = " + std::to_string(s));
        }
        rep.components.push_back(std::move(c));
    }
    return rep;
}

ClassEquationReport class_equation_check(const HopfAlgebra& H, const IntegralData& I, const RepresentationRing& RR,
                                         const WedderburnOptions& opts) {
    const int n = H.dim();
    ClassEquationReport rep;
    rep.ring_wedderburn = central_primitive_idempotents(*RR.algebra, opts);
    const WedderburnData& WR = rep.ring_wedderburn;
    Algebra Hd = dual_algebra(H);
    for (std::size_t m = 0; m < WR.size(); ++m) {
        ClassEquationComponent c;
        c.degree = WR.degrees[m];
        int r = rank(Hd.right_matrix(RR.embedding.apply(WR.idempotents[m])));
        require(r % c.degree == 0, ErrorKind::Internal,
                "rank " + std::to_string(r) + " of H* chi(e(M)) is not divisible by d(M) = " + std::to_string(c.degree));
        c.induced_dimension = r / c.degree;
        c.divides = n % c.induced_dimension == 0;
        rep.checks.check(c.divides, "induced dimension " + std::to_string(c.induced_dimension) + " does not divide " +
                                        std::to_string(n));
        rep.components.push_back(c);
    }
    if (WR.all_split()) {
        auto HdPtr = std::make_shared<const Algebra>(std::move(Hd));
        FrobeniusStructure FH = frobenius_structure(HdPtr, I.Lambda0);
        RelativeDivisibility rel = relative_divisibility(RR.embedding, RR.frobenius, FH, WR);
        for (std::size_t m = 0; m < WR.size(); ++m) {
            rep.components[m].scalar = rel.components[m].scalar;
            rep.checks.check(rel.components[m].induced_dimension == rep.components[m].induced_dimension,
                             "relative divisibility disagrees on the induced dimension of M = " + std::to_string(m));
            rep.checks.check(rel.components[m].certificate.integral,
                             "dim H / dim Ind is not integral for M = " + std::to_string(m));
        }
    } else {
        rep.checks.add_failure("R_k(H) is not split over the base field; relative cross-check skipped");
    }
    return rep;
}

SchneiderReport schneider_check(const HopfAlgebra& H, const IntegralData& I, const QuasitriangularData& Q,
                                const WedderburnData& W, const RepresentationRing& RR, const WedderburnOptions& opts) {
    const Algebra& A = H.A();
    const int n = H.dim();
    SchneiderReport rep;
    rep.factorizable = factorizable_check(H, Q);
    if (!rep.factorizable.factorizable)
        fail(ErrorKind::InapplicableHypothesis,
             "H is not factorizable (rank Phi = " + std::to_string(rep.factorizable.phi_rank) + ")");
    rep.Psi = multiply(Q.Phi, RR.embedding, Exec::Automatic);
    Verification& v = rep.checks;
    const int r = RR.size();

    Verification hom = verify_algebra_map(*RR.algebra, A, rep.Psi);
    v.merge(hom, "Psi: ");
    if (!hom.passed()) fail(ErrorKind::AxiomFailure, "Psi is not an algebra map: " + hom.summary());
    for (int s = 0; s < r; ++s) {
        v.check(evaluate(I.lambda, rep.Psi.column(s)) == RR.delta[s], "lambda(Psi([S])) != delta([S]) for S = " + std::to_string(s));
        v.check(is_central(A, rep.Psi.column(s)), "Psi([S]) is not central for S = " + std::to_string(s));
    }
    const int zdim = static_cast<int>(center_basis(A).size());
    v.check(rank(rep.Psi) == zdim, "image of Psi has dimension " + std::to_string(rank(rep.Psi)) + " but Z(H) has " +
                                       std::to_string(zdim));
    v.check(Q.Phi.apply(I.lambda) == I.Lambda0, "Phi(lambda) != Lambda0");
    if (!v.passed()) fail(ErrorKind::AxiomFailure, "Schneider hypotheses fail: " + v.summary());

    rep.ring_wedderburn = central_primitive_idempotents(*RR.algebra, opts);
    const WedderburnData& WR = rep.ring_wedderburn;
    FrobeniusStructure FH = frobenius_structure(H.algebra, I.lambda);
    RelativeDivisibility rel = relative_divisibility(rep.Psi, RR.frobenius, FH, WR);
    for (std::size_t m = 0; m < WR.size(); ++m) {
        SchneiderComponent c;
        Element image = rep.Psi.apply(WR.idempotents[m]);
        for (std::size_t s = 0; s < W.size(); ++s)
            if (W.idempotents[s] == image) c.block = static_cast<int>(s);
        v.check(c.block >= 0, "Psi(e(S')) is not a central primitive idempotent of H for S' = " + std::to_string(m));
        int rk = rank(A.left_matrix(image));
        c.induced_dimension = rk / WR.degrees[m];
        v.check(rk % WR.degrees[m] == 0, "rank of H Psi(e(S')) not divisible by d(S')");
        if (c.block >= 0) {
            c.degree = W.degrees[c.block];
            v.check(c.induced_dimension == c.degree * c.degree, "dim Ind != d(S)^2 for S' = " + std::to_string(m));
        }
        v.check(rel.components[m].induced_dimension == c.induced_dimension,
                "relative divisibility disagrees on S' = " + std::to_string(m));
        c.divides = rel.components[m].certificate.integral && c.degree > 0 && n % (c.degree * c.degree) == 0;
        v.check(rel.components[m].certificate.integral == (c.degree > 0 && n % (c.degree * c.degree) == 0),
                "integrality certificate disagrees with d(S)^2 | dim H for S' = " + std::to_string(m));
        rep.components.push_back(c);
    }
    std::stable_sort(rep.components.begin(), rep.components.end(),
                     [](const SchneiderComponent& a, const SchneiderComponent& b) { return a.block < b.block; });
    return rep;
}

PullbackReport pullback_degrees(const HopfAlgebra& D, const WedderburnData& WD, const HopfAlgebra& K,
                                const WedderburnData& WK, const CMatrix& pi) {
    PullbackReport rep;
    rep.checks.merge(verify_algebra_map(D.A(), K.A(), pi), "projection: ");
    rep.checks.check(rank(pi) == K.dim(), "projection is not surjective");
    for (int j = 0; j < D.dim(); ++j) {
        Element img = pi.column(j);
        rep.checks.check(apply_tensor(pi, pi, D.coproduct[j]) == coproduct_of(K, img),
                         "projection does not preserve the coproduct on x" + std::to_string(j));
        rep.checks.check(evaluate(K.counit, img) == D.counit[j], "projection does not preserve the counit");
    }
    CMatrix pit = pi.transpose();
    const int n = D.dim();
    for (std::size_t s = 0; s < WK.size(); ++s) {
        PullbackComponent c;
        c.degree = WK.degrees[s];
        Element pulled = pit.apply(WK.characters[s]);
        for (std::size_t t = 0; t < WD.size(); ++t)
            if (WD.characters[t] == pulled) c.block = static_cast<int>(t);
        rep.checks.check(c.block >= 0, "pulled-back character is not irreducible for S = " + std::to_string(s));
        if (c.block >= 0) rep.checks.check(WD.degrees[c.block] == c.degree, "pulled-back degree mismatch");
        c.square_divides = c.block >= 0 && n % (c.degree * c.degree) == 0;
        rep.components.push_back(c);
    }
    return rep;
}

HopfAlgebra extend_conductor(const HopfAlgebra& H, int conductor) {
    const CyclotomicField& from = H.A().zero().field();
    require(conductor % from.conductor() == 0, ErrorKind::ConductorMismatch,
            "conductor " + std::to_string(conductor) + " is not a multiple of " + std::to_string(from.conductor()));
    const CyclotomicField& to = CyclotomicField::get(conductor);
    auto map = [&](const Cyclotomic& c) { return embed(c, to); };
    auto map_vec = [&](const Element& v) {
        Element out;
        for (const auto& c : v) out.push_back(map(c));
        return out;
    };
    HopfAlgebra out;
    out.algebra = std::make_shared<const Algebra>(H.A().map_scalars(Cyclotomic(to), map));
    for (const auto& d : H.coproduct) out.coproduct.push_back(map_vec(d));
    out.counit = map_vec(H.counit);
    out.antipode = CMatrix(H.antipode.rows(), H.antipode.cols(), Cyclotomic(to));
    for (int i = 0; i < H.antipode.rows(); ++i)
        for (int j = 0; j < H.antipode.cols(); ++j) out.antipode(i, j) = map(H.antipode(i, j));
    if (H.R) out.R = map_vec(*H.R);
    return out;
}

}  // namespace casimir
