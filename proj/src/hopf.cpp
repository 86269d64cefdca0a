#include "casimir/hopf.hpp"

#include <cstdint>
#include <map>

namespace casimir {

namespace {

using Sparse = std::map<std::int64_t, Cyclotomic>;
using Terms = std::vector<std::pair<int, Cyclotomic>>;

void accumulate(Sparse& s, std::int64_t idx, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = s.find(idx);
    if (it == s.end()) {
        s.emplace(idx, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
}

Sparse to_sparse(const Element& u) {
    Sparse s;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero()) s.emplace(static_cast<std::int64_t>(i), u[i]);
    return s;
}

Element to_dense(const Sparse& s, std::size_t len, const Cyclotomic& zero) {
    Element out(len, zero);
    for (const auto& [i, c] : s) out[static_cast<std::size_t>(i)] = c;
    return out;
}

Terms nonzeros(const Element& u) {
    Terms t;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero()) t.emplace_back(static_cast<int>(i), u[i]);
    return t;
}

/// Product in the arity-fold tensor power of A.
Sparse sparse_multiply(const Algebra& A, int arity, const Sparse& s, const Sparse& t) {
    const std::int64_t n = A.dim();
    Sparse out;
    std::vector<int> da(static_cast<std::size_t>(arity)), db(static_cast<std::size_t>(arity));
    for (const auto& [a, ca] : s)
        for (const auto& [b, cb] : t) {
            std::int64_t ra = a, rb = b;
            for (int f = arity - 1; f >= 0; --f) {
                da[f] = static_cast<int>(ra % n);
                db[f] = static_cast<int>(rb % n);
                ra /= n;
                rb /= n;
            }
            std::vector<std::pair<std::int64_t, Cyclotomic>> partial{{0, ca * cb}};
            for (int f = 0; f < arity && !partial.empty(); ++f) {
                std::vector<std::pair<std::int64_t, Cyclotomic>> next;
                for (const auto& [idx, c] : partial)
                    for (const auto& [k, m] : A.product(da[f], db[f])) next.emplace_back(idx * n + k, c * m);
                partial = std::move(next);
            }
            for (const auto& [idx, c] : partial) accumulate(out, idx, c);
        }
    return out;
}

std::vector<Terms> coproduct_terms(const HopfAlgebra& H) {
    std::vector<Terms> out;
    for (const auto& d : H.coproduct) out.push_back(nonzeros(d));
    return out;
}

/// (Delta (x) Id)u and (Id (x) Delta)u for u in A (x) A.
Sparse delta_left(const std::vector<Terms>& delta, int n, const Sparse& u) {
    Sparse out;
    for (const auto& [ij, c] : u) {
        const int i = static_cast<int>(ij / n), j = static_cast<int>(ij % n);
        for (const auto& [pq, d] : delta[i]) accumulate(out, static_cast<std::int64_t>(pq) * n + j, c * d);
    }
    return out;
}
Sparse delta_right(const std::vector<Terms>& delta, int n, const Sparse& u) {
    Sparse out;
    for (const auto& [ij, c] : u) {
        const std::int64_t i = ij / n;
        const int j = static_cast<int>(ij % n);
        for (const auto& [pq, d] : delta[j]) accumulate(out, i * n * n + pq, c * d);
    }
    return out;
}

/// Embeds u in A (x) A into A^{(x)3} at positions (first, second) with 1 in the remaining slot.
Sparse embed(const Algebra& A, const Sparse& u, int first, int second) {
    const std::int64_t n = A.dim();
    Terms one = nonzeros(A.unit());
    Sparse out;
    for (const auto& [ij, c] : u) {
        const std::int64_t i = ij / n, j = ij % n;
        for (const auto& [o, co] : one) {
            std::int64_t slot[3];
            int other = 3 - first - second;
            slot[first] = i;
            slot[second] = j;
            slot[other] = o;
            accumulate(out, (slot[0] * n + slot[1]) * n + slot[2], c * co);
        }
    }
    return out;
}

Element apply_vector_map(const CMatrix& m, const Element& v) { return m.apply(v); }

}  // namespace

Element coproduct_of(const HopfAlgebra& H, const Element& a) {
    H.A().check(a);
    const std::size_t len = static_cast<std::size_t>(H.dim()) * static_cast<std::size_t>(H.dim());
    Element out(len, H.A().zero());
    for (int k = 0; k < H.dim(); ++k) {
        if (a[k].is_zero()) continue;
        for (std::size_t t = 0; t < len; ++t)
            if (!H.coproduct[k][t].is_zero()) out[t] += a[k] * H.coproduct[k][t];
    }
    return out;
}

Element convolve(const HopfAlgebra& H, const Element& f, const Element& g) {
    const int n = H.dim();
    Element out = H.A().zero_element();
    for (int k = 0; k < n; ++k) {
        const Element& d = H.coproduct[k];
        for (int i = 0; i < n; ++i) {
            if (f[i].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                const Cyclotomic& c = d[static_cast<std::size_t>(i * n + j)];
                if (!c.is_zero() && !g[j].is_zero()) out[k] += c * f[i] * g[j];
            }
        }
    }
    return out;
}

Verification verify_hopf(const HopfAlgebra& H, Exec exec) {
    const Algebra& A = H.A();
    const int n = A.dim();
    Verification v;
    if (static_cast<int>(H.coproduct.size()) != n || static_cast<int>(H.counit.size()) != n ||
        H.antipode.rows() != n || H.antipode.cols() != n) {
        v.add_failure("Hopf tensors have the wrong shape");
        return v;
    }
    for (const auto& d : H.coproduct)
        if (d.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
            v.add_failure("coproduct entry has the wrong length");
            return v;
        }
    const auto delta = coproduct_terms(H);
    CMatrix id = CMatrix::identity(n, A.zero());
    Cyclotomic one(A.zero().field(), Rational(1));

    v.check(coproduct_of(H, A.unit()) == pure_tensor(A.unit(), A.unit()), "Delta(1) != 1 (x) 1");
    v.check(evaluate(H.counit, A.unit()) == one, "epsilon(1) != 1");

    std::vector<Verification> per(static_cast<std::size_t>(n));
    parallel_for(
        static_cast<std::size_t>(n),
        [&](std::size_t ui) {
            const int k = static_cast<int>(ui);
            Verification& w = per[ui];
            const std::string x = "x" + std::to_string(k);
            Sparse dk = to_sparse(H.coproduct[k]);
            w.check(delta_left(delta, n, dk) == delta_right(delta, n, dk), "coassociativity fails on " + x);
            w.check(contract_first(H.counit, H.coproduct[k], n, n) == A.basis(k), "(eps (x) Id) Delta != Id on " + x);
            w.check(contract_second(H.counit, H.coproduct[k], n, n) == A.basis(k), "(Id (x) eps) Delta != Id on " + x);
            for (int j = 0; j < n; ++j) {
                Element prod = A.multiply(A.basis(k), A.basis(j));
                Sparse lhs = to_sparse(coproduct_of(H, prod));
                Sparse rhs = sparse_multiply(A, 2, dk, to_sparse(H.coproduct[j]));
                if (lhs != rhs) w.add_failure("Delta is not multiplicative on (" + x + ", x" + std::to_string(j) + ")");
                if (evaluate(H.counit, prod) != H.counit[k] * H.counit[j])
                    w.add_failure("epsilon is not multiplicative on (" + x + ", x" + std::to_string(j) + ")");
            }
            Element eps_unit = A.scalar(H.counit[k]);
            Element left = A.zero_element(), right = A.zero_element();
            for (const auto& [pq, c] : delta[k]) {
                const int p = pq / n, q = pq % n;
                left = left + scale(c, A.multiply(H.antipode.column(p), A.basis(q)));
                right = right + scale(c, A.multiply(A.basis(p), H.antipode.column(q)));
            }
            w.check(left == eps_unit, "S(h1) h2 != epsilon(h) 1 for h = " + x);
            w.check(right == eps_unit, "h1 S(h2) != epsilon(h) 1 for h = " + x);
            w.check(apply_vector_map(H.antipode, H.antipode.column(k)) == A.basis(k), "S^2 != Id on " + x);
        },
        exec, 2);
    for (const auto& p : per) v.merge(p);
    return v;
}

HopfAlgebra group_algebra(const FiniteGroup& G, int conductor) {
    const CyclotomicField& field = CyclotomicField::get(conductor > 0 ? conductor : G.exponent());
    const int n = G.order();
    Cyclotomic zero(field), one(field, Rational(1));
    std::vector<std::tuple<int, int, int, Cyclotomic>> entries;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) entries.emplace_back(a, b, G.mul(a, b), one);
    Element unit(static_cast<std::size_t>(n), zero);
    unit[G.identity()] = one;
    auto A = std::make_shared<const Algebra>(Algebra::from_triples(n, zero, entries, unit));
    HopfAlgebra H{A, {}, Element(static_cast<std::size_t>(n), one), CMatrix(n, n, zero), std::nullopt};
    for (int g = 0; g < n; ++g) {
        Element d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), zero);
        d[static_cast<std::size_t>(g * n + g)] = one;
        H.coproduct.push_back(std::move(d));
        H.antipode(G.inverse(g), g) = one;
    }
    return H;
}

HopfAlgebra dual_hopf(const HopfAlgebra& H) {
    const Algebra& A = H.A();
    const int n = A.dim();
    const Cyclotomic& zero = A.zero();
    std::vector<std::tuple<int, int, int, Cyclotomic>> entries;
    for (int k = 0; k < n; ++k)
        for (int ij = 0; ij < n * n; ++ij)
            if (!H.coproduct[k][ij].is_zero()) entries.emplace_back(ij / n, ij % n, k, H.coproduct[k][ij]);
    auto D = std::make_shared<const Algebra>(Algebra::from_triples(n, zero, entries, H.counit));
    HopfAlgebra out{D, {}, A.unit(), H.antipode.transpose(), std::nullopt};
    out.coproduct.assign(static_cast<std::size_t>(n), Element(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : A.product(i, j)) out.coproduct[k][static_cast<std::size_t>(i * n + j)] = c;
    return out;
}

HopfAlgebra drinfeld_double(const FiniteGroup& G, int conductor) {
    const CyclotomicField& field = CyclotomicField::get(conductor > 0 ? conductor : G.exponent());
    const int m = G.order(), n = m * m;
    const int e = G.identity();
    Cyclotomic zero(field), one(field, Rational(1));
    auto idx = [m](int x, int g) { return x * m + g; };
    std::vector<std::tuple<int, int, int, Cyclotomic>> entries;
    for (int x = 0; x < m; ++x)
        for (int g = 0; g < m; ++g)
            for (int y = 0; y < m; ++y)
                for (int h = 0; h < m; ++h)
                    if (x == G.conjugate(g, y)) entries.emplace_back(idx(x, g), idx(y, h), idx(x, G.mul(g, h)), one);
    Element unit(static_cast<std::size_t>(n), zero);
    for (int x = 0; x < m; ++x) unit[idx(x, e)] = one;
    auto A = std::make_shared<const Algebra>(Algebra::from_triples(n, zero, entries, unit));
    HopfAlgebra H{A, {}, Element(static_cast<std::size_t>(n), zero), CMatrix(n, n, zero), std::nullopt};
    const std::size_t len = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    for (int x = 0; x < m; ++x)
        for (int g = 0; g < m; ++g) {
            Element d(len, zero);
            for (int y = 0; y < m; ++y) {
                int z = G.mul(G.inverse(y), x);
                d[static_cast<std::size_t>(idx(y, g) * n + idx(z, g))] = one;
            }
            H.coproduct.push_back(std::move(d));
            if (x == e) H.counit[idx(x, g)] = one;
            int gi = G.inverse(g);
            H.antipode(idx(G.conjugate(gi, G.inverse(x)), gi), idx(x, g)) = one;
        }
    Element R(len, zero);
    for (int g = 0; g < m; ++g)
        for (int x = 0; x < m; ++x) R[static_cast<std::size_t>(idx(g, e) * n + idx(x, g))] = one;
    H.R = std::move(R);
    return H;
}

HopfAlgebra with_trivial_R(const HopfAlgebra& H) {
    HopfAlgebra out = H;
    out.R = pure_tensor(H.A().unit(), H.A().unit());
    return out;
}

IntegralData integrals(const HopfAlgebra& H) {
    const Algebra& A = H.A();
    const int n = A.dim();
    CMatrix stacked(n * n, n, A.zero());
    for (int h = 0; h < n; ++h) {
        CMatrix L = A.left_matrix(A.basis(h));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) stacked(h * n + r, c) = L(r, c) - (r == c ? H.counit[h] : A.zero());
    }
    auto kernel = rref_and_kernel(std::move(stacked)).kernel;
    require(kernel.size() == 1, ErrorKind::AxiomFailure,
            "space of left integrals has dimension " + std::to_string(kernel.size()) + ", expected 1");
    Element raw = kernel.front();
    Cyclotomic eps = evaluate(H.counit, raw);
    if (eps.is_zero())
        fail(ErrorKind::NormalizationImpossible, "epsilon vanishes on the left integral " + describe_element(raw));
    Element Lambda = scale(Cyclotomic(A.zero().field(), Rational(n)) / eps, raw);
    for (int h = 0; h < n; ++h)
        if (A.multiply(Lambda, A.basis(h)) != scale(H.counit[h], Lambda))
            fail(ErrorKind::NotUnimodular, "left integral is not a right integral: Lambda x" + std::to_string(h) +
                                               " != epsilon(x" + std::to_string(h) + ") Lambda");
    IntegralData I;
    I.lambda = normalized_regular_form(A);
    I.Lambda0 = scale(Cyclotomic(A.zero().field(), Rational(1, n)), Lambda);
    I.Lambda = std::move(Lambda);
    return I;
}

Verification verify_integrals(const HopfAlgebra& H, const IntegralData& I) {
    const Algebra& A = H.A();
    const int n = A.dim();
    Cyclotomic one(A.zero().field(), Rational(1));
    Verification v;
    v.check(evaluate(H.counit, I.Lambda) == Cyclotomic(A.zero().field(), Rational(n)), "epsilon(Lambda) != dim H");
    v.check(evaluate(I.lambda, I.Lambda) == one, "lambda(Lambda) != 1");
    v.check(evaluate(I.lambda, A.unit()) == one, "lambda(1) != 1");
    v.check(evaluate(H.counit, I.Lambda0) == one, "epsilon(Lambda0) != 1");
    for (int h = 0; h < n; ++h) {
        v.check(A.multiply(A.basis(h), I.Lambda) == scale(H.counit[h], I.Lambda), "h Lambda != eps(h) Lambda for x" + std::to_string(h));
        v.check(A.multiply(I.Lambda, A.basis(h)) == scale(H.counit[h], I.Lambda), "Lambda h != eps(h) Lambda for x" + std::to_string(h));
        Element f = A.basis(h);
        Element expect = scale(evaluate(f, A.unit()), I.lambda);
        v.check(convolve(H, f, I.lambda) == expect, "f lambda != f(1) lambda in H* for f = x" + std::to_string(h) + "^*");
        v.check(convolve(H, I.lambda, f) == expect, "lambda f != f(1) lambda in H* for f = x" + std::to_string(h) + "^*");
    }
    return v;
}

HopfCasimirData hopf_casimir(const HopfAlgebra& H, const IntegralData& I) {
    const Algebra& A = H.A();
    const int n = A.dim();
    CMatrix id = CMatrix::identity(n, A.zero());
    Element dL = coproduct_of(H, I.Lambda);
    Element e1 = apply_tensor(H.antipode, id, dL);
    Element e2 = swap_tensor(e1, n, n);
    Element e4 = apply_tensor(id, H.antipode, dL);
    Element e3 = swap_tensor(e4, n, n);
    require(e1 == e2, ErrorKind::Internal, "S(L1) (x) L2 != L2 (x) S(L1)");
    require(e1 == e3, ErrorKind::Internal, "S(L1) (x) L2 != S(L2) (x) L1");
    require(e1 == e4, ErrorKind::Internal, "S(L1) (x) L2 != L1 (x) S(L2)");
    FrobeniusStructure F = frobenius_structure(H.algebra, I.lambda);
    require(F.casimir == e1, ErrorKind::Internal, "Hopf Casimir element differs from the dual-basis one");
    HopfCasimirData out;
    out.casimir = e1;
    out.gamma_one = casimir_trace(F, A.unit());
    require(out.gamma_one == A.scalar(Cyclotomic(A.zero().field(), Rational(n))), ErrorKind::Internal,
            "Gamma(1) != dim H");
    HopfAlgebra D = dual_hopf(H);
    FrobeniusStructure FD = frobenius_structure(D.algebra, I.Lambda);
    out.dual_gamma_counit = casimir_trace(FD, D.A().unit());
    require(out.dual_gamma_counit == D.A().unit(), ErrorKind::Internal, "Gamma^Lambda(epsilon) != epsilon");
    return out;
}

QuasitriangularData quasitriangular_verify(const HopfAlgebra& H, Exec exec) {
    require(H.R.has_value(), ErrorKind::InvalidInput, "no R-matrix supplied");
    const Algebra& A = H.A();
    const int n = A.dim();
    const Element& Rd = *H.R;
    require(Rd.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n), ErrorKind::DimensionMismatch,
            "R has the wrong length");
    CMatrix id = CMatrix::identity(n, A.zero());
    const auto delta = coproduct_terms(H);
    Sparse R = to_sparse(Rd);
    Sparse one2 = to_sparse(pure_tensor(A.unit(), A.unit()));
    Element Rinv_d = apply_tensor(H.antipode, id, Rd);
    Sparse Rinv = to_sparse(Rinv_d);
    if (sparse_multiply(A, 2, R, Rinv) != one2 || sparse_multiply(A, 2, Rinv, R) != one2)
        fail(ErrorKind::AxiomFailure, "R is not invertible with inverse (S (x) Id)(R)");
    Sparse R12 = embed(A, R, 0, 1), R13 = embed(A, R, 0, 2), R23 = embed(A, R, 1, 2);
    if (delta_left(delta, n, R) != sparse_multiply(A, 3, R13, R23))
        fail(ErrorKind::AxiomFailure, "(Delta (x) Id)(R) != R13 R23");
    if (delta_right(delta, n, R) != sparse_multiply(A, 3, R13, R12))
        fail(ErrorKind::AxiomFailure, "(Id (x) Delta)(R) != R13 R12");
    std::vector<int> bad(static_cast<std::size_t>(n), 0);
    parallel_for(
        static_cast<std::size_t>(n),
        [&](std::size_t h) {
            Sparse d = to_sparse(H.coproduct[h]);
            Sparse dt = to_sparse(swap_tensor(H.coproduct[h], n, n));
            if (sparse_multiply(A, 2, dt, R) != sparse_multiply(A, 2, R, d)) bad[h] = 1;
        },
        exec, 2);
    for (int h = 0; h < n; ++h)
        if (bad[h]) fail(ErrorKind::AxiomFailure, "tau(Delta h) R != R Delta(h) for h = x" + std::to_string(h));
    if (contract_first(H.counit, Rd, n, n) != A.unit() || contract_second(H.counit, Rd, n, n) != A.unit())
        fail(ErrorKind::AxiomFailure, "R1 eps(R2) = 1 = eps(R1) R2 fails");

    QuasitriangularData Q;
    Q.R = Rd;
    Q.R_inverse = std::move(Rinv_d);
    Q.b = to_dense(sparse_multiply(A, 2, to_sparse(swap_tensor(Rd, n, n)), R), Rd.size(), A.zero());
    Q.Phi = CMatrix(n, n, A.zero());
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < n; ++j) Q.Phi(a, j) = Q.b[static_cast<std::size_t>(a * n + j)];
    if (contract_first(H.counit, Q.b, n, n) != A.unit()) fail(ErrorKind::AxiomFailure, "eps(b1) b2 != 1");
    for (int j = 0; j < n; ++j)
        if (evaluate(H.counit, Q.Phi.column(j)) != A.unit()[j])
            fail(ErrorKind::AxiomFailure, "eps(Phi(f)) != f(1) for f = x" + std::to_string(j) + "^*");
    return Q;
}

FactorizableVerdict factorizable_check(const HopfAlgebra& H, const QuasitriangularData& Q) {
    int r = rank(Q.Phi);
    return {r == H.dim(), r};
}

CMatrix double_projection(const FiniteGroup& G, const HopfAlgebra& D, const HopfAlgebra& kG) {
    const int m = G.order();
    require(D.dim() == m * m && kG.dim() == m, ErrorKind::DimensionMismatch, "double projection shapes");
    CMatrix p(m, m * m, kG.A().zero());
    Cyclotomic one(kG.A().zero().field(), Rational(1));
    for (int g = 0; g < m; ++g) p(g, G.identity() * m + g) = one;
    return p;
}

}  // namespace casimir
