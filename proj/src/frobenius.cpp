#include "casimir/frobenius.hpp"

namespace casimir {

namespace {

CMatrix gram_matrix(const Algebra& A, const Element& lambda) {
    const int n = A.dim();
    CMatrix g(n, n, A.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : A.product(i, j))
                if (!lambda[k].is_zero()) g(i, j) += c * lambda[k];
    return g;
}

FrobeniusStructure build(AlgebraPtr A, Element lambda, CMatrix gram) {
    const int n = A->dim();
    auto inv = try_inverse(gram);
    if (!inv) {
        auto rr = rref_and_kernel(gram);
        fail(ErrorKind::Degenerate,
             "Gram matrix is singular; lambda vanishes on the ideal generated by " + describe_element(rr.kernel.front()));
    }
    Element c(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), A->zero());
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(j * n + k)] = (*inv)(k, j);
    return FrobeniusStructure{std::move(A), std::move(lambda), std::move(gram), std::move(*inv), std::move(c)};
}

void check_form_length(const Algebra& A, const Element& lambda) {
    require(static_cast<int>(lambda.size()) == A.dim(), ErrorKind::DimensionMismatch,
            "form has " + std::to_string(lambda.size()) + " values for an algebra of dimension " + std::to_string(A.dim()));
    for (const auto& v : lambda)
        require(v.conductor() == A.zero().conductor(), ErrorKind::ConductorMismatch, "form scalar conductor");
}

}  // namespace

Cyclotomic evaluate(const Element& form, const Element& a) { return dot(form, a); }

std::optional<Element> degeneracy_witness(const Algebra& A, const Element& lambda) {
    check_form_length(A, lambda);
    auto rr = rref_and_kernel(gram_matrix(A, lambda));
    if (rr.kernel.empty()) return std::nullopt;
    return rr.kernel.front();
}

FrobeniusStructure frobenius_structure(AlgebraPtr A, Element lambda) {
    check_form_length(*A, lambda);
    CMatrix g = gram_matrix(*A, lambda);
    for (int i = 0; i < A->dim(); ++i)
        for (int j = i + 1; j < A->dim(); ++j)
            if (g(i, j) != g(j, i))
                fail(ErrorKind::NotATraceForm, "lambda(x" + std::to_string(i) + " x" + std::to_string(j) +
                                                   ") = " + g(i, j).to_string() + " but lambda(x" + std::to_string(j) +
                                                   " x" + std::to_string(i) + ") = " + g(j, i).to_string());
    return build(std::move(A), std::move(lambda), std::move(g));
}

FrobeniusStructure frobenius_structure_unchecked(AlgebraPtr A, Element lambda) {
    check_form_length(*A, lambda);
    CMatrix g = gram_matrix(*A, lambda);
    return build(std::move(A), std::move(lambda), std::move(g));
}

Element casimir_trace_unchecked(const FrobeniusStructure& F, const Element& a) {
    const Algebra& A = F.A();
    Element out = A.zero_element();
    for (int j = 0; j < A.dim(); ++j) {
        Element xa = A.multiply(A.basis(j), a);
        if (is_zero_vector(xa)) continue;
        out = out + A.multiply(xa, F.y(j));
    }
    return out;
}

bool is_central(const Algebra& A, const Element& a) {
    for (int i = 0; i < A.dim(); ++i) {
        Element xi = A.basis(i);
        if (A.multiply(xi, a) != A.multiply(a, xi)) return false;
    }
    return true;
}

Element casimir_trace(const FrobeniusStructure& F, const Element& a) {
    Element g = casimir_trace_unchecked(F, a);
    require(is_central(F.A(), g), ErrorKind::Internal, "Casimir trace of " + describe_element(a) + " is not central");
    return g;
}

CMatrix casimir_trace_matrix(const FrobeniusStructure& F) {
    const int n = F.dim();
    std::vector<Element> cols(static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n),
                 [&](std::size_t j) { cols[j] = casimir_trace_unchecked(F, F.A().basis(static_cast<int>(j))); }, Exec::Automatic, 2);
    return CMatrix::from_columns(cols, n, F.A().zero());
}

Cyclotomic trace_via_casimir(const FrobeniusStructure& F, const CMatrix& f) {
    const Algebra& A = F.A();
    require(f.rows() == A.dim() && f.cols() == A.dim(), ErrorKind::DimensionMismatch, "endomorphism shape");
    Cyclotomic t = A.zero();
    for (int i = 0; i < A.dim(); ++i) t += evaluate(F.lambda, A.multiply(f.column(i), F.y(i)));
    return t;
}

Verification check_casimir_identities(const FrobeniusStructure& F, Exec exec) {
    const Algebra& A = F.A();
    const int n = A.dim();
    Verification v;
    v.check(swap_tensor(F.casimir, n, n) == F.casimir, "c is not fixed by the switch map");
    CMatrix id = CMatrix::identity(n, A.zero());
    Element c2 = tensor_multiply(A, A, F.casimir, F.casimir, exec);
    std::vector<Verification> per(static_cast<std::size_t>(n));
    parallel_for(
        static_cast<std::size_t>(n),
        [&](std::size_t ui) {
            int a = static_cast<int>(ui);
            CMatrix L = A.left_matrix(A.basis(a)), R = A.right_matrix(A.basis(a));
            std::string w = "x" + std::to_string(a);
            per[ui].check(apply_tensor(L, id, F.casimir) == apply_tensor(id, R, F.casimir),
                          "(a (x) 1) c != c (1 (x) a) for a = " + w);
            per[ui].check(apply_tensor(id, L, F.casimir) == apply_tensor(R, id, F.casimir),
                          "(1 (x) b) c != c (b (x) 1) for b = " + w);
            per[ui].check(apply_tensor(L, id, c2) == apply_tensor(R, id, c2), "c^2 does not commute with " + w + " (x) 1");
            per[ui].check(apply_tensor(id, L, c2) == apply_tensor(id, R, c2), "c^2 does not commute with 1 (x) " + w);
        },
        exec, 2);
    for (const auto& p : per) v.merge(p);
    return v;
}

Cyclotomic random_scalar(const CyclotomicField& field, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<Rational> c;
    for (int i = 0; i < field.degree(); ++i) c.emplace_back(dist(rng));
    return Cyclotomic(field, std::move(c));
}

Element random_element(const Algebra& A, std::mt19937_64& rng, int bound) {
    Element e;
    for (int i = 0; i < A.dim(); ++i) e.push_back(random_scalar(A.zero().field(), rng, bound));
    return e;
}

Verification check_trace_identities(const FrobeniusStructure& F, std::mt19937_64& rng, int endomorphisms, int triples) {
    const Algebra& A = F.A();
    const int n = A.dim();
    Verification v;
    for (int a = 0; a < n; ++a) {
        Element xa = A.basis(a);
        Element r1 = A.zero_element(), r2 = A.zero_element();
        for (int i = 0; i < n; ++i) {
            r1 = r1 + scale(evaluate(F.lambda, A.multiply(xa, F.y(i))), A.basis(i));
            r2 = r2 + scale(evaluate(F.lambda, A.multiply(xa, A.basis(i))), F.y(i));
        }
        v.check(r1 == xa, "a != sum x_i lambda(a y_i) for a = x" + std::to_string(a));
        v.check(r2 == xa, "a != sum y_i lambda(a x_i) for a = x" + std::to_string(a));
    }
    for (int t = 0; t < endomorphisms; ++t) {
        CMatrix f(n, n, A.zero());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) f(i, j) = random_scalar(A.zero().field(), rng);
        v.check(trace_via_casimir(F, f) == trace(f), "trace formula fails on random endomorphism #" + std::to_string(t));
    }
    Element gamma1 = casimir_trace(F, A.unit());
    Element chi = regular_character(A);
    for (int a = 0; a < n; ++a)
        v.check(chi[a] == evaluate(F.lambda, A.multiply(gamma1, A.basis(a))),
                "chi_reg(x" + std::to_string(a) + ") != lambda(Gamma(1) x" + std::to_string(a) + ")");
    for (int t = 0; t < triples; ++t) {
        Element a = random_element(A, rng), b = random_element(A, rng), c = random_element(A, rng);
        Element lhs = A.multiply(a, casimir_trace(F, A.multiply(b, c)));
        Element rhs = A.multiply(casimir_trace(F, A.multiply(c, b)), a);
        v.check(lhs == rhs, "a Gamma(bc) != Gamma(cb) a on random triple #" + std::to_string(t));
    }
    return v;
}

Element act_on_form(const Algebra& A, const Element& u, const Element& lambda) {
    Element out;
    for (int i = 0; i < A.dim(); ++i) out.push_back(evaluate(lambda, A.multiply(A.basis(i), u)));
    return out;
}

std::optional<Element> element_inverse(const Algebra& A, const Element& u) {
    auto v = solve(A.left_matrix(u), A.unit());
    if (!v || A.multiply(*v, u) != A.unit()) return std::nullopt;
    return v;
}

Verification check_rescaling(const FrobeniusStructure& F, const Element& u) {
    const Algebra& A = F.A();
    Verification v;
    require(is_central(A, u), ErrorKind::InvalidInput, "rescaling element is not central");
    auto uinv = element_inverse(A, u);
    require(uinv.has_value(), ErrorKind::InvalidInput, "rescaling element is not a unit");
    FrobeniusStructure G = frobenius_structure(F.algebra, act_on_form(A, u, F.lambda));
    CMatrix id = CMatrix::identity(A.dim(), A.zero());
    v.check(G.casimir == apply_tensor(A.left_matrix(*uinv), id, F.casimir), "rescaled Casimir != (u^-1 (x) 1) c");
    v.check(casimir_trace(G, A.unit()) == casimir_trace(F, *uinv), "rescaled Gamma(1) != Gamma(u^-1)");
    return v;
}

std::optional<Cyclotomic> scalar_value(const Algebra& A, const Element& a) {
    int pivot = -1;
    for (int i = 0; i < A.dim(); ++i)
        if (!A.unit()[i].is_zero()) {
            pivot = i;
            break;
        }
    Cyclotomic s = a[pivot] / A.unit()[pivot];
    if (A.scalar(s) != a) return std::nullopt;
    return s;
}

Element normalized_regular_form(const Algebra& A) {
    Element chi = regular_character(A);
    Rational inv(1, A.dim());
    for (auto& c : chi) c *= inv;
    return chi;
}

Element delta_one_form(const Algebra& A) {
    int idx = -1;
    for (int i = 0; i < A.dim(); ++i) {
        if (A.unit()[i].is_zero()) continue;
        require(idx < 0 && A.unit()[i].is_one(), ErrorKind::InvalidInput,
                "delta-one form needs the unit to be a basis element");
        idx = i;
    }
    Element f = A.zero_element();
    f[idx] = Cyclotomic(A.zero().field(), Rational(1));
    return f;
}

}  // namespace casimir
