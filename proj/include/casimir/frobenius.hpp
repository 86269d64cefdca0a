#pragma once

#include <optional>
#include <random>

#include "casimir/algebra.hpp"

namespace casimir {

/// A nondegenerate form on A with its Gram matrix G_ij = lambda(x_i x_j), the
/// dual basis y_j = sum_k (G^{-1})_kj x_k and c = sum_j x_j (x) y_j.
struct FrobeniusStructure {
    AlgebraPtr algebra;
    Element lambda;
    CMatrix gram;
    /// Column j holds y_j in x-coordinates.
    CMatrix dual;
    /// Flat index j*dim + k carries the coefficient of x_j (x) x_k.
    Element casimir;

    const Algebra& A() const { return *algebra; }
    int dim() const { return algebra->dim(); }
    Element y(int j) const { return dual.column(j); }
};

Cyclotomic evaluate(const Element& form, const Element& a);

/// Kernel vector w of the Gram matrix, when there is one: lambda(A w) = 0, so
/// the ideal generated by w lies in ker(lambda) whenever lambda is a trace form.
std::optional<Element> degeneracy_witness(const Algebra& A, const Element& lambda);

/// Checks the trace property (NotATraceForm with the failing pair) and
/// nondegeneracy (Degenerate with an ideal witness), then builds the structure.
FrobeniusStructure frobenius_structure(AlgebraPtr A, Element lambda);
/// As above without the trace-form check; only for corruption tests.
FrobeniusStructure frobenius_structure_unchecked(AlgebraPtr A, Element lambda);

/// Gamma(a) = sum_i x_i a y_i; throws Internal if the result is not central.
Element casimir_trace(const FrobeniusStructure& F, const Element& a);
Element casimir_trace_unchecked(const FrobeniusStructure& F, const Element& a);
/// Matrix of Gamma; column j is Gamma(x_j).
CMatrix casimir_trace_matrix(const FrobeniusStructure& F);

/// sum_i lambda(f(x_i) y_i) for an endomorphism f of A given as a matrix.
Cyclotomic trace_via_casimir(const FrobeniusStructure& F, const CMatrix& f);

/// Switch invariance of c and the two commutation laws with basis elements,
/// plus centrality of c^2 in A (x) A (tested against x_a (x) 1 and 1 (x) x_b).
Verification check_casimir_identities(const FrobeniusStructure& F, Exec exec = Exec::Automatic);

/// Reconstruction identity, trace formula on random endomorphisms, the
/// regular-character chain chi_reg(a) = lambda(Gamma(1) a) and the cyclic
/// identity a Gamma(bc) = Gamma(cb) a on random triples.
Verification check_trace_identities(const FrobeniusStructure& F, std::mt19937_64& rng, int endomorphisms = 50,
                                    int triples = 20);

/// (u -> lambda)(c) = lambda(c u).
Element act_on_form(const Algebra& A, const Element& u, const Element& lambda);

/// Solves u v = 1; nullopt if u is not a unit.
std::optional<Element> element_inverse(const Algebra& A, const Element& u);

/// Rebuilds the structure from u -> lambda for a central unit u and checks
/// c' = (u^{-1} (x) 1) c and Gamma'(1) = Gamma(u^{-1}).
Verification check_rescaling(const FrobeniusStructure& F, const Element& u);

bool is_central(const Algebra& A, const Element& a);
/// The element is s*1 for a scalar s.
std::optional<Cyclotomic> scalar_value(const Algebra& A, const Element& a);

/// lambda = chi_reg / dim A.
Element normalized_regular_form(const Algebra& A);
/// lambda(x_i) = [x_i = 1]; requires the unit to be a basis vector.
Element delta_one_form(const Algebra& A);

Cyclotomic random_scalar(const CyclotomicField& field, std::mt19937_64& rng, int bound = 3);
Element random_element(const Algebra& A, std::mt19937_64& rng, int bound = 3);

}  // namespace casimir
