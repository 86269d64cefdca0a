#pragma once

#include "casimir/report.hpp"

namespace fx {

using namespace casimir;

inline const CyclotomicField& Q() { return CyclotomicField::rationals(); }
inline Cyclotomic q(const CyclotomicField& f, long a, long b = 1) { return Cyclotomic(f, Rational(a) / b); }

inline Element vec(const CyclotomicField& f, std::initializer_list<Rational> xs) {
    Element v;
    for (const auto& x : xs) v.push_back(Cyclotomic(f, x));
    return v;
}

/// M_n(k) on matrix units, E_ij at index i*n + j.
inline AlgebraPtr matrix_algebra(int n, const CyclotomicField& f = Q()) {
    std::vector<std::tuple<int, int, int, Cyclotomic>> t;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) t.emplace_back(i * n + j, j * n + l, i * n + l, q(f, 1));
    Element unit = zero_vector(static_cast<std::size_t>(n * n), Cyclotomic(f));
    for (int i = 0; i < n; ++i) unit[i * n + i] = q(f, 1);
    return std::make_shared<const Algebra>(Algebra::from_triples(n * n, Cyclotomic(f), t, unit));
}

/// The base field as a one-dimensional algebra.
inline AlgebraPtr ground(const CyclotomicField& f = Q()) { return matrix_algebra(1, f); }

inline HopfAlgebra kG(const std::string& name, int conductor = 0) { return group_algebra(named_group(name), conductor); }

/// Matrix trace on M_n.
inline Element matrix_trace(int n, const CyclotomicField& f = Q()) {
    Element l = zero_vector(static_cast<std::size_t>(n * n), Cyclotomic(f));
    for (int i = 0; i < n; ++i) l[i * n + i] = q(f, 1);
    return l;
}

/// Same structure constants with one entry shifted by `delta`.
inline AlgebraPtr perturbed(const Algebra& A, int i, int j, int k, const Cyclotomic& delta) {
    std::vector<std::tuple<int, int, int, Cyclotomic>> t;
    for (int a = 0; a < A.dim(); ++a)
        for (int b = 0; b < A.dim(); ++b)
            for (const auto& [c, s] : A.product(a, b)) t.emplace_back(a, b, c, s);
    t.emplace_back(i, j, k, delta);
    return std::make_shared<const Algebra>(Algebra::from_triples(A.dim(), A.zero(), t, A.unit()));
}

}  // namespace fx
