#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "casimir/cyclotomic.hpp"
#include "casimir/matrix.hpp"
#include "casimir/parallel.hpp"
#include "casimir/verification.hpp"

namespace casimir {

// ---- coefficient-vector helpers -------------------------------------------

template <class T>
Vector<T> zero_vector(std::size_t n, const T& proto) {
    return Vector<T>(n, zero_like(proto));
}

template <class T>
bool is_zero_vector(const Vector<T>& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

template <class T>
Vector<T> operator+(const Vector<T>& a, const Vector<T>& b) {
    require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector lengths differ");
    Vector<T> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

template <class T>
Vector<T> operator-(const Vector<T>& a, const Vector<T>& b) {
    require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector lengths differ");
    Vector<T> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

template <class T>
Vector<T> scale(const T& s, const Vector<T>& v) {
    Vector<T> r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(s * x);
    return r;
}

template <class T>
T dot(const Vector<T>& a, const Vector<T>& b) {
    require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector lengths differ");
    T acc = zero_like(a.empty() ? T() : a[0]);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a[i]) && !is_zero(b[i])) acc = acc + a[i] * b[i];
    return acc;
}

// ---- structure-constant algebra --------------------------------------------

/// Finite-dimensional algebra on a basis x_0..x_{n-1} with sparse structure
/// constants x_i x_j = sum_k m_ijk x_k and an explicit unit vector.
template <class T>
class BasicAlgebra {
   public:
    using Term = std::pair<int, T>;

    BasicAlgebra(int dim, const T& proto, std::vector<std::vector<Term>> table, Vector<T> unit)
        : dim_(dim), zero_(zero_like(proto)), table_(std::move(table)), unit_(std::move(unit)) {
        require(dim >= 1, ErrorKind::InvalidInput, "algebra dimension must be positive");
        require(table_.size() == static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
                ErrorKind::DimensionMismatch, "structure-constant table size");
        require(unit_.size() == static_cast<std::size_t>(dim), ErrorKind::DimensionMismatch, "unit length");
    }

    /// Builds from (i, j, k, m_ijk) entries; repeated (i, j, k) accumulate.
    static BasicAlgebra from_triples(int dim, const T& proto, const std::vector<std::tuple<int, int, int, T>>& entries,
                                     Vector<T> unit) {
        require(dim >= 1, ErrorKind::InvalidInput, "algebra dimension must be positive");
        const std::size_t n = static_cast<std::size_t>(dim);
        std::vector<Vector<T>> dense(n * n);
        for (const auto& [i, j, k, c] : entries) {
            require(i >= 0 && i < dim && j >= 0 && j < dim && k >= 0 && k < dim, ErrorKind::InvalidInput,
                    "structure-constant index out of range: [" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                        std::to_string(k) + "]");
            auto& cell = dense[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)];
            if (cell.empty()) cell.assign(n, zero_like(proto));
            cell[k] = cell[k] + c;
        }
        std::vector<std::vector<Term>> table(n * n);
        for (std::size_t ij = 0; ij < n * n; ++ij)
            for (std::size_t k = 0; k < dense[ij].size(); ++k)
                if (!is_zero(dense[ij][k])) table[ij].emplace_back(static_cast<int>(k), dense[ij][k]);
        return BasicAlgebra(dim, proto, std::move(table), std::move(unit));
    }

    int dim() const { return dim_; }
    const T& zero() const { return zero_; }
    const Vector<T>& unit() const { return unit_; }
    const std::vector<Term>& product(int i, int j) const {
        return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j)];
    }

    Vector<T> zero_element() const { return zero_vector(static_cast<std::size_t>(dim_), zero_); }
    Vector<T> basis(int i) const {
        Vector<T> v = zero_element();
        v[i] = one_like(zero_);
        return v;
    }
    Vector<T> scalar(const T& s) const { return casimir::scale(s, unit_); }

    Vector<T> multiply(const Vector<T>& a, const Vector<T>& b) const {
        check(a);
        check(b);
        Vector<T> r = zero_element();
        for (int i = 0; i < dim_; ++i) {
            if (is_zero(a[i])) continue;
            for (int j = 0; j < dim_; ++j) {
                if (is_zero(b[j])) continue;
                T ab = a[i] * b[j];
                for (const auto& [k, c] : product(i, j)) r[k] = r[k] + ab * c;
            }
        }
        return r;
    }

    /// Matrix of c -> a c (left) or c -> c a (right); column j is the image of x_j.
    Matrix<T> left_matrix(const Vector<T>& a) const {
        check(a);
        Matrix<T> m(dim_, dim_, zero_);
        for (int i = 0; i < dim_; ++i) {
            if (is_zero(a[i])) continue;
            for (int j = 0; j < dim_; ++j)
                for (const auto& [k, c] : product(i, j)) m(k, j) = m(k, j) + a[i] * c;
        }
        return m;
    }
    Matrix<T> right_matrix(const Vector<T>& a) const {
        check(a);
        Matrix<T> m(dim_, dim_, zero_);
        for (int i = 0; i < dim_; ++i) {
            if (is_zero(a[i])) continue;
            for (int j = 0; j < dim_; ++j)
                for (const auto& [k, c] : product(j, i)) m(k, j) = m(k, j) + a[i] * c;
        }
        return m;
    }

    /// Same algebra with every structure constant pushed through f.
    template <class U, class F>
    BasicAlgebra<U> map_scalars(const U& proto, F&& f) const {
        std::vector<std::vector<typename BasicAlgebra<U>::Term>> table(table_.size());
        for (std::size_t ij = 0; ij < table_.size(); ++ij)
            for (const auto& [k, c] : table_[ij]) {
                U v = f(c);
                if (!is_zero(v)) table[ij].emplace_back(k, std::move(v));
            }
        Vector<U> unit;
        for (const auto& u : unit_) unit.push_back(f(u));
        return BasicAlgebra<U>(dim_, proto, std::move(table), std::move(unit));
    }

    void check(const Vector<T>& a) const {
        require(a.size() == static_cast<std::size_t>(dim_), ErrorKind::DimensionMismatch,
                "element length " + std::to_string(a.size()) + " for algebra of dimension " + std::to_string(dim_));
    }

   private:
    int dim_;
    T zero_;
    std::vector<std::vector<Term>> table_;
    Vector<T> unit_;
};

using Algebra = BasicAlgebra<Cyclotomic>;
using AlgebraPtr = std::shared_ptr<const Algebra>;
using Element = Vector<Cyclotomic>;
using CMatrix = Matrix<Cyclotomic>;

enum class Side { Left, Right };

/// Associativity on every basis triple and the two unit laws.
template <class T>
Verification verify_algebra(const BasicAlgebra<T>& a, Exec exec = Exec::Automatic) {
    const int n = a.dim();
    std::vector<Verification> per(static_cast<std::size_t>(n));
    parallel_for(
        static_cast<std::size_t>(n),
        [&](std::size_t ui) {
            int i = static_cast<int>(ui);
            Vector<T> xi = a.basis(i);
            Vector<T> lhs(static_cast<std::size_t>(n), a.zero()), rhs(static_cast<std::size_t>(n), a.zero());
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    for (auto& x : lhs) x = a.zero();
                    for (auto& x : rhs) x = a.zero();
                    for (const auto& [p, c] : a.product(i, j))
                        for (const auto& [q, d] : a.product(p, k)) lhs[q] = lhs[q] + c * d;
                    for (const auto& [p, c] : a.product(j, k))
                        for (const auto& [q, d] : a.product(i, p)) rhs[q] = rhs[q] + c * d;
                    if (lhs != rhs)
                        per[ui].add_failure("associativity fails on basis triple (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ", " + std::to_string(k) + ")");
                }
            }
            if (a.multiply(a.unit(), xi) != xi) per[ui].add_failure("unit is not a left identity on x_" + std::to_string(i));
            if (a.multiply(xi, a.unit()) != xi)
                per[ui].add_failure("unit is not a right identity on x_" + std::to_string(i));
        },
        exec, 2);
    Verification out;
    for (const auto& v : per) out.merge(v);
    return out;
}

template <class T>
Matrix<T> regular_rep(const BasicAlgebra<T>& a, const Vector<T>& x, Side side) {
    return side == Side::Left ? a.left_matrix(x) : a.right_matrix(x);
}

/// Kernel of the stacked maps a -> x_i a - a x_i, as reduced echelon rows.
template <class T>
std::vector<Vector<T>> center_basis(const BasicAlgebra<T>& a, Exec exec = Exec::Automatic) {
    const int n = a.dim();
    Matrix<T> stacked(n * n, n, a.zero());
    for (int i = 0; i < n; ++i) {
        Matrix<T> d = a.left_matrix(a.basis(i)) - a.right_matrix(a.basis(i));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) stacked(i * n + r, c) = d(r, c);
    }
    auto kernel = rref_and_kernel(std::move(stacked), exec).kernel;
    if (kernel.empty()) return kernel;
    auto rr = rref_and_kernel(Matrix<T>::from_rows(kernel, n, a.zero()), exec);
    std::vector<Vector<T>> out;
    for (int r = 0; r < rr.rank; ++r) out.push_back(rr.reduced.row(r));
    return out;
}

/// Leading-one column of each row of a reduced echelon basis; coordinates of a
/// vector in the span are its entries at these columns.
template <class T>
std::vector<int> echelon_pivots(const std::vector<Vector<T>>& rows) {
    std::vector<int> piv;
    for (const auto& r : rows) {
        int p = 0;
        while (p < static_cast<int>(r.size()) && is_zero(r[p])) ++p;
        piv.push_back(p);
    }
    return piv;
}

/// Echelon basis of span{x_i x_j - x_j x_i}.
template <class T>
std::vector<Vector<T>> commutator_space(const BasicAlgebra<T>& a, Exec exec = Exec::Automatic) {
    const int n = a.dim();
    std::vector<Vector<T>> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vector<T> c = a.multiply(a.basis(i), a.basis(j)) - a.multiply(a.basis(j), a.basis(i));
            if (!is_zero_vector(c)) rows.push_back(std::move(c));
        }
    if (rows.empty()) return {};
    auto rr = rref_and_kernel(Matrix<T>::from_rows(rows, n, a.zero()), exec);
    std::vector<Vector<T>> out;
    for (int r = 0; r < rr.rank; ++r) out.push_back(rr.reduced.row(r));
    return out;
}

/// Linear form as its values on the basis.
template <class T>
T evaluate_form(const Vector<T>& form, const Vector<T>& a) {
    return dot(form, a);
}

/// a -> trace of left multiplication by a.
template <class T>
Vector<T> regular_character(const BasicAlgebra<T>& a) {
    Vector<T> chi = a.zero_element();
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (const auto& [k, c] : a.product(i, j))
                if (k == j) chi[i] = chi[i] + c;
    return chi;
}

/// Minimal polynomial of an element over the algebra's own scalars, from the
/// first dependency among 1, a, a^2, ...
template <class T>
Polynomial<T> element_minimal_polynomial(const BasicAlgebra<T>& alg, const Vector<T>& a) {
    KrylovRelation<T> kr(alg.zero());
    Vector<T> p = alg.unit();
    while (kr.add(p)) p = alg.multiply(p, a);
    return kr.relation_polynomial();
}

template <class T>
Vector<T> evaluate_polynomial(const BasicAlgebra<T>& alg, const Polynomial<T>& f, const Vector<T>& a) {
    Vector<T> acc = alg.zero_element();
    for (int i = f.degree(); i >= 0; --i) acc = alg.multiply(acc, a) + alg.scalar(f[i]);
    return acc;
}

/// Dimension of the subspace spanned by the given vectors.
template <class T>
int span_dimension(const std::vector<Vector<T>>& vs, int length, const T& proto, Exec exec = Exec::Automatic) {
    if (vs.empty()) return 0;
    return rank(Matrix<T>::from_rows(vs, length, proto), exec);
}

// ---- A (x) B elements ------------------------------------------------------
// Flat index i*dim(B) + j holds the coefficient of x_i (x) x_j.

/// (M (x) N) u for linear maps given as matrices.
template <class T>
Vector<T> apply_tensor(const Matrix<T>& m, const Matrix<T>& n, const Vector<T>& u) {
    const int a = m.cols(), b = n.cols();
    require(static_cast<int>(u.size()) == a * b, ErrorKind::DimensionMismatch, "tensor length");
    // first apply N on the second factor, then M on the first
    Vector<T> mid(static_cast<std::size_t>(a) * static_cast<std::size_t>(n.rows()), m.zero());
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            const T& x = u[static_cast<std::size_t>(i * b + j)];
            if (is_zero(x)) continue;
            for (int q = 0; q < n.rows(); ++q)
                if (!is_zero(n(q, j))) mid[i * n.rows() + q] = mid[i * n.rows() + q] + n(q, j) * x;
        }
    Vector<T> out(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(n.rows()), m.zero());
    for (int i = 0; i < a; ++i)
        for (int q = 0; q < n.rows(); ++q) {
            const T& x = mid[static_cast<std::size_t>(i * n.rows() + q)];
            if (is_zero(x)) continue;
            for (int p = 0; p < m.rows(); ++p)
                if (!is_zero(m(p, i))) out[p * n.rows() + q] = out[p * n.rows() + q] + m(p, i) * x;
        }
    return out;
}

/// tau: x_i (x) x_j -> x_j (x) x_i for a tensor in A (x) B (result in B (x) A).
template <class T>
Vector<T> swap_tensor(const Vector<T>& u, int dim_a, int dim_b) {
    require(static_cast<int>(u.size()) == dim_a * dim_b, ErrorKind::DimensionMismatch, "tensor length");
    Vector<T> out(u.size(), zero_like(u[0]));
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_b; ++j) out[j * dim_a + i] = u[i * dim_b + j];
    return out;
}

template <class T>
Vector<T> pure_tensor(const Vector<T>& a, const Vector<T>& b) {
    Vector<T> out(a.size() * b.size(), zero_like(a[0]));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!is_zero(b[j])) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

/// Product in A (x) B: (a (x) b)(c (x) d) = ac (x) bd, expanded over the
/// nonzero coordinates of u and v. Rows of u are processed independently and
/// summed in index order, so the parallel result is identical to the serial one.
template <class T>
Vector<T> tensor_multiply(const BasicAlgebra<T>& A, const BasicAlgebra<T>& B, const Vector<T>& u, const Vector<T>& v,
                          Exec exec = Exec::Automatic) {
    const int na = A.dim(), nb = B.dim();
    const std::size_t len = static_cast<std::size_t>(na) * static_cast<std::size_t>(nb);
    require(u.size() == len && v.size() == len, ErrorKind::DimensionMismatch, "tensor length");
    std::vector<std::pair<int, int>> vnz;
    for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l)
            if (!is_zero(v[static_cast<std::size_t>(k * nb + l)])) vnz.emplace_back(k, l);
    std::size_t unz = 0;
    for (const auto& x : u)
        if (!is_zero(x)) ++unz;
    if (!use_parallel(exec) || unz * vnz.size() < 4096) {
        Vector<T> out(len, A.zero());
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) {
                const T& x = u[static_cast<std::size_t>(i * nb + j)];
                if (is_zero(x)) continue;
                for (const auto& [k, l] : vnz) {
                    T xy = x * v[static_cast<std::size_t>(k * nb + l)];
                    for (const auto& [p, ca] : A.product(i, k)) {
                        T s = xy * ca;
                        for (const auto& [q, cb] : B.product(j, l)) {
                            auto& slot = out[static_cast<std::size_t>(p * nb + q)];
                            slot = slot + s * cb;
                        }
                    }
                }
            }
        return out;
    }
    std::vector<Vector<T>> partial(static_cast<std::size_t>(na));
    parallel_for(
        static_cast<std::size_t>(na),
        [&](std::size_t ui) {
            const int i = static_cast<int>(ui);
            Vector<T> acc;
            for (int j = 0; j < nb; ++j) {
                const T& x = u[static_cast<std::size_t>(i * nb + j)];
                if (is_zero(x)) continue;
                if (acc.empty()) acc.assign(len, A.zero());
                for (const auto& [k, l] : vnz) {
                    T xy = x * v[static_cast<std::size_t>(k * nb + l)];
                    const auto& pa = A.product(i, k);
                    const auto& pb = B.product(j, l);
                    for (const auto& [p, ca] : pa) {
                        T s = xy * ca;
                        for (const auto& [q, cb] : pb) {
                            auto& slot = acc[static_cast<std::size_t>(p * nb + q)];
                            slot = slot + s * cb;
                        }
                    }
                }
            }
            partial[ui] = std::move(acc);
        },
        exec, 2);
    Vector<T> out(len, A.zero());
    for (const auto& p : partial)
        if (!p.empty())
            for (std::size_t t = 0; t < len; ++t)
                if (!is_zero(p[t])) out[t] = out[t] + p[t];
    return out;
}

/// (f (x) Id)(u) for a linear form f on A: an element of B.
template <class T>
Vector<T> contract_first(const Vector<T>& f, const Vector<T>& u, int dim_a, int dim_b) {
    Vector<T> out(static_cast<std::size_t>(dim_b), zero_like(u[0]));
    for (int i = 0; i < dim_a; ++i) {
        if (is_zero(f[i])) continue;
        for (int j = 0; j < dim_b; ++j) {
            const T& x = u[static_cast<std::size_t>(i * dim_b + j)];
            if (!is_zero(x)) out[j] = out[j] + f[i] * x;
        }
    }
    return out;
}

/// (Id (x) f)(u): an element of A.
template <class T>
Vector<T> contract_second(const Vector<T>& f, const Vector<T>& u, int dim_a, int dim_b) {
    Vector<T> out(static_cast<std::size_t>(dim_a), zero_like(u[0]));
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_b; ++j) {
            const T& x = u[static_cast<std::size_t>(i * dim_b + j)];
            if (!is_zero(x) && !is_zero(f[j])) out[i] = out[i] + x * f[j];
        }
    return out;
}

/// Readable witness for an element: "2*x0 - 1/3*x4" style with full scalar strings.
std::string describe_element(const Element& a);

}  // namespace casimir

namespace casimir {

/// phi(1) = 1 and phi(x_i x_j) = phi(x_i) phi(x_j) for a linear map A -> B
/// given as a dim(B) x dim(A) matrix.
template <class T>
Verification verify_algebra_map(const BasicAlgebra<T>& A, const BasicAlgebra<T>& B, const Matrix<T>& phi) {
    Verification v;
    if (phi.rows() != B.dim() || phi.cols() != A.dim()) {
        v.add_failure("map has shape " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()));
        return v;
    }
    v.check(phi.apply(A.unit()) == B.unit(), "map does not send 1 to 1");
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j)
            if (phi.apply(A.multiply(A.basis(i), A.basis(j))) != B.multiply(phi.column(i), phi.column(j)))
                v.add_failure("map is not multiplicative on (x" + std::to_string(i) + ", x" + std::to_string(j) + ")");
    return v;
}

}  // namespace casimir
