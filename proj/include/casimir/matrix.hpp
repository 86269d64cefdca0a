#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "casimir/error.hpp"
#include "casimir/parallel.hpp"
#include "casimir/polynomial.hpp"
#include "casimir/scalar.hpp"

namespace casimir {

template <class T>
using Vector = std::vector<T>;

/// Dense row-major matrix over one scalar domain. The zero prototype carries
/// the domain (conductor, modulus) so empty shapes stay well typed.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero_like(zero)),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), zero_like(zero)) {
        require(rows >= 0 && cols >= 0, ErrorKind::DimensionMismatch, "negative matrix shape");
    }

    static Matrix identity(int n, const T& proto) {
        Matrix m(n, n, proto);
        for (int i = 0; i < n; ++i) m(i, i) = one_like(proto);
        return m;
    }

    /// Columns are the given vectors.
    static Matrix from_columns(const std::vector<Vector<T>>& cols, int rows, const T& proto) {
        Matrix m(rows, static_cast<int>(cols.size()), proto);
        for (int j = 0; j < m.cols_; ++j) {
            require(static_cast<int>(cols[j].size()) == rows, ErrorKind::DimensionMismatch, "column length");
            for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }
    static Matrix from_rows(const std::vector<Vector<T>>& rows, int cols, const T& proto) {
        Matrix m(static_cast<int>(rows.size()), cols, proto);
        for (int i = 0; i < m.rows_; ++i) {
            require(static_cast<int>(rows[i].size()) == cols, ErrorKind::DimensionMismatch, "row length");
            for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const T& zero() const { return zero_; }

    T& operator()(int i, int j) { return data_[index(i, j)]; }
    const T& operator()(int i, int j) const { return data_[index(i, j)]; }

    Vector<T> row(int i) const { return Vector<T>(data_.begin() + index(i, 0), data_.begin() + index(i, 0) + cols_); }
    Vector<T> column(int j) const {
        Vector<T> c;
        c.reserve(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!casimir::is_zero(x)) return false;
        return true;
    }

    Vector<T> apply(const Vector<T>& v) const {
        require(static_cast<int>(v.size()) == cols_, ErrorKind::DimensionMismatch, "matrix-vector shape");
        Vector<T> out(static_cast<std::size_t>(rows_), zero_);
        for (int j = 0; j < cols_; ++j) {
            if (casimir::is_zero(v[j])) continue;
            for (int i = 0; i < rows_; ++i) {
                const T& a = (*this)(i, j);
                if (!casimir::is_zero(a)) out[i] = out[i] + a * v[j];
            }
        }
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.data_) x = s * x;
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b, Exec::Automatic); }

    /// Product with the row loop optionally spread over threads.
    friend Matrix multiply(const Matrix& a, const Matrix& b, Exec exec) {
        require(a.cols_ == b.rows_, ErrorKind::DimensionMismatch, "matrix product shape");
        Matrix r(a.rows_, b.cols_, a.zero_);
        parallel_for(
            static_cast<std::size_t>(a.rows_),
            [&](std::size_t ui) {
                int i = static_cast<int>(ui);
                for (int k = 0; k < a.cols_; ++k) {
                    const T& x = a(i, k);
                    if (casimir::is_zero(x)) continue;
                    for (int j = 0; j < b.cols_; ++j) {
                        const T& y = b(k, j);
                        if (!casimir::is_zero(y)) r(i, j) = r(i, j) + x * y;
                    }
                }
            },
            exec);
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

   private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }
    void check_shape(const Matrix& b) const {
        require(rows_ == b.rows_ && cols_ == b.cols_, ErrorKind::DimensionMismatch, "matrix shapes differ");
    }

    int rows_ = 0, cols_ = 0;
    T zero_;
    std::vector<T> data_;
};

template <class T>
struct RrefResult {
    Matrix<T> reduced;
    int rank = 0;
    std::vector<int> pivots;
    /// Basis of the right kernel, one vector per free column in increasing order.
    std::vector<Vector<T>> kernel;
};

/// Reduced row echelon form with leading ones. Pivots are the first nonzero
/// entry at or below the current row, so the result is independent of the
/// execution policy; only the elimination sweep is parallel.
template <class T>
RrefResult<T> rref_and_kernel(Matrix<T> m, Exec exec = Exec::Automatic) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
        T inv = inverse(m(r, c));
        for (int j = c; j < cols; ++j)
            if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
        std::vector<int> targets;
        for (int i = 0; i < rows; ++i)
            if (i != r && !is_zero(m(i, c))) targets.push_back(i);
        const int pr = r;
        parallel_for(
            targets.size(),
            [&](std::size_t t) {
                int i = targets[t];
                T f = m(i, c);
                for (int j = c; j < cols; ++j) {
                    const T& y = m(pr, j);
                    if (!is_zero(y)) m(i, j) = m(i, j) - f * y;
                }
            },
            exec, 8);
        pivots.push_back(c);
        ++r;
    }
    RrefResult<T> out{m, r, pivots, {}};
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivots) is_pivot[c] = true;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector<T> v(static_cast<std::size_t>(cols), m.zero());
        v[f] = one_like(m.zero());
        for (int i = 0; i < r; ++i) v[pivots[i]] = -out.reduced(i, f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <class T>
int rank(const Matrix<T>& m, Exec exec = Exec::Automatic) {
    return rref_and_kernel(m, exec).rank;
}

template <class T>
std::optional<Matrix<T>> try_inverse(const Matrix<T>& m, Exec exec = Exec::Automatic) {
    require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const int n = m.rows();
    Matrix<T> aug(n, 2 * n, m.zero());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = one_like(m.zero());
    }
    auto rr = rref_and_kernel(std::move(aug), exec);
    if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix<T> inv(n, n, m.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m, Exec exec = Exec::Automatic) {
    auto inv = try_inverse(m, exec);
    if (!inv) fail(ErrorKind::Degenerate, "singular matrix");
    return *inv;
}

/// One solution of m x = b, or nullopt when inconsistent.
template <class T>
std::optional<Vector<T>> solve(const Matrix<T>& m, const Vector<T>& b, Exec exec = Exec::Automatic) {
    require(static_cast<int>(b.size()) == m.rows(), ErrorKind::DimensionMismatch, "right-hand side length");
    const int rows = m.rows(), cols = m.cols();
    Matrix<T> aug(rows, cols + 1, m.zero());
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug(i, j) = m(i, j);
        aug(i, cols) = b[i];
    }
    auto rr = rref_and_kernel(std::move(aug), exec);
    if (!rr.pivots.empty() && rr.pivots.back() == cols) return std::nullopt;
    Vector<T> x(static_cast<std::size_t>(cols), m.zero());
    for (int i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.reduced(i, cols);
    return x;
}

template <class T>
T trace(const Matrix<T>& m) {
    require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "trace of a non-square matrix");
    T t = m.zero();
    for (int i = 0; i < m.rows(); ++i) t = t + m(i, i);
    return t;
}

/// e_i (x) e_j sits at flat index i*b.rows() + j (rows) and likewise for columns.
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const T& x = a(i, j);
            if (is_zero(x)) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = x * b(p, q);
        }
    return k;
}

/// Incremental linear-dependence detector. Vectors are fed one at a time;
/// the first one lying in the span of its predecessors yields the relation
/// v_k = sum_j c_j v_j.
template <class T>
class KrylovRelation {
   public:
    explicit KrylovRelation(const T& proto) : zero_(zero_like(proto)) {}

    /// Returns false when v depends on the vectors added so far; the
    /// coefficients are then available from relation().
    bool add(const Vector<T>& v) {
        const std::size_t k = inputs_;
        Vector<T> w = v;
        Vector<T> combo(k + 1, zero_);
        combo[k] = one_like(zero_);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const T& f = w[pivot_[r]];
            if (is_zero(f)) continue;
            T s = f;
            for (std::size_t j = 0; j < w.size(); ++j)
                if (!is_zero(rows_[r][j])) w[j] = w[j] - s * rows_[r][j];
            for (std::size_t j = 0; j < combos_[r].size(); ++j)
                if (!is_zero(combos_[r][j])) combo[j] = combo[j] - s * combos_[r][j];
        }
        std::size_t p = 0;
        while (p < w.size() && is_zero(w[p])) ++p;
        ++inputs_;
        if (p == w.size()) {
            // w = combo . inputs = 0 and combo[k] = 1
            relation_.assign(k, zero_);
            for (std::size_t j = 0; j < k; ++j) relation_[j] = -combo[j];
            return false;
        }
        T inv = inverse(w[p]);
        for (auto& x : w) x = x * inv;
        for (auto& x : combo) x = x * inv;
        rows_.push_back(std::move(w));
        combos_.push_back(std::move(combo));
        pivot_.push_back(p);
        return true;
    }

    std::size_t size() const { return rows_.size(); }
    const Vector<T>& relation() const { return relation_; }

    /// Monic x^k - sum_j c_j x^j from the recorded relation.
    Polynomial<T> relation_polynomial() const {
        std::vector<T> c;
        for (const auto& r : relation_) c.push_back(-r);
        c.push_back(one_like(zero_));
        return Polynomial<T>(zero_, std::move(c));
    }

   private:
    T zero_;
    std::size_t inputs_ = 0;
    std::vector<Vector<T>> rows_, combos_;
    std::vector<std::size_t> pivot_;
    Vector<T> relation_;
};

template <class T>
Vector<T> evaluate_on_vector(const Polynomial<T>& p, const Matrix<T>& m, const Vector<T>& v) {
    Vector<T> acc(v.size(), m.zero());
    for (int i = p.degree(); i >= 0; --i) {
        acc = m.apply(acc);
        for (std::size_t j = 0; j < v.size(); ++j) acc[j] = acc[j] + p[i] * v[j];
    }
    return acc;
}

template <class T>
Matrix<T> evaluate(const Polynomial<T>& p, const Matrix<T>& m) {
    Matrix<T> acc(m.rows(), m.cols(), m.zero());
    Matrix<T> id = Matrix<T>::identity(m.rows(), m.zero());
    for (int i = p.degree(); i >= 0; --i) acc = acc * m + p[i] * id;
    return acc;
}

/// Least common multiple of the Krylov relations seeded at each standard basis
/// vector; vectors already killed by the running lcm are skipped.
template <class T>
Polynomial<T> minimal_polynomial(const Matrix<T>& m) {
    require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "minimal polynomial of a non-square matrix");
    const int n = m.rows();
    Polynomial<T> result = Polynomial<T>::constant(one_like(m.zero()));
    for (int s = 0; s < n; ++s) {
        Vector<T> e(static_cast<std::size_t>(n), m.zero());
        e[s] = one_like(m.zero());
        bool killed = true;
        for (const auto& x : evaluate_on_vector(result, m, e))
            if (!is_zero(x)) killed = false;
        if (killed) continue;
        KrylovRelation<T> kr(m.zero());
        Vector<T> v = e;
        while (kr.add(v)) v = m.apply(v);
        result = lcm(result, kr.relation_polynomial());
    }
    return result;
}

}  // namespace casimir
