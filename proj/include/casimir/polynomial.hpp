#pragma once

#include <string>
#include <utility>
#include <vector>

#include "casimir/scalar.hpp"

namespace casimir {

/// Dense univariate polynomial, coefficients stored low degree first and
/// always trimmed (no zero leading coefficient).
template <class T>
class Polynomial {
   public:
    explicit Polynomial(T zero) : zero_(std::move(zero)) {}
    Polynomial(T zero, std::vector<T> coeffs) : zero_(std::move(zero)), coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const T& c) { return Polynomial(zero_like(c), {c}); }
    static Polynomial monomial(const T& c, int degree) {
        std::vector<T> v(static_cast<std::size_t>(degree) + 1, zero_like(c));
        v.back() = c;
        return Polynomial(zero_like(c), std::move(v));
    }
    /// x - root
    static Polynomial linear(const T& root) { return Polynomial(zero_like(root), {-root, one_like(root)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<T>& coeffs() const { return coeffs_; }
    const T& zero() const { return zero_; }
    const T& operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : zero_;
    }
    const T& leading() const { return coeffs_.empty() ? zero_ : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == one_like(zero_); }

    T evaluate(const T& x) const {
        T acc = zero_;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        std::vector<T> d;
        for (int i = 1; i <= degree(); ++i) d.push_back(coeffs_[i] * from_integer(zero_, i));
        return Polynomial(zero_, std::move(d));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        T inv = inverse(leading());
        std::vector<T> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(c * inv);
        return Polynomial(zero_, std::move(v));
    }

    Polynomial operator-() const {
        std::vector<T> v;
        for (const auto& c : coeffs_) v.push_back(-c);
        return Polynomial(zero_, std::move(v));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), a.zero_);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] + b.coeffs_[i];
        return Polynomial(a.zero_, std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial(a.zero_);
        std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (casimir::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(a.zero_, std::move(v));
    }
    friend Polynomial operator*(const T& s, const Polynomial& p) {
        std::vector<T> v;
        for (const auto& c : p.coeffs_) v.push_back(s * c);
        return Polynomial(p.zero_, std::move(v));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Quotient and remainder; the divisor's leading coefficient must be invertible.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        require(!b.is_zero(), ErrorKind::DivisionByZero, "polynomial division by zero");
        std::vector<T> rem = a.coeffs_;
        int db = b.degree();
        if (a.degree() < db) return {Polynomial(a.zero_), a};
        std::vector<T> quo(static_cast<std::size_t>(a.degree() - db) + 1, a.zero_);
        T inv_lead = inverse(b.leading());
        for (int i = a.degree(); i >= db; --i) {
            if (casimir::is_zero(rem[i])) continue;
            T q = rem[i] * inv_lead;
            quo[i - db] = q;
            for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - q * b.coeffs_[j];
        }
        rem.resize(static_cast<std::size_t>(db));
        return {Polynomial(a.zero_, std::move(quo)), Polynomial(a.zero_, std::move(rem))};
    }

    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

   private:
    void trim() {
        while (!coeffs_.empty() && casimir::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    T zero_;
    std::vector<T> coeffs_;
};

/// Monic gcd over a field.
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Bezout data: g = s*a + t*b with g monic.
template <class T>
struct ExtendedGcd {
    Polynomial<T> g, s, t;
};

template <class T>
ExtendedGcd<T> extended_gcd(const Polynomial<T>& a, const Polynomial<T>& b) {
    const T& z = a.zero();
    Polynomial<T> r0 = a, r1 = b;
    Polynomial<T> s0 = Polynomial<T>::constant(one_like(z)), s1(z);
    Polynomial<T> t0(z), t1 = Polynomial<T>::constant(one_like(z));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial<T> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial<T> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    T inv = inverse(r0.leading());
    return {inv * r0, inv * s0, inv * t0};
}

template <class T>
Polynomial<T> lcm(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial<T>(a.zero());
    return ((a * b) / gcd(a, b)).monic();
}

/// base^exp mod m by square-and-multiply.
template <class T>
Polynomial<T> powmod(const Polynomial<T>& base, const Integer& exp, const Polynomial<T>& m) {
    Polynomial<T> result = Polynomial<T>::constant(one_like(base.zero())) % m;
    Polynomial<T> b = base % m;
    std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(exp.get_mpz_t(), i)) result = (result * b) % m;
    }
    return result;
}

/// Renders with variable name `var`, highest degree first, e.g. "x^2 - 2*x".
template <class T, class Fmt>
std::string format_polynomial(const Polynomial<T>& p, Fmt&& fmt, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        if (is_zero(p[i])) continue;
        std::string c = fmt(p[i]);
        bool neg = !c.empty() && c[0] == '-' && c.find_first_of("+ ", 1) == std::string::npos;
        if (neg) c = c.substr(1);
        bool composite = c.find_first_of("+- ") != std::string::npos;
        if (composite) c = "(" + c + ")";
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::string term;
        if (i == 0)
            term = c;
        else if (c == "1")
            term = mono;
        else
            term = c + "*" + mono;
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace casimir
