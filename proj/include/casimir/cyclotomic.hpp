#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "casimir/polynomial.hpp"
#include "casimir/rational.hpp"
#include "casimir/scalar.hpp"

namespace casimir {

/// Phi_n as integer coefficients, low degree first. Computed by exact
/// division of x^n - 1 by Phi_d for every proper divisor d of n.
std::vector<Integer> cyclotomic_polynomial(int n);

int euler_phi(int n);

/// Q(zeta_n) on the power basis 1, z, ..., z^(phi(n)-1). Instances are interned:
/// one per conductor for the lifetime of the process, so elements can hold a
/// plain pointer to their field.
class CyclotomicField {
   public:
    static const CyclotomicField& get(int conductor);
    static const CyclotomicField& rationals() { return get(1); }

    int conductor() const { return conductor_; }
    int degree() const { return degree_; }
    const std::vector<Integer>& modulus() const { return modulus_; }
    /// z^k reduced modulo Phi_n, for 0 <= k <= 2*degree - 2.
    const std::vector<Integer>& power(int k) const { return powers_[static_cast<std::size_t>(k)]; }

    CyclotomicField(const CyclotomicField&) = delete;
    CyclotomicField& operator=(const CyclotomicField&) = delete;

   private:
    explicit CyclotomicField(int conductor);

    int conductor_;
    int degree_;
    std::vector<Integer> modulus_;
    std::vector<std::vector<Integer>> powers_;
};

/// Exact element of Q(zeta_n). Immutable in spirit: every operation returns
/// a fresh value, and mixing conductors throws ConductorMismatch.
class Cyclotomic {
   public:
    Cyclotomic() = default;
    explicit Cyclotomic(const CyclotomicField& field);
    Cyclotomic(const CyclotomicField& field, const Rational& q);
    Cyclotomic(const CyclotomicField& field, std::vector<Rational> coeffs);

    static Cyclotomic zeta(const CyclotomicField& field, int power = 1);
    /// Accepts sums of terms "c", "c*z", "c*z^k", "z^k" with rational c; the
    /// result is reduced modulo Phi_n.
    static Cyclotomic parse(std::string_view text, const CyclotomicField& field);

    const CyclotomicField& field() const { return *field_; }
    bool has_field() const { return field_ != nullptr; }
    int conductor() const { return field_->conductor(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Constant term; meaningful when is_rational().
    const Rational& rational_value() const { return coeffs_[0]; }
    /// Every power-basis coefficient is an integer, i.e. the value lies in Z[zeta_n].
    bool is_algebraic_integer_coordinates() const;

    Cyclotomic inverse() const;
    Cyclotomic operator-() const;

    Cyclotomic& operator+=(const Cyclotomic& b);
    Cyclotomic& operator-=(const Cyclotomic& b);
    Cyclotomic& operator*=(const Cyclotomic& b);
    Cyclotomic& operator*=(const Rational& q);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
    friend Cyclotomic operator*(const Rational& q, Cyclotomic a) { return a *= q; }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Lexicographic on power-basis coefficients; the canonical tie-break order.
    friend int compare(const Cyclotomic& a, const Cyclotomic& b);

    /// "c0 + c1*z + c2*z^2" with zero terms dropped; "0" for zero.
    std::string to_string() const;

    /// Galois action z -> z^k, gcd(k, n) = 1.
    Cyclotomic galois(int k) const;

   private:
    void check_same(const Cyclotomic& b) const;

    const CyclotomicField* field_ = nullptr;
    std::vector<Rational> coeffs_;
};

std::string to_string(const Cyclotomic& c);

/// Image of c under Q(zeta_n) -> Q(zeta_m), zeta_n -> zeta_m^(m/n); needs n | m.
Cyclotomic embed(const Cyclotomic& c, const CyclotomicField& to);

template <>
struct ScalarTraits<Cyclotomic> {
    static Cyclotomic zero_like(const Cyclotomic& x) { return Cyclotomic(x.field()); }
    static Cyclotomic one_like(const Cyclotomic& x) { return Cyclotomic(x.field(), Rational(1)); }
    static Cyclotomic from_integer(const Cyclotomic& x, long v) { return Cyclotomic(x.field(), Rational(v)); }
    static bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
    static Cyclotomic inverse(const Cyclotomic& x) { return x.inverse(); }
};

}  // namespace casimir
