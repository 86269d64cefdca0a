#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "casimir/cyclotomic.hpp"
#include "casimir/polynomial.hpp"

namespace casimir {

bool is_prime(long n);
/// Smallest prime strictly greater than n.
long next_prime(long n);
/// Order of p in (Z/n)^*; requires gcd(p, n) = 1.
int multiplicative_order(long p, int n);
/// Phi_n stays irreducible modulo p, so Z[zeta_n]/p is the field F_{p^phi(n)}.
bool is_inert(long p, int conductor);

/// The ring (Z/p^m)[z]/Phi_n(z). For an inert prime and m = 1 this is the
/// finite field F_q with q = p^phi(n); for conductor 1 it is Z/p^m.
/// Interned per (p, m, conductor).
class ResidueRing {
   public:
    static const ResidueRing& get(long p, int precision, const CyclotomicField& field);

    long prime() const { return prime_; }
    int precision() const { return precision_; }
    const Integer& modulus() const { return modulus_; }
    const CyclotomicField& field() const { return *field_; }
    int degree() const { return field_->degree(); }
    /// p^phi(n): the size of the residue field.
    const Integer& residue_field_size() const { return field_size_; }

    /// Image of a p-integral rational; throws BadPrime when p divides the denominator.
    Integer reduce(const Rational& q) const;

    ResidueRing(const ResidueRing&) = delete;
    ResidueRing& operator=(const ResidueRing&) = delete;

   private:
    ResidueRing(long p, int precision, const CyclotomicField& field);

    long prime_;
    int precision_;
    Integer modulus_;
    Integer field_size_;
    const CyclotomicField* field_;
};

/// Element of a ResidueRing, coefficients in [0, p^m) on the power basis.
/// Used for both F_p / F_q arithmetic (precision 1) and p-adic lifting.
class Residue {
   public:
    Residue() = default;
    explicit Residue(const ResidueRing& ring);
    Residue(const ResidueRing& ring, std::vector<Integer> coeffs);
    Residue(const ResidueRing& ring, long value);

    static Residue reduce(const Cyclotomic& c, const ResidueRing& ring);

    const ResidueRing& ring() const { return *ring_; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    /// Same integer representatives viewed in another precision of the same (p, n).
    Residue lift_to(const ResidueRing& other) const;

    bool is_zero() const;
    /// Invertible iff the reduction mod p is nonzero (the ring is local for inert p).
    bool is_unit() const;
    Residue inverse() const;
    Residue operator-() const;

    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);
    friend bool operator==(const Residue& a, const Residue& b);
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

    /// Coefficientwise rational reconstruction at the ring's modulus.
    std::optional<Cyclotomic> reconstruct() const;
    std::string to_string() const;

   private:
    void normalize();
    void check_same(const Residue& b) const;

    const ResidueRing* ring_ = nullptr;
    std::vector<Integer> coeffs_;
};

template <>
struct ScalarTraits<Residue> {
    static Residue zero_like(const Residue& x) { return Residue(x.ring()); }
    static Residue one_like(const Residue& x) { return Residue(x.ring(), 1); }
    static Residue from_integer(const Residue& x, long v) { return Residue(x.ring(), v); }
    static bool is_zero(const Residue& x) { return x.is_zero(); }
    static Residue inverse(const Residue& x) { return x.inverse(); }
};

/// The unique a/b with |a|, b <= floor(sqrt(M/2)), gcd(b, M) = 1 and
/// a = b * residue (mod M), found by truncated extended Euclid; nullopt when
/// no such fraction exists (precision too low).
std::optional<Rational> rational_reconstruct(const Integer& residue, const Integer& modulus);

/// Deterministic random element of the residue field (precision-1 ring).
Residue random_residue(const ResidueRing& ring, std::mt19937_64& rng);

/// Distinct roots in F_q of a polynomial over the precision-1 ring of an inert prime.
std::vector<Residue> residue_field_roots(const Polynomial<Residue>& f, std::mt19937_64& rng);

/// Reduces every coefficient of an exact polynomial into `ring`.
Polynomial<Residue> reduce_polynomial(const Polynomial<Cyclotomic>& f, const ResidueRing& ring);

}  // namespace casimir
