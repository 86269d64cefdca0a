#include "casimir/padic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

namespace casimir {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long next_prime(long n) {
    long c = std::max(n + 1, 2L);
    while (!is_prime(c)) ++c;
    return c;
}

int multiplicative_order(long p, int n) {
    if (n == 1) return 1;
    require(std::gcd(p, static_cast<long>(n)) == 1, ErrorKind::InvalidInput, "order of a non-unit");
    long r = p % n;
    int k = 1;
    long acc = r;
    while (acc != 1 % n) {
        acc = (acc * r) % n;
        ++k;
    }
    return k;
}

bool is_inert(long p, int conductor) {
    if (!is_prime(p)) return false;
    if (conductor > 1 && conductor % p == 0) return false;
    return multiplicative_order(p, conductor) == euler_phi(conductor);
}

ResidueRing::ResidueRing(long p, int precision, const CyclotomicField& field)
    : prime_(p), precision_(precision), field_(&field) {
    mpz_ui_pow_ui(modulus_.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(precision));
    mpz_ui_pow_ui(field_size_.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(field.degree()));
}

const ResidueRing& ResidueRing::get(long p, int precision, const CyclotomicField& field) {
    require(p >= 2 && precision >= 1, ErrorKind::InvalidInput, "residue ring needs p >= 2 and precision >= 1");
    static std::mutex mu;
    static std::map<std::tuple<long, int, int>, std::unique_ptr<ResidueRing>> rings;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = rings[{p, precision, field.conductor()}];
    if (!slot) slot.reset(new ResidueRing(p, precision, field));
    return *slot;
}

Integer ResidueRing::reduce(const Rational& q) const {
    Integer den = q.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(prime_)))
        fail(ErrorKind::BadPrime, "denominator " + den.get_str() + " divisible by " + std::to_string(prime_));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
    Integer r = q.get_num() * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus_.get_mpz_t());
    return r;
}

Residue::Residue(const ResidueRing& ring) : ring_(&ring), coeffs_(static_cast<std::size_t>(ring.degree()), Integer(0)) {}

Residue::Residue(const ResidueRing& ring, std::vector<Integer> coeffs) : ring_(&ring), coeffs_(std::move(coeffs)) {
    require(static_cast<int>(coeffs_.size()) == ring.degree(), ErrorKind::Internal, "residue coefficient count");
    normalize();
}

Residue::Residue(const ResidueRing& ring, long value) : Residue(ring) {
    coeffs_[0] = value;
    normalize();
}

void Residue::normalize() {
    for (auto& c : coeffs_) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), ring_->modulus().get_mpz_t());
}

void Residue::check_same(const Residue& b) const {
    require(ring_ != nullptr && ring_ == b.ring_, ErrorKind::Internal, "residues from different rings");
}

Residue Residue::reduce(const Cyclotomic& c, const ResidueRing& ring) {
    require(c.field().conductor() == ring.field().conductor(), ErrorKind::ConductorMismatch,
            "reducing into a ring of another conductor");
    Residue r(ring);
    for (int i = 0; i < ring.degree(); ++i) r.coeffs_[static_cast<std::size_t>(i)] = ring.reduce(c.coeff(i));
    return r;
}

Residue Residue::lift_to(const ResidueRing& other) const {
    require(other.prime() == ring_->prime() && &other.field() == &ring_->field(), ErrorKind::Internal,
            "lift between incompatible residue rings");
    return Residue(other, coeffs_);
}

bool Residue::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Residue::is_unit() const {
    for (const auto& c : coeffs_)
        if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(ring_->prime()))) return true;
    return false;
}

Residue Residue::operator-() const {
    Residue r = *this;
    for (auto& c : r.coeffs_) c = -c;
    r.normalize();
    return r;
}

Residue operator+(const Residue& a, const Residue& b) {
    a.check_same(b);
    Residue r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] += b.coeffs_[i];
        if (r.coeffs_[i] >= a.ring_->modulus()) r.coeffs_[i] -= a.ring_->modulus();
    }
    return r;
}

Residue operator-(const Residue& a, const Residue& b) {
    a.check_same(b);
    Residue r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] -= b.coeffs_[i];
        if (r.coeffs_[i] < 0) r.coeffs_[i] += a.ring_->modulus();
    }
    return r;
}

Residue operator*(const Residue& a, const Residue& b) {
    a.check_same(b);
    const int d = a.ring_->degree();
    Residue r(*a.ring_);
    if (d == 1) {
        r.coeffs_[0] = a.coeffs_[0] * b.coeffs_[0];
        r.normalize();
        return r;
    }
    std::vector<Integer> prod(static_cast<std::size_t>(2 * d - 1), Integer(0));
    for (int i = 0; i < d; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; j < d; ++j) prod[static_cast<std::size_t>(i + j)] += a.coeffs_[i] * b.coeffs_[j];
    }
    const CyclotomicField& f = a.ring_->field();
    for (int k = 0; k < 2 * d - 1; ++k) {
        const Integer& c = prod[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (k < d) {
            r.coeffs_[k] += c;
            continue;
        }
        const auto& red = f.power(k);
        for (int j = 0; j < d; ++j)
            if (red[j] != 0) r.coeffs_[j] += c * red[j];
    }
    r.normalize();
    return r;
}

bool operator==(const Residue& a, const Residue& b) {
    a.check_same(b);
    return a.coeffs_ == b.coeffs_;
}

Residue Residue::inverse() const {
    const ResidueRing& ring = *ring_;
    if (ring.degree() == 1) {
        Residue r(ring);
        if (mpz_invert(r.coeffs_[0].get_mpz_t(), coeffs_[0].get_mpz_t(), ring.modulus().get_mpz_t()) == 0)
            fail(ErrorKind::DivisionByZero, "non-unit residue " + to_string());
        return r;
    }
    // invert modulo p through the polynomial Bezout identity over F_p, then Newton-lift
    const ResidueRing& fp = ResidueRing::get(ring.prime(), 1, CyclotomicField::rationals());
    Residue zero_p(fp);
    std::vector<Residue> a_mod, phi_mod;
    for (const auto& c : coeffs_) a_mod.emplace_back(fp, std::vector<Integer>{c});
    for (const auto& c : ring.field().modulus()) phi_mod.emplace_back(fp, std::vector<Integer>{c});
    auto eg = extended_gcd(Polynomial<Residue>(zero_p, a_mod), Polynomial<Residue>(zero_p, phi_mod));
    if (eg.g.degree() != 0) fail(ErrorKind::DivisionByZero, "non-unit residue " + to_string());
    std::vector<Integer> u0(static_cast<std::size_t>(ring.degree()), Integer(0));
    for (int i = 0; i <= eg.s.degree(); ++i) u0[static_cast<std::size_t>(i)] = eg.s[i].coeffs()[0];
    Residue u(ring, u0);
    Residue two(ring, 2);
    for (int reached = 1; reached < ring.precision(); reached *= 2) u = u * (two - *this * u);
    return u;
}

std::optional<Cyclotomic> Residue::reconstruct() const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        auto q = rational_reconstruct(c, ring_->modulus());
        if (!q) return std::nullopt;
        out.push_back(*q);
    }
    return Cyclotomic(ring_->field(), std::move(out));
}

std::string Residue::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out += (i ? ", " : "") + coeffs_[i].get_str();
    return out + "] mod " + std::to_string(ring_->prime()) + "^" + std::to_string(ring_->precision());
}

std::optional<Rational> rational_reconstruct(const Integer& residue, const Integer& modulus) {
    require(residue >= 0 && residue < modulus, ErrorKind::InvalidInput, "residue out of range");
    Integer half = modulus / 2;
    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    Integer r0 = modulus, r1 = residue;
    Integer t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Integer t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    Integer den = abs(t1);
    if (den == 0 || den > bound) return std::nullopt;
    Integer g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1) return std::nullopt;
    Integer num = sgn(t1) < 0 ? Integer(-r1) : r1;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Residue random_residue(const ResidueRing& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(0, ring.prime() - 1);
    std::vector<Integer> c;
    for (int i = 0; i < ring.degree(); ++i) c.emplace_back(dist(rng));
    return Residue(ring, std::move(c));
}

Polynomial<Residue> reduce_polynomial(const Polynomial<Cyclotomic>& f, const ResidueRing& ring) {
    std::vector<Residue> c;
    for (const auto& x : f.coeffs()) c.push_back(Residue::reduce(x, ring));
    return Polynomial<Residue>(Residue(ring), std::move(c));
}

namespace {

void split_linear_product(const Polynomial<Residue>& g, std::mt19937_64& rng, std::vector<Residue>& roots) {
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        roots.push_back(-(g[0] * inverse(g[1])));
        return;
    }
    const ResidueRing& ring = g.zero().ring();
    Integer half = (ring.residue_field_size() - 1) / 2;
    Residue one(ring, 1);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Residue delta = random_residue(ring, rng);
        Polynomial<Residue> shifted(g.zero(), {delta, one});
        Polynomial<Residue> w = powmod(shifted, half, g) - Polynomial<Residue>::constant(one);
        Polynomial<Residue> h = gcd(g, w);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_linear_product(h, rng, roots);
            split_linear_product((g / h).monic(), rng, roots);
            return;
        }
    }
    fail(ErrorKind::Internal, "equal-degree splitting did not converge");
}

}  // namespace

std::vector<Residue> residue_field_roots(const Polynomial<Residue>& f, std::mt19937_64& rng) {
    require(!f.is_zero(), ErrorKind::InvalidInput, "roots of the zero polynomial");
    const ResidueRing& ring = f.zero().ring();
    require(ring.precision() == 1 && ring.prime() != 2, ErrorKind::Internal, "root finding needs an odd residue field");
    Polynomial<Residue> fm = f.monic();
    if (fm.degree() <= 0) return {};
    Residue one(ring, 1);
    Polynomial<Residue> x = Polynomial<Residue>::monomial(one, 1);
    Polynomial<Residue> xq = powmod(x, ring.residue_field_size(), fm);
    Polynomial<Residue> g = gcd(fm, xq - x);
    std::vector<Residue> roots;
    split_linear_product(g, rng, roots);
    return roots;
}

}  // namespace casimir
