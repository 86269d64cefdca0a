#include "casimir/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>

namespace casimir {

namespace {

using RatPoly = Polynomial<Rational>;

RatPoly to_ratpoly(const std::vector<Integer>& v) {
    std::vector<Rational> c(v.begin(), v.end());
    return RatPoly(Rational(0), std::move(c));
}

RatPoly to_ratpoly(const std::vector<Rational>& v) { return RatPoly(Rational(0), v); }

}  // namespace

int euler_phi(int n) {
    require(n >= 1, ErrorKind::InvalidInput, "conductor must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<Integer> cyclotomic_polynomial(int n) {
    require(n >= 1, ErrorKind::InvalidInput, "cyclotomic_polynomial needs n >= 1");
    static std::mutex mu;
    static std::map<int, std::vector<Integer>> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    std::vector<Rational> xn(static_cast<std::size_t>(n) + 1, Rational(0));
    xn[0] = -1;
    xn[static_cast<std::size_t>(n)] = 1;
    RatPoly p = to_ratpoly(xn);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = divmod(p, to_ratpoly(cyclotomic_polynomial(d)));
        require(r.is_zero(), ErrorKind::Internal, "inexact cyclotomic division");
        p = q;
    }
    std::vector<Integer> out;
    for (const auto& c : p.coeffs()) {
        require(is_integer(c), ErrorKind::Internal, "non-integral cyclotomic coefficient");
        out.push_back(c.get_num());
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(n, out);
    return out;
}

CyclotomicField::CyclotomicField(int conductor)
    : conductor_(conductor), degree_(euler_phi(conductor)), modulus_(cyclotomic_polynomial(conductor)) {
    RatPoly phi = to_ratpoly(modulus_);
    int top = std::max(2 * degree_ - 2, 0);
    for (int k = 0; k <= top; ++k) {
        std::vector<Rational> mono(static_cast<std::size_t>(k) + 1, Rational(0));
        mono.back() = 1;
        RatPoly r = to_ratpoly(mono) % phi;
        std::vector<Integer> row(static_cast<std::size_t>(degree_), Integer(0));
        for (int i = 0; i <= r.degree(); ++i) row[static_cast<std::size_t>(i)] = r[i].get_num();
        powers_.push_back(std::move(row));
    }
}

const CyclotomicField& CyclotomicField::get(int conductor) {
    require(conductor >= 1, ErrorKind::InvalidInput, "conductor must be positive");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CyclotomicField>> fields;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = fields[conductor];
    if (!slot) slot.reset(new CyclotomicField(conductor));
    return *slot;
}

Cyclotomic::Cyclotomic(const CyclotomicField& field)
    : field_(&field), coeffs_(static_cast<std::size_t>(field.degree()), Rational(0)) {}

Cyclotomic::Cyclotomic(const CyclotomicField& field, const Rational& q) : Cyclotomic(field) { coeffs_[0] = q; }

Cyclotomic::Cyclotomic(const CyclotomicField& field, std::vector<Rational> coeffs) : field_(&field) {
    if (static_cast<int>(coeffs.size()) <= field.degree()) {
        coeffs.resize(static_cast<std::size_t>(field.degree()), Rational(0));
        coeffs_ = std::move(coeffs);
    } else {
        RatPoly r = to_ratpoly(coeffs) % to_ratpoly(field.modulus());
        coeffs_.assign(static_cast<std::size_t>(field.degree()), Rational(0));
        for (int i = 0; i <= r.degree(); ++i) coeffs_[static_cast<std::size_t>(i)] = r[i];
    }
}

Cyclotomic Cyclotomic::zeta(const CyclotomicField& field, int power) {
    int n = field.conductor();
    int k = ((power % n) + n) % n;
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
    c.back() = 1;
    return Cyclotomic(field, std::move(c));
}

void Cyclotomic::check_same(const Cyclotomic& b) const {
    require(field_ != nullptr && b.field_ != nullptr, ErrorKind::Internal, "uninitialized cyclotomic value");
    if (field_ != b.field_)
        fail(ErrorKind::ConductorMismatch, "conductors " + std::to_string(field_->conductor()) + " and " +
                                               std::to_string(b.field_->conductor()));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return false;
    return true;
}

bool Cyclotomic::is_algebraic_integer_coordinates() const {
    for (const auto& c : coeffs_)
        if (!is_integer(c)) return false;
    return true;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
    check_same(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& b) {
    check_same(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& b) { return *this = *this * b; }

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
    for (auto& c : coeffs_) c *= q;
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    const CyclotomicField& f = *a.field_;
    const int d = f.degree();
    if (d == 1) {
        Cyclotomic r(f);
        r.coeffs_[0] = a.coeffs_[0] * b.coeffs_[0];
        return r;
    }
    std::vector<Rational> prod(static_cast<std::size_t>(2 * d - 1), Rational(0));
    bool any = false;
    for (int i = 0; i < d; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            prod[static_cast<std::size_t>(i + j)] += a.coeffs_[i] * b.coeffs_[j];
            any = true;
        }
    }
    Cyclotomic r(f);
    if (!any) return r;
    for (int k = 0; k < 2 * d - 1; ++k) {
        const Rational& c = prod[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        if (k < d) {
            r.coeffs_[k] += c;
            continue;
        }
        const auto& red = f.power(k);
        for (int j = 0; j < d; ++j)
            if (red[j] != 0) r.coeffs_[j] += c * red[j];
    }
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    return a.coeffs_ == b.coeffs_;
}

int compare(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

Cyclotomic Cyclotomic::inverse() const {
    require(field_ != nullptr, ErrorKind::Internal, "uninitialized cyclotomic value");
    require(!is_zero(), ErrorKind::DivisionByZero, "inverse of cyclotomic zero");
    if (field_->degree() == 1) return Cyclotomic(*field_, Rational(1) / coeffs_[0]);
    auto eg = extended_gcd(to_ratpoly(coeffs_), to_ratpoly(field_->modulus()));
    require(eg.g.degree() == 0, ErrorKind::Internal, "cyclotomic polynomial not coprime to element");
    std::vector<Rational> c(eg.s.coeffs().begin(), eg.s.coeffs().end());
    return Cyclotomic(*field_, std::move(c));
}

Cyclotomic Cyclotomic::galois(int k) const {
    int n = field_->conductor();
    Cyclotomic r(*field_);
    for (int i = 0; i < field_->degree(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        r += zeta(*field_, static_cast<int>((static_cast<long>(i) * k) % n)) * coeffs_[i];
    }
    return r;
}

std::string Cyclotomic::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        std::string term;
        if (i == 0) {
            term = casimir::to_string(c);
        } else {
            std::string mono = i == 1 ? "z" : "z^" + std::to_string(i);
            if (c == 1)
                term = mono;
            else if (c == -1)
                term = "-" + mono;
            else
                term = casimir::to_string(c) + "*" + mono;
        }
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

std::string to_string(const Cyclotomic& c) { return c.to_string(); }

Cyclotomic Cyclotomic::parse(std::string_view text, const CyclotomicField& field) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) fail(ErrorKind::InvalidInput, "empty scalar string");
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^' && s[i - 1] != '*' && s[i - 1] != '/') {
            terms.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    terms.push_back(s.substr(start));

    std::vector<Rational> acc;
    for (std::string term : terms) {
        bool negative = false;
        if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            negative = term[0] == '-';
            term.erase(0, 1);
        }
        if (term.empty()) fail(ErrorKind::InvalidInput, "dangling sign in '" + std::string(text) + "'");
        Rational coef(1);
        long power = 0;
        auto zpos = term.find('z');
        if (zpos == std::string::npos) {
            coef = parse_rational(term);
        } else {
            std::string zpart = term.substr(zpos);
            if (zpos > 0) {
                if (term[zpos - 1] != '*') fail(ErrorKind::InvalidInput, "expected '*' before z in '" + term + "'");
                coef = parse_rational(term.substr(0, zpos - 1));
            }
            if (zpart == "z") {
                power = 1;
            } else if (zpart.size() > 2 && zpart[1] == '^') {
                std::string e = zpart.substr(2);
                for (char ch : e)
                    if (!std::isdigit(static_cast<unsigned char>(ch)))
                        fail(ErrorKind::InvalidInput, "bad exponent in '" + term + "'");
                power = std::stol(e);
            } else {
                fail(ErrorKind::InvalidInput, "malformed term '" + term + "'");
            }
        }
        if (negative) coef = -coef;
        if (static_cast<long>(acc.size()) <= power) acc.resize(static_cast<std::size_t>(power) + 1, Rational(0));
        acc[static_cast<std::size_t>(power)] += coef;
    }
    if (field.degree() == 1 && acc.size() > 1) {
        // conductor 1 has no z; conductor 2 reduces z to -1
        if (field.conductor() == 1) fail(ErrorKind::InvalidInput, "rational field has no z in '" + std::string(text) + "'");
    }
    return Cyclotomic(field, std::move(acc));
}

Cyclotomic embed(const Cyclotomic& c, const CyclotomicField& to) {
    const CyclotomicField& from = c.field();
    require(to.conductor() % from.conductor() == 0, ErrorKind::ConductorMismatch,
            "conductor " + std::to_string(to.conductor()) + " is not a multiple of " + std::to_string(from.conductor()));
    const int step = to.conductor() / from.conductor();
    Cyclotomic out(to);
    for (int i = 0; i < from.degree(); ++i)
        if (sgn(c.coeff(i)) != 0) out += Cyclotomic::zeta(to, step * i) * Cyclotomic(to, c.coeff(i));
    return out;
}

}  // namespace casimir
