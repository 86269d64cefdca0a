#include "casimir/roots.hpp"

#include <algorithm>

namespace casimir {

namespace {

bool has_primitive_root(int n) {
    if (n <= 4) return true;
    int m = n % 2 == 0 ? n / 2 : n;
    if (m % 2 == 0) return false;
    int q = 3;
    while (m % q != 0) q += 2;
    while (m % q == 0) m /= q;
    return m == 1;
}

}  // namespace

long next_inert_prime(long floor, int conductor) {
    if (!has_primitive_root(conductor))
        fail(ErrorKind::BadPrime, "no inert prime for conductor " + std::to_string(conductor) +
                                      " (the unit group mod n is not cyclic)");
    long p = floor;
    for (int guard = 0; guard < 100000; ++guard) {
        p = next_prime(p);
        if (p > 2 && is_inert(p, conductor)) return p;
    }
    fail(ErrorKind::BadPrime, "no inert prime for conductor " + std::to_string(conductor) +
                                  " (the unit group mod n is not cyclic)");
}

Residue newton_lift_root(const Polynomial<Cyclotomic>& f, const Residue& root, const ResidueRing& target) {
    Polynomial<Residue> g = reduce_polynomial(f, target);
    Residue a = root.lift_to(target);
    return a - g.evaluate(a) * inverse(g.derivative().evaluate(a));
}

std::vector<Cyclotomic> exact_roots(const Polynomial<Cyclotomic>& f, int max_precision) {
    require(!f.is_zero(), ErrorKind::InvalidInput, "roots of the zero polynomial");
    Polynomial<Cyclotomic> g = squarefree_part(f);
    std::vector<Cyclotomic> out;
    if (g.degree() <= 0) return out;
    if (g.degree() == 1) return {-g[0]};
    const CyclotomicField& field = g.zero().field();
    long p = std::max<long>(2L * g.degree() + 20, 60);
    for (int attempt = 0; attempt < 8; ++attempt) {
        p = next_inert_prime(p, field.conductor());
        const ResidueRing& r1 = ResidueRing::get(p, 1, field);
        Polynomial<Residue> gb{Residue(r1)};
        try {
            gb = reduce_polynomial(g, r1);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::BadPrime) continue;
            throw;
        }
        if (gb.degree() != g.degree() || gcd(gb, gb.derivative()).degree() > 0) continue;
        std::mt19937_64 rng(static_cast<std::uint64_t>(p));
        for (const Residue& r0 : residue_field_roots(gb, rng)) {
            Residue a = r0;
            for (int m = 1;;) {
                if (auto beta = a.reconstruct(); beta && g.evaluate(*beta).is_zero()) {
                    out.push_back(*beta);
                    break;
                }
                if (m >= max_precision) break;
                m *= 2;
                a = newton_lift_root(g, a, ResidueRing::get(p, m, field));
            }
        }
        std::sort(out.begin(), out.end(), [](const Cyclotomic& x, const Cyclotomic& y) { return compare(x, y) < 0; });
        return out;
    }
    fail(ErrorKind::BadPrime, "no usable prime for root finding");
}

}  // namespace casimir
