#pragma once

#include <vector>

#include "casimir/cyclotomic.hpp"
#include "casimir/padic.hpp"
#include "casimir/polynomial.hpp"

namespace casimir {

/// f / gcd(f, f'), monic.
template <class T>
Polynomial<T> squarefree_part(const Polynomial<T>& f) {
    if (f.degree() <= 0) return f.monic();
    Polynomial<T> g = gcd(f, f.derivative());
    return (f / g).monic();
}

/// Newton iteration a <- a - f(a)/f'(a) for a simple root, taking a root mod
/// p^m to a root mod p^(2m). `target` is the ring of precision 2m.
Residue newton_lift_root(const Polynomial<Cyclotomic>& f, const Residue& root, const ResidueRing& target);

/// All roots of f lying in Q(zeta_n), in canonical order. Roots are found
/// modulo an inert prime, Newton-lifted, rationally reconstructed and checked
/// exactly, so every returned value is a verified root.
std::vector<Cyclotomic> exact_roots(const Polynomial<Cyclotomic>& f, int max_precision = 64);

/// Smallest prime above `floor` that is inert for the conductor.
long next_inert_prime(long floor, int conductor);

}  // namespace casimir
