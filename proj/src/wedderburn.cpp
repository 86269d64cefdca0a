#include "casimir/wedderburn.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "casimir/roots.hpp"

namespace casimir {

// ---- generic corner-algebra splitting ---------------------------------------

namespace {

template <class T>
int corner_dimension(const BasicAlgebra<T>& A, const Vector<T>& f) {
    return rank(multiply(A.left_matrix(f), A.right_matrix(f), Exec::Automatic));
}

/// Minimal polynomial of b inside fAf, whose unit is f.
template <class T>
Polynomial<T> corner_minimal_polynomial(const BasicAlgebra<T>& A, const Vector<T>& f, const Vector<T>& b) {
    KrylovRelation<T> kr(A.zero());
    Vector<T> v = f;
    while (kr.add(v)) v = A.multiply(v, b);
    return kr.relation_polynomial();
}

template <class T>
Vector<T> evaluate_in_corner(const BasicAlgebra<T>& A, const Vector<T>& f, const Polynomial<T>& p, const Vector<T>& b) {
    Vector<T> acc = A.zero_element();
    for (int i = p.degree(); i >= 0; --i) acc = A.multiply(acc, b) + scale(p[i], f);
    return acc;
}

/// Splits f = f1 + f2 along the generalized eigenspace of one root of the
/// minimal polynomial of b in fAf, when b has at least two eigenvalues and one
/// of them is found by `roots`.
template <class T, class Roots>
std::optional<std::pair<Vector<T>, Vector<T>>> split_corner(const BasicAlgebra<T>& A, const Vector<T>& f,
                                                            const Vector<T>& b, Roots&& roots) {
    Polynomial<T> m = corner_minimal_polynomial(A, f, b);
    if (m.degree() <= 1) return std::nullopt;
    for (const T& beta : roots(m)) {
        Polynomial<T> lin = Polynomial<T>::linear(beta);
        Polynomial<T> power = Polynomial<T>::constant(one_like(beta));
        Polynomial<T> h = m;
        while (h.degree() > 0) {
            auto [q, r] = divmod(h, lin);
            if (!r.is_zero()) break;
            h = q;
            power = power * lin;
        }
        if (h.degree() <= 0 || power.degree() == 0) continue;
        auto eg = extended_gcd(power, h);
        if (eg.g.degree() != 0) continue;
        Vector<T> e1 = evaluate_in_corner(A, f, eg.t * h, b);
        return std::make_pair(e1, f - e1);
    }
    return std::nullopt;
}

/// Descends from e to an idempotent f <= e with dim fAf = 1. Candidates are
/// compressions f c f for c drawn from `candidate(i)`.
template <class T, class Roots>
std::optional<Vector<T>> find_primitive(const BasicAlgebra<T>& A, const Vector<T>& e, Roots&& roots,
                                        const std::function<Vector<T>(int)>& candidate, int count) {
    Vector<T> f = e;
    int dim = corner_dimension(A, f);
    while (dim > 1) {
        bool progressed = false;
        for (int i = 0; i < count && !progressed; ++i) {
            Vector<T> b = A.multiply(A.multiply(f, candidate(i)), f);
            auto parts = split_corner(A, f, b, roots);
            if (!parts) continue;
            int d1 = corner_dimension(A, parts->first), d2 = corner_dimension(A, parts->second);
            if (d1 == 0 || d2 == 0) continue;
            if (d1 <= d2) {
                f = parts->first;
                dim = d1;
            } else {
                f = parts->second;
                dim = d2;
            }
            progressed = true;
        }
        if (!progressed) return std::nullopt;
    }
    return dim == 1 ? std::optional<Vector<T>>(f) : std::nullopt;
}

int exact_sqrt(int v) {
    int r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v ? r : -1;
}

Residue reduce_scalar(const Cyclotomic& c, const ResidueRing& ring) { return Residue::reduce(c, ring); }

ModularAlgebra reduce_algebra(const Algebra& A, const ResidueRing& ring) {
    return A.map_scalars(Residue(ring), [&](const Cyclotomic& c) { return reduce_scalar(c, ring); });
}

ModElement reduce_element(const Element& a, const ResidueRing& ring) {
    ModElement out;
    for (const auto& c : a) out.push_back(reduce_scalar(c, ring));
    return out;
}

CMatrix chi_gram(const Algebra& A) {
    Element chi = regular_character(A);
    const int n = A.dim();
    CMatrix g(n, n, A.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : A.product(i, j))
                if (!chi[k].is_zero()) g(i, j) += c * chi[k];
    return g;
}

CMatrix center_gram(const Algebra& A, const CenterData& Z) {
    Element chi = regular_character(A);
    const int r = static_cast<int>(Z.basis.size());
    CMatrix g(r, r, A.zero());
    for (int s = 0; s < r; ++s)
        for (int t = 0; t < r; ++t) g(s, t) = evaluate(chi, A.multiply(Z.basis[s], Z.basis[t]));
    return g;
}

Matrix<Residue> reduce_matrix(const CMatrix& m, const ResidueRing& ring) {
    Matrix<Residue> out(m.rows(), m.cols(), Residue(ring));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = reduce_scalar(m(i, j), ring);
    return out;
}

}  // namespace

// ---- WedderburnData -------------------------------------------------------------

bool WedderburnData::all_split() const {
    return std::all_of(split_certified.begin(), split_certified.end(), [](bool b) { return b; });
}

bool WedderburnData::same_decomposition(const WedderburnData& o) const {
    return idempotents == o.idempotents && degrees == o.degrees && characters == o.characters &&
           split_certified == o.split_certified && primitive_idempotents == o.primitive_idempotents;
}

// ---- center -------------------------------------------------------------------

Element CenterData::to_algebra(const Element& coords) const {
    Element out = zero_vector(basis.front().size(), algebra.zero());
    for (std::size_t t = 0; t < basis.size(); ++t)
        if (!coords[t].is_zero()) out = out + scale(coords[t], basis[t]);
    return out;
}

Element CenterData::coordinates(const Element& central) const {
    Element c;
    for (int p : pivots) c.push_back(central[p]);
    return c;
}

CenterData center_data(const Algebra& A) {
    std::vector<Element> basis = center_basis(A);
    require(!basis.empty(), ErrorKind::Internal, "empty center");
    std::vector<int> piv = echelon_pivots(basis);
    const int r = static_cast<int>(basis.size());
    std::vector<std::tuple<int, int, int, Cyclotomic>> entries;
    for (int s = 0; s < r; ++s)
        for (int t = 0; t < r; ++t) {
            Element prod = A.multiply(basis[s], basis[t]);
            for (int u = 0; u < r; ++u)
                if (!prod[piv[u]].is_zero()) entries.emplace_back(s, t, u, prod[piv[u]]);
        }
    Element unit;
    for (int p : piv) unit.push_back(A.unit()[p]);
    Algebra Z = Algebra::from_triples(r, A.zero(), entries, unit);
    return CenterData{std::move(basis), std::move(piv), std::move(Z)};
}

// ---- primes ---------------------------------------------------------------------

bool is_good_prime(const Algebra& A, const CenterData& Z, long p, std::string* reason) {
    auto why = [&](const std::string& s) {
        if (reason) *reason = s;
        return false;
    };
    const int n = A.dim();
    const int conductor = A.zero().conductor();
    if (!is_prime(p) || p == 2) return why("not an odd prime");
    if (!is_inert(p, conductor)) return why("not inert for conductor " + std::to_string(conductor));
    if (n % p == 0) return why("divides dim A");
    const ResidueRing& r1 = ResidueRing::get(p, 1, A.zero().field());
    try {
        reduce_algebra(A, r1);
        reduce_algebra(Z.algebra, r1);
        for (const auto& z : Z.basis) reduce_element(z, r1);
        if (rank(reduce_matrix(chi_gram(A), r1)) != n) return why("Gram matrix of chi_reg is singular mod p");
        if (rank(reduce_matrix(center_gram(A, Z), r1)) != static_cast<int>(Z.basis.size()))
            return why("trace form on the center is singular mod p");
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::BadPrime) return why("a structure constant is not p-integral");
        throw;
    }
    return true;
}

std::vector<long> good_primes(const Algebra& A, int count, long floor) {
    CenterData Z = center_data(A);
    std::vector<long> out;
    long p = std::max<long>(2L * A.dim(), floor);
    for (int guard = 0; static_cast<int>(out.size()) < count && guard < 1000; ++guard) {
        p = next_inert_prime(p, A.zero().conductor());
        if (is_good_prime(A, Z, p)) out.push_back(p);
    }
    return out;
}

// ---- semisimplicity -------------------------------------------------------------

void certify_semisimple(const Algebra& A) {
    auto rr = rref_and_kernel(chi_gram(A));
    if (!rr.kernel.empty())
        fail(ErrorKind::NotSemisimple,
             "Gram matrix of chi_reg is singular; radical witness " + describe_element(rr.kernel.front()));
}

// ---- modular stage --------------------------------------------------------------

ModElement hensel_lift_idempotent(const ModularAlgebra& target, const ModElement& e) {
    const ResidueRing& ring = target.zero().ring();
    ModElement x;
    for (const auto& c : e) x.push_back(c.lift_to(ring));
    ModElement x2 = target.multiply(x, x);
    ModElement x3 = target.multiply(x2, x);
    return scale(Residue(ring, 3), x2) - scale(Residue(ring, 2), x3);
}

ModularSplit modular_split(const Algebra& A, const CenterData& Z, long p, std::uint64_t seed) {
    std::string reason;
    if (!is_good_prime(A, Z, p, &reason)) fail(ErrorKind::BadPrime, "prime " + std::to_string(p) + ": " + reason);
    const ResidueRing& r1 = ResidueRing::get(p, 1, A.zero().field());
    ModularAlgebra Ap = reduce_algebra(A, r1);
    ModularAlgebra Zp = reduce_algebra(Z.algebra, r1);
    const int r = Zp.dim();
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(p));

    std::vector<Residue> roots;
    ModElement z;
    bool found = false;
    for (int attempt = 0; attempt < 40 && !found; ++attempt) {
        z.clear();
        for (int t = 0; t < r; ++t) z.push_back(random_residue(r1, rng));
        Polynomial<Residue> m = element_minimal_polynomial(Zp, z);
        if (m.degree() != r || gcd(m, m.derivative()).degree() > 0) continue;
        roots = residue_field_roots(m, rng);
        if (static_cast<int>(roots.size()) != r)
            fail(ErrorKind::NonSplitCenter, "the center does not split over the residue field of " + std::to_string(p));
        found = true;
    }
    if (!found) fail(ErrorKind::BadPrime, "no separating central element mod " + std::to_string(p));

    ModularSplit out;
    out.prime = p;
    std::vector<ModElement> zbasis;
    for (const auto& b : Z.basis) zbasis.push_back(reduce_element(b, r1));
    for (int i = 0; i < r; ++i) {
        ModElement e = Zp.unit();
        for (int j = 0; j < r; ++j) {
            if (j == i) continue;
            Residue den = inverse(roots[i] - roots[j]);
            e = scale(den, Zp.multiply(e, z - Zp.scalar(roots[j])));
        }
        ModElement ea = Ap.zero_element();
        for (int t = 0; t < r; ++t) ea = ea + scale(e[t], zbasis[t]);
        int block = rank(Ap.left_matrix(ea));
        int d = exact_sqrt(block);
        if (d <= 0) fail(ErrorKind::BadPrime, "block of dimension " + std::to_string(block) + " mod " + std::to_string(p));
        out.central.push_back(std::move(e));
        out.degrees.push_back(d);
        auto rootfn = [&](const Polynomial<Residue>& m) { return residue_field_roots(m, rng); };
        std::function<ModElement(int)> cand = [&](int k) {
            if (k < Ap.dim()) return Ap.basis(k);
            ModElement v;
            for (int t = 0; t < Ap.dim(); ++t) v.push_back(random_residue(r1, rng));
            return v;
        };
        auto f = d == 1 ? std::optional<ModElement>(ea) : find_primitive(Ap, ea, rootfn, cand, Ap.dim() + 60);
        out.primitive.push_back(f ? *f : ModElement{});
        out.idempotents.push_back(std::move(ea));
    }
    int total = 0;
    for (int d : out.degrees) total += d * d;
    if (total != A.dim()) fail(ErrorKind::BadPrime, "block dimensions do not add up mod " + std::to_string(p));
    return out;
}

// ---- exact pipeline -------------------------------------------------------------

namespace {

bool verify_central_family(const Algebra& Zc, const std::vector<Element>& es) {
    Element sum = Zc.zero_element();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (is_zero_vector(es[i]) || Zc.multiply(es[i], es[i]) != es[i]) return false;
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (!is_zero_vector(Zc.multiply(es[i], es[j]))) return false;
        sum = sum + es[i];
        // primitive in Z(A): Z e is spanned by e
        std::vector<Element> ze;
        for (int t = 0; t < Zc.dim(); ++t) ze.push_back(Zc.multiply(Zc.basis(t), es[i]));
        if (span_dimension(ze, Zc.dim(), Zc.zero()) != 1) return false;
    }
    return sum == Zc.unit();
}

struct LiftResult {
    std::vector<Element> central;
    int precision;
};

std::optional<LiftResult> lift_and_reconstruct(const CenterData& Z, const ModularSplit& ms, int max_precision) {
    const CyclotomicField& field = Z.algebra.zero().field();
    std::vector<ModElement> es = ms.central;
    for (int m = 1;;) {
        std::vector<Element> exact;
        bool ok = true;
        for (const auto& e : es) {
            Element c;
            for (const auto& x : e) {
                auto q = x.reconstruct();
                if (!q) {
                    ok = false;
                    break;
                }
                c.push_back(*q);
            }
            if (!ok) break;
            exact.push_back(std::move(c));
        }
        if (ok && verify_central_family(Z.algebra, exact)) return LiftResult{std::move(exact), m};
        if (m >= max_precision) return std::nullopt;
        m *= 2;
        ModularAlgebra target = reduce_algebra(Z.algebra, ResidueRing::get(ms.prime, m, field));
        for (auto& e : es) e = hensel_lift_idempotent(target, e);
    }
}

}  // namespace

std::vector<Element> irreducible_characters(const Algebra& A, const WedderburnData& W) {
    Element chi = regular_character(A);
    std::vector<Element> out;
    for (std::size_t s = 0; s < W.size(); ++s) {
        if (!W.split_certified[s]) {
            out.emplace_back();
            continue;
        }
        require(W.degrees[s] > 0, ErrorKind::Internal, "zero degree");
        Rational inv(1, W.degrees[s]);
        Element c;
        for (int i = 0; i < A.dim(); ++i) c.push_back(evaluate(chi, A.multiply(A.basis(i), W.idempotents[s])) * inv);
        Cyclotomic deg(A.zero().field(), Rational(W.degrees[s]));
        require(evaluate(c, A.unit()) == deg, ErrorKind::Internal, "chi_S(1) != d(S)");
        for (std::size_t t = 0; t < W.size(); ++t)
            require(evaluate(c, W.idempotents[t]) == (s == t ? deg : A.zero()), ErrorKind::Internal,
                    "chi_S(e(T)) != [S = T] d(S)");
        out.push_back(std::move(c));
    }
    return out;
}

WedderburnData central_primitive_idempotents(const Algebra& A, const WedderburnOptions& opts) {
    certify_semisimple(A);
    CenterData Z = center_data(A);

    std::vector<long> primes;
    if (opts.prime) {
        primes.push_back(*opts.prime);
    } else {
        long p = std::max<long>(2L * A.dim(), opts.prime_floor);
        for (int guard = 0; static_cast<int>(primes.size()) < 1 + opts.fallback_primes && guard < 200; ++guard) {
            p = next_inert_prime(p, A.zero().conductor());
            if (is_good_prime(A, Z, p)) primes.push_back(p);
        }
        require(!primes.empty(), ErrorKind::BadPrime, "no good prime found");
    }

    std::optional<ModularSplit> ms;
    std::optional<LiftResult> lifted;
    for (long p : primes) {
        ms = modular_split(A, Z, p, opts.seed);
        lifted = lift_and_reconstruct(Z, *ms, opts.max_precision);
        if (lifted) break;
    }
    if (!lifted)
        fail(ErrorKind::PrecisionExceeded, "central idempotents did not reconstruct at p^" +
                                               std::to_string(opts.max_precision) + " for any of " +
                                               std::to_string(primes.size()) + " primes");

    // match exact idempotents to the modular blocks for the degree fallback
    const ResidueRing& r1 = ResidueRing::get(ms->prime, 1, A.zero().field());
    WedderburnData W;
    W.prime_used = ms->prime;
    W.precision_used = lifted->precision;
    std::mt19937_64 rng(opts.seed);
    for (const auto& coords : lifted->central) {
        Element e = Z.to_algebra(coords);
        ModElement er = reduce_element(coords, r1);
        int mod_degree = -1;
        for (std::size_t b = 0; b < ms->central.size(); ++b)
            if (ms->central[b] == er) mod_degree = ms->degrees[b];
        require(mod_degree > 0, ErrorKind::Internal, "lifted idempotent does not reduce to a modular block");
        const int block = rank(A.left_matrix(e));
        auto rootfn = [](const Polynomial<Cyclotomic>& m) { return exact_roots(m); };
        std::function<Element(int)> cand = [&](int k) {
            if (k < A.dim()) return A.basis(k);
            return random_element(A, rng, 2);
        };
        std::optional<Element> f =
            mod_degree == 1 ? std::optional<Element>(e) : find_primitive(A, e, rootfn, cand, A.dim() + opts.random_candidates);
        if (f) {
            int d = rank(A.right_matrix(*f));
            require(d * d == block && d == mod_degree, ErrorKind::Internal,
                    "split certificate gives degree " + std::to_string(d) + " but the block has dimension " +
                        std::to_string(block) + " and modular degree " + std::to_string(mod_degree));
        }
        W.idempotents.push_back(std::move(e));
        W.degrees.push_back(mod_degree);
        W.split_certified.push_back(f.has_value());
        W.primitive_idempotents.push_back(f ? *f : Element{});
    }
    W.characters = irreducible_characters(A, W);

    std::vector<std::size_t> order(W.size());
    std::iota(order.begin(), order.end(), 0);
    auto lex = [](const Element& a, const Element& b) {
        for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
            if (int c = compare(a[i], b[i]); c != 0) return c;
        return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (W.degrees[a] != W.degrees[b]) return W.degrees[a] < W.degrees[b];
        if (int c = lex(W.characters[a], W.characters[b]); c != 0) return c < 0;
        return lex(W.idempotents[a], W.idempotents[b]) < 0;
    });
    WedderburnData S;
    S.prime_used = W.prime_used;
    S.precision_used = W.precision_used;
    for (std::size_t i : order) {
        S.idempotents.push_back(W.idempotents[i]);
        S.degrees.push_back(W.degrees[i]);
        S.characters.push_back(W.characters[i]);
        S.split_certified.push_back(W.split_certified[i]);
        S.primitive_idempotents.push_back(W.primitive_idempotents[i]);
    }
    Verification v = verify_wedderburn(A, S);
    require(v.passed(), ErrorKind::Internal, "Wedderburn verification failed: " + v.summary());
    return S;
}

WedderburnData central_primitive_idempotents(const FrobeniusStructure& F, const WedderburnOptions& opts) {
    return central_primitive_idempotents(F.A(), opts);
}

Verification verify_wedderburn(const Algebra& A, const WedderburnData& W) {
    Verification v;
    Element sum = A.zero_element();
    int dsq = 0;
    for (std::size_t s = 0; s < W.size(); ++s) {
        const Element& e = W.idempotents[s];
        const std::string tag = "e(" + std::to_string(s) + ")";
        v.check(A.multiply(e, e) == e, tag + " is not idempotent");
        v.check(is_central(A, e), tag + " is not central");
        for (std::size_t t = s + 1; t < W.size(); ++t)
            v.check(is_zero_vector(A.multiply(e, W.idempotents[t])), tag + " e(" + std::to_string(t) + ") != 0");
        sum = sum + e;
        dsq += W.degrees[s] * W.degrees[s];
        if (W.split_certified[s]) {
            const Element& f = W.primitive_idempotents[s];
            v.check(A.multiply(f, f) == f && A.multiply(e, f) == f, "split certificate for " + tag + " is not an idempotent below it");
            v.check(corner_dimension(A, f) == 1, "split certificate for " + tag + " is not primitive");
            v.check(evaluate(W.characters[s], A.unit()) == Cyclotomic(A.zero().field(), Rational(W.degrees[s])),
                    "chi(1) != d for " + tag);
        }
    }
    v.check(sum == A.unit(), "idempotents do not sum to 1");
    CenterData Z = center_data(A);
    for (std::size_t s = 0; s < W.size(); ++s) {
        std::vector<Element> ze;
        for (const auto& z : Z.basis) ze.push_back(A.multiply(z, W.idempotents[s]));
        v.check(span_dimension(ze, A.dim(), A.zero()) == 1, "e(" + std::to_string(s) + ") is not primitive in Z(A)");
    }
    v.check(W.size() == Z.basis.size(), "number of blocks differs from dim Z(A)");
    if (W.all_split()) {
        v.check(dsq == A.dim(), "sum of squared degrees != dim A");
        Element chi = regular_character(A), acc = A.zero_element();
        for (std::size_t s = 0; s < W.size(); ++s)
            acc = acc + scale(Cyclotomic(A.zero().field(), Rational(W.degrees[s])), W.characters[s]);
        v.check(acc == chi, "sum d(S) chi_S != chi_reg");
    }
    return v;
}

Cyclotomic gamma_component(const FrobeniusStructure& F, const WedderburnData& W, std::size_t s) {
    const Algebra& A = F.A();
    Element g = A.multiply(casimir_trace(F, A.unit()), W.idempotents[s]);
    const Element& e = W.idempotents[s];
    std::size_t p = 0;
    while (e[p].is_zero()) ++p;
    Cyclotomic val = g[p] / e[p];
    require(scale(val, e) == g, ErrorKind::Internal, "Gamma(1) e(S) is not a multiple of e(S)");
    return val;
}

Verification verify_cprid_formula(const FrobeniusStructure& F, const WedderburnData& W) {
    const Algebra& A = F.A();
    const int n = A.dim();
    Verification v;
    Element g1 = casimir_trace(F, A.unit());
    for (std::size_t s = 0; s < W.size(); ++s) {
        if (!W.split_certified[s]) continue;
        Cyclotomic d(A.zero().field(), Rational(W.degrees[s]));
        Element lhs = A.multiply(g1, W.idempotents[s]);
        v.check(lhs == scale(d, contract_first(W.characters[s], F.casimir, n, n)),
                "Gamma(1) e(S) != d (chi_S (x) Id)(c) for S = " + std::to_string(s));
        v.check(lhs == scale(d, contract_second(W.characters[s], F.casimir, n, n)),
                "Gamma(1) e(S) != d (Id (x) chi_S)(c) for S = " + std::to_string(s));
        // e(S) -> chi_reg = chi_reg <- e(S) = d chi_S
        Element chi = regular_character(A);
        Element left = act_on_form(A, W.idempotents[s], chi);
        Element right;
        for (int i = 0; i < n; ++i) right.push_back(evaluate(chi, A.multiply(W.idempotents[s], A.basis(i))));
        v.check(left == scale(d, W.characters[s]) && right == left, "e(S) -> chi_reg != d chi_S for S = " + std::to_string(s));
    }
    return v;
}

CasimirSquareTable casimir_square_components(const FrobeniusStructure& F, const WedderburnData& W) {
    const Algebra& A = F.A();
    const int n = A.dim();
    CasimirSquareTable out;
    require(W.all_split(), ErrorKind::InapplicableHypothesis, "Casimir components need split-certified blocks");
    Element c2 = tensor_multiply(A, A, F.casimir, F.casimir);
    CMatrix gamma = casimir_trace_matrix(F);
    out.checks.check(c2 == apply_tensor(gamma, CMatrix::identity(n, A.zero()), F.casimir), "c^2 != (Gamma (x) Id)(c)");
    const std::size_t k = W.size();
    std::vector<CMatrix> L;
    for (const auto& e : W.idempotents) L.push_back(A.left_matrix(e));
    for (std::size_t s = 0; s < k; ++s) out.gamma.push_back(gamma_component(F, W, s));
    out.casimir.assign(k, std::vector<Cyclotomic>(k, A.zero()));
    out.casimir_square.assign(k, std::vector<Cyclotomic>(k, A.zero()));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t) {
            Element cst = apply_tensor(L[s], L[t], F.casimir);
            Element c2st = apply_tensor(L[s], L[t], c2);
            Rational inv(1, W.degrees[s] * W.degrees[t]);
            auto pair_value = [&](const Element& u) {
                return evaluate(W.characters[t], contract_first(W.characters[s], u, n, n)) * inv;
            };
            out.casimir[s][t] = pair_value(cst);
            out.casimir_square[s][t] = pair_value(c2st);
            const std::string tag = "(" + std::to_string(s) + ", " + std::to_string(t) + ")";
            if (s != t) {
                out.checks.check(is_zero_vector(cst), "c component " + tag + " does not vanish");
                out.checks.check(is_zero_vector(c2st), "c^2 component " + tag + " does not vanish");
            } else {
                Cyclotomic d2(A.zero().field(), Rational(W.degrees[s] * W.degrees[s]));
                out.checks.check(d2 * out.casimir_square[s][s] == out.gamma[s] * out.gamma[s],
                                 "d^2 (c^2)_SS != Gamma(1)_S^2 for S = " + std::to_string(s));
                out.checks.check(c2st == scale(out.casimir_square[s][s], pure_tensor(W.idempotents[s], W.idempotents[s])),
                                 "(c^2)_SS is not a scalar on block " + std::to_string(s));
            }
        }
    return out;
}

}  // namespace casimir
