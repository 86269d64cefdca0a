#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "casimir/frobenius.hpp"
#include "casimir/padic.hpp"

namespace casimir {

using ModularAlgebra = BasicAlgebra<Residue>;
using ModElement = Vector<Residue>;

struct WedderburnData {
    std::vector<Element> idempotents;
    std::vector<int> degrees;
    /// chi_S on the basis; empty for components that are not split-certified.
    std::vector<Element> characters;
    std::vector<bool> split_certified;
    /// A primitive idempotent f <= e(S) with dim fAf = 1, when certified.
    std::vector<Element> primitive_idempotents;
    long prime_used = 0;
    int precision_used = 0;

    std::size_t size() const { return idempotents.size(); }
    bool all_split() const;
    /// Equality ignoring the prime/precision provenance.
    bool same_decomposition(const WedderburnData& other) const;
};

struct WedderburnOptions {
    /// Use exactly this prime (BadPrime if it violates the policy).
    std::optional<long> prime;
    /// Prime search starts strictly above max(2 dim A, floor).
    long prime_floor = 0;
    int max_precision = 64;
    int fallback_primes = 2;
    std::uint64_t seed = 0x5eed;
    int random_candidates = 40;
};

/// Output of the finite-field stage.
struct ModularSplit {
    long prime;
    /// Central primitive idempotents mod p in center coordinates.
    std::vector<ModElement> central;
    /// The same idempotents as elements of A mod p.
    std::vector<ModElement> idempotents;
    std::vector<int> degrees;
    /// Primitive idempotent f <= e with dim fAf = 1 over F_q, per block (empty when not found).
    std::vector<ModElement> primitive;
};

/// Exact center data: reduced echelon basis z_t of Z(A), pivot columns and
/// structure constants of Z(A) in that basis.
struct CenterData {
    std::vector<Element> basis;
    std::vector<int> pivots;
    Algebra algebra;

    Element to_algebra(const Element& coords) const;
    Element coordinates(const Element& central) const;
};

CenterData center_data(const Algebra& A);

/// Checks the good-prime policy: p inert for the conductor (so Z[zeta]/p is
/// the field F_q, q = p^phi(n)), p does not divide dim A, every
/// structure constant and center constant is p-integral, and the Gram
/// matrices of chi_reg on A and on Z(A) stay invertible mod p.
bool is_good_prime(const Algebra& A, const CenterData& Z, long p, std::string* reason = nullptr);
/// The first `count` good primes above max(2 dim A, floor); the automatic
/// search never goes below 2 dim A, explicit primes may.
std::vector<long> good_primes(const Algebra& A, int count, long floor = 0);

/// Central primitive idempotents, block degrees and per-block primitive
/// idempotents over F_q. Throws BadPrime when the reduction is not split
/// semisimple with the expected shape.
ModularSplit modular_split(const Algebra& A, const CenterData& Z, long p, std::uint64_t seed = 0x5eed);

/// e' = 3e^2 - 2e^3 computed in `target` (an algebra over Z/p^{2m}); e is an
/// idempotent mod p^m whose coordinates are read as integers.
ModElement hensel_lift_idempotent(const ModularAlgebra& target, const ModElement& e);

/// Certificate of semisimplicity: the Gram matrix of chi_reg is invertible.
/// Throws NotSemisimple with a radical witness otherwise.
void certify_semisimple(const Algebra& A);

/// Full pipeline: modular split, lifting with precision p, p^2, p^4, ..., p^64,
/// reconstruction, exact verification over k, split certification by exact
/// primitive idempotents, characters and canonical ordering.
WedderburnData central_primitive_idempotents(const Algebra& A, const WedderburnOptions& opts = {});
WedderburnData central_primitive_idempotents(const FrobeniusStructure& F, const WedderburnOptions& opts = {});

/// chi_S = (e(S) -> chi_reg) / d(S), checked against chi_S(1) = d(S) and chi_S(e(T)) = [S = T] d(S).
std::vector<Element> irreducible_characters(const Algebra& A, const WedderburnData& W);

/// Exact checks on the decomposition: idempotent, central, orthogonal, complete,
/// primitive in Z(A), sum d^2 = dim A when split, sum d chi = chi_reg.
Verification verify_wedderburn(const Algebra& A, const WedderburnData& W);

/// Gamma(1) e(S) = d(S) (chi_S (x) Id)(c) and the same with Id (x) chi_S.
Verification verify_cprid_formula(const FrobeniusStructure& F, const WedderburnData& W);

/// The scalar s with Gamma(1) e(S) = s e(S).
Cyclotomic gamma_component(const FrobeniusStructure& F, const WedderburnData& W, std::size_t s);

struct CasimirSquareTable {
    /// [S][T] scalars (chi_S (x) chi_T)((e_S (x) e_T) c) / (d_S d_T), and likewise for c^2.
    std::vector<std::vector<Cyclotomic>> casimir;
    std::vector<std::vector<Cyclotomic>> casimir_square;
    std::vector<Cyclotomic> gamma;
    Verification checks;
};

/// Off-diagonal vanishing of (e_S (x) e_T) c, d(S)^2 (c^2)_{S,S} = Gamma(1)_S^2
/// and the element identity c^2 = (Gamma (x) Id)(c).
CasimirSquareTable casimir_square_components(const FrobeniusStructure& F, const WedderburnData& W);

}  // namespace casimir
