#pragma once

#include "casimir/error.hpp"
#include "casimir/rational.hpp"

namespace casimir {

/// Uniform access to the field-like scalar types (Rational, Cyclotomic, Residue).
/// Zero and one are produced "like" an existing value so that domain data
/// (conductor, modulus) is carried along.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static Rational from_integer(const Rational&, long v) { return Rational(v); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational inverse(const Rational& x) {
        require(sgn(x) != 0, ErrorKind::DivisionByZero, "inverse of rational zero");
        Rational r = 1 / x;
        return r;
    }
};

template <class T>
T zero_like(const T& x) { return ScalarTraits<T>::zero_like(x); }
template <class T>
T one_like(const T& x) { return ScalarTraits<T>::one_like(x); }
template <class T>
T from_integer(const T& proto, long v) { return ScalarTraits<T>::from_integer(proto, v); }
template <class T>
bool is_zero(const T& x) { return ScalarTraits<T>::is_zero(x); }
template <class T>
T inverse(const T& x) { return ScalarTraits<T>::inverse(x); }

}  // namespace casimir
