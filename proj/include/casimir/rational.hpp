#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace casimir {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b"; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// "a/b" in lowest terms, or "a" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace casimir
