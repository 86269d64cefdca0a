#include "casimir/rational.hpp"

#include <cctype>

#include "casimir/error.hpp"

namespace casimir {

namespace {

bool valid_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!valid_integer_text(s)) fail(ErrorKind::InvalidInput, "malformed integer '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-') fail(ErrorKind::InvalidInput, "negative denominator in '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

}  // namespace casimir
