#include "lacunary/rational.hpp"

#include "lacunary/errors.hpp"

#include <cctype>

namespace lacunary {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw UsageError("malformed rational literal '" + std::string(text) + "'");
    }
    Integer d = parse_integer(den);
    if (d == 0) {
        throw UsageError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& value)
{
    return value.str();
}

Integer numerator_of(const Rational& value)
{
    return boost::multiprecision::numerator(value);
}

Integer denominator_of(const Rational& value)
{
    return boost::multiprecision::denominator(value);
}

Rational factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned k = 2; k <= n; ++k) {
        f *= k;
    }
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    Integer b = 1;
    for (unsigned j = 1; j <= k; ++j) {
        b = b * (n - k + j) / j;
    }
    return Rational(b);
}

Rational pow(const Rational& value, long k)
{
    if (k < 0) {
        if (value == 0) {
            throw DomainError("zero raised to a negative power");
        }
        return pow(Rational(1) / value, -k);
    }
    Rational result = 1;
    Rational base = value;
    for (unsigned long e = static_cast<unsigned long>(k); e != 0; e >>= 1) {
        if (e & 1u) {
            result *= base;
        }
        if (e > 1) {
            base *= base;
        }
    }
    return result;
}

} // namespace lacunary
