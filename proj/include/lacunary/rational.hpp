#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace lacunary {

/// Exact rational scalar. GMP keeps every value in lowest terms with a positive
/// denominator, so equality is structural.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p", "-p/q", "+p/q" (decimal integers only). Throws UsageError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Integer numerator_of(const Rational& value);
Integer denominator_of(const Rational& value);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

/// value^k for any integer k; throws DomainError for 0^(negative).
Rational pow(const Rational& value, long k);

inline Rational lift(const Rational& c, const Rational& /*like*/) { return c; }

} // namespace lacunary
