#pragma once

#include "lacunary/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace lacunary {

/// Variable-precision binary float. The working precision is process-wide:
/// set it once with set_working_digits() before any concurrent use.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultDigits = 50;
inline constexpr unsigned kMinimumDigits = 30;
inline constexpr const char* kDigitsEnvVar = "LACUNARY_DIGITS";

void set_working_digits(unsigned digits10);
unsigned working_digits();

/// Reads LACUNARY_DIGITS (falls back to kDefaultDigits when unset). Throws
/// UsageError on a malformed value or one below kMinimumDigits.
unsigned digits_from_environment();

Real to_real(const Rational& value);
std::string to_string(const Real& value, unsigned digits10 = 0);

inline Real lift(const Rational& c, const Real& /*like*/) { return to_real(c); }

Real pi();

} // namespace lacunary
