#include "lacunary/real.hpp"

#include "lacunary/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <cstdlib>
#include <string>

namespace lacunary {

void set_working_digits(unsigned digits10)
{
    if (digits10 < kMinimumDigits) {
        throw UsageError("working precision must be at least " + std::to_string(kMinimumDigits) + " digits");
    }
    Real::default_precision(digits10);
}

unsigned working_digits()
{
    return Real::default_precision();
}

unsigned digits_from_environment()
{
    const char* raw = std::getenv(kDigitsEnvVar);
    if (raw == nullptr || *raw == '\0') {
        return kDefaultDigits;
    }
    std::string text(raw);
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || used == 0) {
        throw UsageError(std::string(kDigitsEnvVar) + " must be an integer, got '" + text + "'");
    }
    if (value < kMinimumDigits) {
        throw UsageError(std::string(kDigitsEnvVar) + " must be at least " + std::to_string(kMinimumDigits));
    }
    return static_cast<unsigned>(value);
}

Real to_real(const Rational& value)
{
    return Real(value);
}

std::string to_string(const Real& value, unsigned digits10)
{
    return value.str(digits10 == 0 ? working_digits() : digits10, std::ios_base::scientific);
}

Real pi()
{
    return boost::math::constants::pi<Real>();
}

} // namespace lacunary
