#include "lacunary/umbral.hpp"

#include "lacunary/fps.hpp"
#include "lacunary/legendre_family.hpp"

#include <string>

namespace lacunary {

namespace {

bool is_gamma_pole(const Real& z)
{
    return z <= 0 && z == floor(z);
}

Real derivative_series_value(unsigned m, const Rational& alpha, const Rational& beta, const Real& x,
                             std::size_t order, std::vector<Real>* terms)
{
    Real value = 0;
    Real xn = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        const unsigned idx = static_cast<unsigned>(n) + m;
        const Rational coeff = factorial(idx) / factorial(static_cast<unsigned>(n)) * u2n_eval(idx, alpha, beta);
        Real term = to_real(coeff) * xn;
        if (terms != nullptr) {
            terms->push_back(term);
        }
        value += term;
        xn *= x;
    }
    return value;
}

Real epsilon()
{
    return pow(Real(10), -static_cast<int>(working_digits()));
}

} // namespace

Real umbral_c_power(const Real& nu)
{
    const Real z = nu + 1;
    if (is_gamma_pole(z)) {
        return 0;
    }
    return 1 / boost::multiprecision::tgamma(z);
}

Real umbral_b_power(const Real& nu)
{
    const Real c = umbral_c_power(nu);
    return c * c;
}

Rational theta(unsigned r, const Rational& y)
{
    if (r % 2 != 0) {
        return 0;
    }
    const unsigned s = r / 2;
    return pow(y, s) * factorial(2 * s) / factorial(s);
}

Rational umbral_hermite_eval(unsigned n, const Rational& x, const Rational& y)
{
    Rational sum = 0;
    for (unsigned k = 0; k <= n; ++k) {
        const Rational th = theta(k, y);
        if (th != 0) {
            sum += binomial(n, k) * pow(x, n - k) * th;
        }
    }
    return sum;
}

VerificationReport umbral_vacuum_genfun_check(const Rational& y, std::size_t order)
{
    auto report = make_report("umbral-vacuum-genfun", {{"y", to_string(y)}, {"N", std::to_string(order)}});
    std::vector<Rational> exponent(order + 1, Rational(0));
    if (order >= 2) {
        exponent[2] = y;
    }
    const TruncatedSeries gaussian = series_exp(TruncatedSeries(std::move(exponent)));
    for (unsigned r = 0; r <= order; ++r) {
        record_exact(report, "r=" + std::to_string(r), theta(r, y) / factorial(r), series_coefficient(gaussian, r));
    }
    return report;
}

Real bessel_j0_sqrt_argument(const Real& u)
{
    const Real eps = epsilon();
    Real term = 1;
    Real sum = 1;
    for (unsigned r = 1;; ++r) {
        term *= -u / (Real(r) * r);
        sum += term;
        // Terms shrink monotonically once r^2 > |u|.
        if (Real(r) * r > abs(u) && abs(term) <= eps * (abs(sum) + eps)) {
            break;
        }
    }
    return sum;
}

Real bessel_j0_reference(const Real& z)
{
    return bessel_j0_sqrt_argument(z * z / 4);
}

PartialSum bessel_j0_via_u2n(const Rational& alpha, const Rational& beta, const Real& x, std::size_t order)
{
    return bessel_j0_derivative_via_u2n(0, alpha, beta, x, order);
}

PartialSum bessel_j0_derivative_via_u2n(unsigned m, const Rational& alpha, const Rational& beta, const Real& x,
                                        std::size_t order, const Real& step)
{
    PartialSum out;
    out.order = order;
    out.value = derivative_series_value(m, alpha, beta, x, order, &out.terms);
    if (m == 0) {
        const Real u = to_real(alpha) * x + to_real(beta) * x * x;
        out.reference = bessel_j0_sqrt_argument(u);
    } else {
        auto lower = [&](const Real& at) {
            return derivative_series_value(m - 1, alpha, beta, at, order, nullptr);
        };
        out.reference = five_point_derivative(lower, x, step);
    }
    out.deviation = abs(out.value - out.reference);
    return out;
}

Real five_point_derivative(const std::function<Real(const Real&)>& f, const Real& x, const Real& h)
{
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

} // namespace lacunary
