#pragma once

#include "lacunary/rational.hpp"
#include "lacunary/real.hpp"
#include "lacunary/report.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace lacunary {

// Umbral operators are evaluation rules: a power of the operator acting on its
// vacuum is replaced by a scalar. Products are linearized before a rule is
// applied, so no symbolic operator objects exist.

/// c^nu phi_0 = 1/Gamma(nu+1); zero at the poles nu = -1, -2, ...
Real umbral_c_power(const Real& nu);

/// b^nu psi_0 = 1/Gamma(nu+1)^2; zero at the same poles.
Real umbral_b_power(const Real& nu);

/// Hermite vacuum theta_r = (y h)^r theta_0: zero for odd r, y^s (2s)!/s! for r = 2s.
Rational theta(unsigned r, const Rational& y);

/// H_n(x,y) = (x + y h)^n theta_0 = sum_k C(n,k) x^(n-k) theta_k(y).
Rational umbral_hermite_eval(unsigned n, const Rational& x, const Rational& y);

/// sum_{r<=order} t^r theta_r(y)/r! against exp(y t^2), coefficient by coefficient.
VerificationReport umbral_vacuum_genfun_check(const Rational& y, std::size_t order);

/// J0 by its Taylor series, summed until the tail is below working precision.
Real bessel_j0_reference(const Real& z);

/// J0(2 sqrt(u)) = sum_r (-u)^r / (r!)^2, real for every real u.
Real bessel_j0_sqrt_argument(const Real& u);

struct PartialSum {
    std::size_t order = 0;
    Real value;
    std::vector<Real> terms;
    Real reference;
    Real deviation;
};

/// sum_{n<=N} x^n 2U_n(alpha, beta), compared against J0(2 sqrt(alpha x + beta x^2)).
PartialSum bessel_j0_via_u2n(const Rational& alpha, const Rational& beta, const Real& x, std::size_t order);

/// sum_{n<=N} (n+m)!/n! x^n 2U_(n+m)(alpha, beta), the m-th x-derivative of the
/// J0 expansion. The reference is the exact J0 value for m = 0 and otherwise a
/// five-point central difference (step `step`) of the order m-1 series.
PartialSum bessel_j0_derivative_via_u2n(unsigned m, const Rational& alpha, const Rational& beta, const Real& x,
                                        std::size_t order, const Real& step = Real("1e-3"));

/// (f(x-2h) - 8 f(x-h) + 8 f(x+h) - f(x+2h)) / (12 h)
Real five_point_derivative(const std::function<Real(const Real&)>& f, const Real& x, const Real& h);

} // namespace lacunary
