#pragma once

#include "lacunary/fps.hpp"
#include "lacunary/poly.hpp"
#include "lacunary/rational.hpp"
#include "lacunary/report.hpp"

#include <cstddef>
#include <vector>

namespace lacunary {

/// numerator / denominator as polynomials in t; never reduced.
struct RationalFunction1D {
    Poly1 numerator;
    Poly1 denominator;

    /// Throws DomainError where the denominator vanishes.
    Rational evaluate(const Rational& t) const;
};

/// m-th derivative by repeated application of the quotient rule.
RationalFunction1D ratfun_derivative(const RationalFunction1D& f, unsigned m);

/// p(t + u) expanded in u.
Poly1 taylor_shift(const Poly1& p, const Rational& t);

/// p_m(x,y;t) = x t + y t^m as a polynomial in t.
Poly1 lacunary_exponent(const Rational& x, const Rational& y, unsigned m);

// --- Rodriguez-type derivative formulas -----------------------------------

/// (1+p2) d^m/dt^m 1/(1+p2) = m! U_m(p2'/(1+p2), p2''/(2 (1+p2))) at a rational t.
/// Throws DomainError when 1 + p2 vanishes at t.
VerificationReport verify_rodriguez_chebyshev(unsigned m, const Rational& x, const Rational& y, const Rational& t);

/// d^m/dt^m e^(p_n) = H_m^(n,...,1)({p_n^(s)/s!}) e^(p_n), compared as formal
/// series in u = t' - t to the given order (the common factor e^(p_n(t)) cancels).
VerificationReport verify_rodriguez_hermite(unsigned m, unsigned n, const Rational& x, const Rational& y,
                                            const Rational& t, std::size_t order = 12);

/// d^m/dt^m (1+p2)^(-1/2) = m! P_m(p2'/(1+p2), p2''/(2! (1+p2))) / sqrt(1+p2).
/// Both sides are divided by (1+p2)^(-1/2) so the comparison stays rational.
/// Throws DomainError unless 1 + p2(t) > 0.
VerificationReport verify_rodriguez_legendre(unsigned m, const Rational& x, const Rational& y, const Rational& t);

/// Lacunary form: d^n/dt^n (1+p_m)^(-1/2) = n! P_n({p_m^(s)/(s! (1+p_m))}_{s<=n}) / sqrt(1+p_m).
VerificationReport verify_rodriguez_legendre_lacunary(unsigned n, unsigned m, const Rational& x, const Rational& y,
                                                      const Rational& t);

// --- Shifted generating functions -----------------------------------------

/// sum t^n/n! H_(n+l)(x,y) = H_l(x + 2yt, y) e^(xt + yt^2), to order N.
VerificationReport verify_shifted_genfun_hermite(unsigned l, const Rational& x, const Rational& y, std::size_t order);

/// sum t^n (n+l)!/n! U_(n+l)(x,y) = l! U_l((x+2yt)/(1+p2), y/(1+p2)) / (1+p2), to order N.
VerificationReport verify_shifted_genfun_chebyshev(unsigned l, const Rational& x, const Rational& y,
                                                   std::size_t order);

/// Lacunary shifted generating functions, Hermite and Chebyshev forms, with the
/// multi-variable polynomial taking the m arguments p_m^(s)/s! (resp. divided
/// by 1 + p_m) exactly as written. Details are labelled "hermite ..." and
/// "chebyshev ...".
VerificationReport verify_rainville_lacunary(unsigned l, unsigned m, const Rational& x, const Rational& y,
                                             std::size_t order);

// --- Scaling and multiplication theorems ----------------------------------

/// P_n(lam x) = sum_r (lam-1)^r/r! x^r P_n^(r)(x).
VerificationReport legendre_scaling_classical(unsigned n, const Rational& lam, const Rational& x);

/// P_n(lam x, y) = sum_r y^r/r! (1-lam^2)^r lam^(n-2r) d_x^r P_(n-r)(x,y).
/// Throws DomainError for lam = 0.
VerificationReport legendre_scaling_2var(unsigned n, const Rational& lam, const Rational& x, const Rational& y);

/// C_n^(g)(lam x) = sum_r (lam^2-1)^r lam^(n-2r) / (r! 2^r) d_x^r C_(n-r)^(g)(x).
/// Throws DomainError for lam = 0 or g <= 0.
VerificationReport gegenbauer_scaling(unsigned n, const Rational& gamma, const Rational& lam, const Rational& x);

/// a^n H_n(x,y) = H_n(a x, a^2 y).
VerificationReport verify_hermite_dilatation(unsigned n, const Rational& a, const Rational& x, const Rational& y);

/// d_x^r H_n = n!/(n-r)! H_(n-r), as an exact polynomial identity.
VerificationReport verify_hermite_repeated_derivative(unsigned n, unsigned r);

/// H_n(lam x, y) = sum_r ((lam-1) x)^r C(n,r) H_(n-r)(x,y).
VerificationReport verify_hermite_multiplication(unsigned n, const Rational& lam, const Rational& x,
                                                 const Rational& y);

/// exp(y d_x^2) x^n against the series form of H_n(x,y) at fixed y, as polynomials in x.
VerificationReport verify_heat_operator(unsigned n, const Rational& y);

/// H_(n+1) = x H_n + 2 n y H_(n-1).
VerificationReport verify_hermite_recurrence(unsigned n, const Rational& x, const Rational& y);

/// P_n = (-1)^E Gamma(1/2 + E) / (sqrt(pi) n!) H_n with E = x d_x + y d_y acting
/// by eigenvalue on each monomial of H_n. Compares the resulting polynomial
/// with the P_n table and the value at (x, y) with legendre2_eval.
VerificationReport dilation_gamma_operator(unsigned n, const Rational& x, const Rational& y);

// --- Asymptotic limits -------------------------------------------------------

/// |H_n(x, y/n^2) / (x^n e^(y/x^2)) - 1| for each n. Passes when the sequence is
/// strictly decreasing, or identically zero. Throws DomainError for x = 0.
VerificationReport asymptotic_hermite(const Rational& x, const Rational& y, const std::vector<unsigned>& ns);

/// Relative deviation between P_n(x, y/n^2) and
///   (-x)^n / (sqrt(pi) n!) int_0^inf e^(-(s + y/(x^2 s))) s^(n-1/2) ds,
/// the integral taken with an alpha = n - 1/2 Laguerre rule of `rule_size`
/// nodes (closed form Gamma(n+1/2) when y = 0). Same pass rule as above.
/// Throws DomainError for x = 0 or y < 0.
VerificationReport asymptotic_legendre(const Rational& x, const Rational& y, const std::vector<unsigned>& ns,
                                       std::size_t rule_size = 80);

/// |g^(-n/2) C_n^(g)(x/sqrt(g)) - H_n(2x,-1)/n!| for each g, evaluated exactly
/// (the scaled polynomial has rational coefficients in g). Same pass rule.
VerificationReport asymptotic_gegenbauer(const Rational& x, unsigned n, const std::vector<Rational>& gammas);

} // namespace lacunary
