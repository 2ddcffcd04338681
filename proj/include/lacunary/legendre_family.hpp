#pragma once

#include "lacunary/poly.hpp"
#include "lacunary/quadrature.hpp"
#include "lacunary/rational.hpp"
#include "lacunary/real.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>

namespace lacunary {

/// Selects one of the Legendre-like families together with its index.
struct FamilyTag {
    enum class Kind { ChebyshevU, Humbert, MultiU, Legendre2, Gegenbauer, U2Poly };

    Kind kind = Kind::ChebyshevU;
    unsigned index = 2;  // m for Humbert, p for MultiU
    Rational gamma = 1;  // Gegenbauer only

    static FamilyTag chebyshev_u() { return {Kind::ChebyshevU, 2, 1}; }
    static FamilyTag humbert(unsigned m) { return {Kind::Humbert, m, 1}; }
    static FamilyTag multi_u(unsigned p) { return {Kind::MultiU, p, 1}; }
    static FamilyTag legendre2() { return {Kind::Legendre2, 2, 1}; }
    static FamilyTag gegenbauer(const Rational& g) { return {Kind::Gegenbauer, 2, g}; }
    static FamilyTag u2poly() { return {Kind::U2Poly, 2, 1}; }

    /// Throws UsageError (m < 2, p < 1) or DomainError (gamma <= 0).
    void validate() const;
    /// Number of scalar arguments the family takes.
    std::size_t arity() const;
    /// Exponent alpha of the Laplace weight s^alpha e^(-s); UsageError for U2Poly.
    Rational weight_exponent() const;
    std::string name() const;
};

/// Gamma(k + 1/2) / sqrt(pi) = (2k)! / (4^k k!).
Rational half_integer_gamma(unsigned k);

/// Rising factorial (g)_k = Gamma(g + k) / Gamma(g).
Rational pochhammer(const Rational& g, unsigned k);

// Two-variable Chebyshev of the second kind, generated by 1/(1 + x t + y t^2):
//   U_n(x,y) = (-1)^n sum_r (n-r)! x^(n-2r) (-y)^r / ((n-2r)! r!)
PolyXY chebyshev_u2_table(unsigned n);
Rational chebyshev_u2_eval(unsigned n, const Rational& x, const Rational& y);

template <class T>
T chebyshev_u2_at(unsigned n, const T& x, const T& y)
{
    return chebyshev_u2_table(n).evaluate(x, y);
}

// Humbert (lacunary Legendre) U_n^(m), generated by 1/(1 + x t + y t^m):
//   U_n^(m)(x,y) = (-1)^n sum_r (-1)^((m-1)r) (n-(m-1)r)! x^(n-mr) y^r / ((n-mr)! r!)
PolyXY humbert_table(unsigned n, unsigned m);
Rational humbert_eval(unsigned n, unsigned m, const Rational& x, const Rational& y);

template <class T>
T humbert_at(unsigned n, unsigned m, const T& x, const T& y)
{
    return humbert_table(n, m).evaluate(x, y);
}

/// p-variable polynomial whose coefficient on prod x_s^(k_s) is
/// weight(|k|) / prod k_s!, summed over all k with sum_s s k_s = n.
/// Every Laplace image of H_n^(p,...,1) has this shape.
PolyMulti composition_table(unsigned n, std::size_t p, const std::function<Rational(unsigned)>& weight);

/// U_n^(p,...,1)(x1..xp), generated by 1/(1 + sum_s x_s t^s). Computed from the
/// term-wise Laplace transform of H_n^(p,...,1): weight(j) = (-1)^j j!.
PolyMulti multivar_u_table(unsigned n, std::size_t p);
Rational multivar_u_eval(unsigned n, std::span<const Rational> xs);

template <class T>
T multivar_u_at(unsigned n, std::span<const T> xs)
{
    return multivar_u_table(n, xs.size()).evaluate(xs);
}

// Two-variable Legendre, generated by (1 + x t + y t^2)^(-1/2):
//   P_n(x,y) = (-1)^n sum_r Gamma(n-r+1/2)/sqrt(pi) x^(n-2r) (-y)^r / ((n-2r)! r!)
PolyXY legendre2_table(unsigned n);
Rational legendre2_eval(unsigned n, const Rational& x, const Rational& y);

template <class T>
T legendre2_at(unsigned n, const T& x, const T& y)
{
    return legendre2_table(n).evaluate(x, y);
}

/// Multi-argument P_n(a1..ap), generated by (1 + sum_s a_s t^s)^(-1/2);
/// weight(j) = (-1)^j Gamma(j+1/2)/sqrt(pi).
PolyMulti legendre_multivar_table(unsigned n, std::size_t p);

template <class T>
T legendre_multivar_at(unsigned n, std::span<const T> xs)
{
    return legendre_multivar_table(n, xs.size()).evaluate(xs);
}

/// Classical Legendre P_n(x) = P_n(-2x, 1).
Poly1 legendre_classical_table(unsigned n);
Rational legendre_classical(unsigned n, const Rational& x);

// 2U_n(a,b) = (-1)^n sum_r (-1)^r a^(n-2r) b^r / ((n-2r)! (n-r)! r!)
PolyXY u2n_table(unsigned n);
Rational u2n_eval(unsigned n, const Rational& alpha, const Rational& beta);

template <class T>
T u2n_at(unsigned n, const T& alpha, const T& beta)
{
    return u2n_table(n).evaluate(alpha, beta);
}

/// Gegenbauer C_n^(g)(x) = sum_r (-1)^r (g)_(n-r) (2x)^(n-2r) / ((n-2r)! r!),
/// the term-wise integral of its Hermite representation. Throws DomainError
/// for g <= 0.
Poly1 gegenbauer_table(unsigned n, const Rational& gamma);
Rational gegenbauer_eval(unsigned n, const Rational& gamma, const Rational& x);

/// Exact value of the tagged family at rational arguments.
Rational family_eval(const FamilyTag& tag, unsigned n, std::span<const Rational> args);

/// Quadrature of the family's Laplace representation
///   (1/(n! c)) int_0^inf e^(-s) s^alpha H(...)(s) ds.
/// Throws UsageError when the rule's alpha does not match the family, the
/// argument count is wrong, or the family has no such representation (U2Poly).
Real laplace_route_eval(const FamilyTag& tag, unsigned n, std::span<const Rational> args, const QuadratureRule& rule);

/// P_n(x) = (-1/2)^n int_0^inf e^(-s) s^n 2U_n(x s, 1) ds with an alpha = 0 rule.
Real legendre_u2n_integral(unsigned n, const Real& x, const QuadratureRule& rule);

} // namespace lacunary
