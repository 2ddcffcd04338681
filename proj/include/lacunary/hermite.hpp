#pragma once

#include "lacunary/poly.hpp"
#include "lacunary/rational.hpp"
#include "lacunary/report.hpp"

#include <cstddef>
#include <functional>
#include <span>

namespace lacunary {

/// Degree and lacunarity of H_n^(m); m = 2 is the classical two-variable case.
struct HermiteParams {
    unsigned n = 0;
    unsigned m = 2;

    /// Throws UsageError when m < 2.
    void validate() const;
};

// Two-variable Hermite H_n(x,y) = n! sum_r x^(n-2r) y^r / ((n-2r)! r!),
// generated by exp(x t + y t^2).
PolyXY hermite2_table(unsigned n);
Rational hermite2_eval(unsigned n, const Rational& x, const Rational& y);

template <class T>
T hermite2_at(unsigned n, const T& x, const T& y)
{
    return hermite2_table(n).evaluate(x, y);
}

// Lacunary H_n^(m)(x,y), generated by exp(x t + y t^m).
PolyXY hermite_lacunary_table(const HermiteParams& params);
Rational hermite_lacunary_eval(unsigned n, unsigned m, const Rational& x, const Rational& y);

template <class T>
T hermite_lacunary_at(unsigned n, unsigned m, const T& x, const T& y)
{
    return hermite_lacunary_table({n, m}).evaluate(x, y);
}

/// Complete p-variable Hermite H_n^(p,...,1)(x1..xp), generated by
/// exp(sum_s x_s t^s). Built by recursion on the number of variables:
///   H_n^(p..1) = n! sum_r H_(n-pr)^(p-1..1)(x1..x_(p-1)) x_p^r / ((n-pr)! r!)
PolyMulti hermite_multivar_table(unsigned n, std::size_t p);
/// Throws UsageError for an empty argument list.
Rational hermite_multivar_eval(unsigned n, std::span<const Rational> xs);

template <class T>
T hermite_multivar_at(unsigned n, std::span<const T> xs)
{
    return hermite_multivar_table(n, xs.size()).evaluate(xs);
}

/// n! [t^n] exp(x t + y t^2) against hermite2_eval for every n <= order.
/// Throws UsageError when order exceeds kDefaultSeriesOrder.
VerificationReport hermite2_genfun_check(const Rational& x, const Rational& y, std::size_t order);

/// exp(y d^2/dx^2) x^n as a polynomial in x; the operator series terminates
/// after floor(n/2) terms.
PolyXY heat_operator_apply(unsigned n, const Rational& y);

/// Which Euler operator a dilation acts through.
enum class EulerOperator {
    X,  ///< x d/dx: eigenvalue i on x^i y^j
    XY, ///< x d/dx + y d/dy: eigenvalue i + j on x^i y^j
};

unsigned euler_weight(EulerOperator op, unsigned i, unsigned j);

/// lam^(E) applied monomial-wise; throws DomainError for lam = 0.
PolyXY euler_dilation_apply(const PolyXY& poly, const Rational& lam, EulerOperator op = EulerOperator::X);

/// f(E) applied monomial-wise, where E is the chosen Euler operator.
PolyXY euler_function_apply(const PolyXY& poly, const std::function<Rational(unsigned)>& f, EulerOperator op);

} // namespace lacunary
