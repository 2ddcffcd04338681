#include "lacunary/hermite.hpp"

#include "lacunary/errors.hpp"
#include "lacunary/fps.hpp"

#include <string>

namespace lacunary {

void HermiteParams::validate() const
{
    if (m < 2) {
        throw UsageError("lacunarity m must be at least 2, got " + std::to_string(m));
    }
}

PolyXY hermite2_table(unsigned n)
{
    return hermite_lacunary_table({n, 2});
}

Rational hermite2_eval(unsigned n, const Rational& x, const Rational& y)
{
    return hermite2_table(n).evaluate(x, y);
}

PolyXY hermite_lacunary_table(const HermiteParams& params)
{
    params.validate();
    const unsigned n = params.n;
    const unsigned m = params.m;
    const Rational nf = factorial(n);
    PolyXY out;
    for (unsigned r = 0; m * r <= n; ++r) {
        out.add_term(n - m * r, r, nf / (factorial(n - m * r) * factorial(r)));
    }
    return out;
}

Rational hermite_lacunary_eval(unsigned n, unsigned m, const Rational& x, const Rational& y)
{
    return hermite_lacunary_table({n, m}).evaluate(x, y);
}

PolyMulti hermite_multivar_table(unsigned n, std::size_t p)
{
    PolyMulti out(p);
    if (p == 1) {
        out.add_term({n}, 1);
        return out;
    }
    const Rational nf = factorial(n);
    for (unsigned r = 0; p * r <= n; ++r) {
        const unsigned rest = n - static_cast<unsigned>(p) * r;
        const PolyMulti lower = hermite_multivar_table(rest, p - 1);
        const Rational scale = nf / (factorial(rest) * factorial(r));
        for (const auto& [e, c] : lower.terms()) {
            PolyMulti::Exponents exps = e;
            exps.push_back(r);
            out.add_term(exps, c * scale);
        }
    }
    return out;
}

Rational hermite_multivar_eval(unsigned n, std::span<const Rational> xs)
{
    if (xs.empty()) {
        throw UsageError("hermite_multivar_eval: at least one argument is required");
    }
    return hermite_multivar_table(n, xs.size()).evaluate(xs);
}

VerificationReport hermite2_genfun_check(const Rational& x, const Rational& y, std::size_t order)
{
    if (order > kDefaultSeriesOrder) {
        throw UsageError("hermite2_genfun_check: order " + std::to_string(order) + " exceeds " +
                         std::to_string(kDefaultSeriesOrder));
    }
    auto report = make_report("hermite2-genfun", {{"x", to_string(x)}, {"y", to_string(y)}, {"N", std::to_string(order)}});
    std::vector<Rational> exponent(order + 1, Rational(0));
    if (order >= 1) {
        exponent[1] = x;
    }
    if (order >= 2) {
        exponent[2] = y;
    }
    const TruncatedSeries gen = series_exp(TruncatedSeries(std::move(exponent)));
    for (unsigned n = 0; n <= order; ++n) {
        record_exact(report, "n=" + std::to_string(n), factorial(n) * series_coefficient(gen, n), hermite2_eval(n, x, y));
    }
    return report;
}

PolyXY heat_operator_apply(unsigned n, const Rational& y)
{
    // y^k/k! d^(2k)/dx^(2k) x^n = y^k/k! n!/(n-2k)! x^(n-2k)
    PolyXY out;
    for (unsigned k = 0; 2 * k <= n; ++k) {
        out.add_term(n - 2 * k, 0, pow(y, k) / factorial(k) * factorial(n) / factorial(n - 2 * k));
    }
    return out;
}

unsigned euler_weight(EulerOperator op, unsigned i, unsigned j)
{
    return op == EulerOperator::X ? i : i + j;
}

PolyXY euler_dilation_apply(const PolyXY& poly, const Rational& lam, EulerOperator op)
{
    if (lam == 0) {
        throw DomainError("euler_dilation_apply: lambda must be nonzero");
    }
    return euler_function_apply(poly, [&](unsigned w) { return pow(lam, w); }, op);
}

PolyXY euler_function_apply(const PolyXY& poly, const std::function<Rational(unsigned)>& f, EulerOperator op)
{
    PolyXY out;
    for (const auto& [e, c] : poly.terms()) {
        out.add_term(e.first, e.second, f(euler_weight(op, e.first, e.second)) * c);
    }
    return out;
}

} // namespace lacunary
