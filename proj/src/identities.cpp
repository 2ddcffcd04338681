#include "lacunary/identities.hpp"

#include "lacunary/errors.hpp"
#include "lacunary/hermite.hpp"
#include "lacunary/legendre_family.hpp"
#include "lacunary/quadrature.hpp"

#include <set>
#include <string>

namespace lacunary {

namespace {

std::string label(const char* name, std::size_t v)
{
    return std::string(name) + "=" + std::to_string(v);
}

ParamList xy_params(const Rational& x, const Rational& y)
{
    return {{"x", to_string(x)}, {"y", to_string(y)}};
}

void compare_series(VerificationReport& report, const std::string& prefix, const TruncatedSeries& lhs,
                    const TruncatedSeries& rhs)
{
    if (lhs.order() != rhs.order()) {
        fail(report, "route orders differ");
        return;
    }
    for (std::size_t k = 0; k <= lhs.order(); ++k) {
        record_exact(report, prefix + label("n", k), lhs[k], rhs[k]);
    }
}

void compare_polys(VerificationReport& report, const PolyXY& lhs, const PolyXY& rhs)
{
    std::set<PolyXY::Exponents> keys;
    for (const auto& [e, c] : lhs.terms()) {
        keys.insert(e);
    }
    for (const auto& [e, c] : rhs.terms()) {
        keys.insert(e);
    }
    for (const auto& e : keys) {
        record_exact(report, "x^" + std::to_string(e.first) + " y^" + std::to_string(e.second),
                     lhs.coefficient(e.first, e.second), rhs.coefficient(e.first, e.second));
    }
}

TruncatedSeries series_of(const Poly1& p, std::size_t order)
{
    return TruncatedSeries::from_poly(p, order);
}

// d^m/dt^m D^(-1/2) = A_m(t) D^(-m-1/2); returns A_m(t) / D(t)^m, i.e. the
// derivative divided by D(t)^(-1/2).
Rational inv_sqrt_derivative_ratio(const Poly1& denom, unsigned m, const Rational& t)
{
    Poly1 a({Rational(1)});
    const Poly1 d1 = denom.derivative();
    for (unsigned k = 0; k < m; ++k) {
        a = a.derivative() * denom - (Rational(2 * k + 1, 2) * a) * d1;
    }
    return a.evaluate(t) / pow(denom.evaluate(t), m);
}

bool decreasing_or_zero(const std::vector<Real>& devs)
{
    bool all_zero = true;
    for (const auto& d : devs) {
        all_zero = all_zero && d == 0;
    }
    if (all_zero) {
        return true;
    }
    for (std::size_t i = 1; i < devs.size(); ++i) {
        if (!(devs[i] < devs[i - 1])) {
            return false;
        }
    }
    return true;
}

void finish_sequence(VerificationReport& report, const std::vector<Real>& devs)
{
    if (!decreasing_or_zero(devs)) {
        fail(report, "deviation sequence is not strictly decreasing");
    }
}

std::string join(const std::vector<unsigned>& values)
{
    std::string s;
    for (unsigned v : values) {
        s += (s.empty() ? "" : ",") + std::to_string(v);
    }
    return s;
}

std::string join(const std::vector<Rational>& values)
{
    std::string s;
    for (const auto& v : values) {
        s += (s.empty() ? "" : ",") + to_string(v);
    }
    return s;
}

} // namespace

Rational RationalFunction1D::evaluate(const Rational& t) const
{
    const Rational d = denominator.evaluate(t);
    if (d == 0) {
        throw DomainError("rational function has a pole at t = " + to_string(t));
    }
    return numerator.evaluate(t) / d;
}

RationalFunction1D ratfun_derivative(const RationalFunction1D& f, unsigned m)
{
    RationalFunction1D out = f;
    for (unsigned k = 0; k < m; ++k) {
        Poly1 num = out.numerator.derivative() * out.denominator - out.numerator * out.denominator.derivative();
        out = {std::move(num), out.denominator * out.denominator};
    }
    return out;
}

Poly1 taylor_shift(const Poly1& p, const Rational& t)
{
    std::vector<Rational> coeffs;
    for (int k = 0; k <= p.degree(); ++k) {
        coeffs.push_back(p.derivative(static_cast<unsigned>(k)).evaluate(t) / factorial(static_cast<unsigned>(k)));
    }
    return Poly1(std::move(coeffs));
}

Poly1 lacunary_exponent(const Rational& x, const Rational& y, unsigned m)
{
    return Poly1::monomial(x, 1) + Poly1::monomial(y, m);
}

VerificationReport verify_rodriguez_chebyshev(unsigned m, const Rational& x, const Rational& y, const Rational& t)
{
    const Poly1 denom = Poly1({Rational(1)}) + lacunary_exponent(x, y, 2);
    const Rational d0 = denom.evaluate(t);
    if (d0 == 0) {
        throw DomainError("rodriguez-chebyshev: 1 + p2 vanishes at t = " + to_string(t));
    }
    auto report = make_report("rodriguez-chebyshev",
                              {{"m", std::to_string(m)}, {"x", to_string(x)}, {"y", to_string(y)}, {"t", to_string(t)}});
    const RationalFunction1D deriv = ratfun_derivative({Poly1({Rational(1)}), denom}, m);
    const Rational lhs = d0 * deriv.evaluate(t);
    const Rational a1 = denom.derivative(1).evaluate(t) / d0;
    const Rational a2 = denom.derivative(2).evaluate(t) / (2 * d0);
    record_exact(report, label("m", m), lhs, factorial(m) * chebyshev_u2_eval(m, a1, a2));
    return report;
}

VerificationReport verify_rodriguez_hermite(unsigned m, unsigned n, const Rational& x, const Rational& y,
                                            const Rational& t, std::size_t order)
{
    if (n < 2) {
        throw UsageError("rodriguez-hermite: lacunarity n must be at least 2");
    }
    if (order < m) {
        throw UsageError("rodriguez-hermite: series order must be at least m");
    }
    auto report = make_report("rodriguez-hermite", {{"m", std::to_string(m)},
                                                    {"n", std::to_string(n)},
                                                    {"x", to_string(x)},
                                                    {"y", to_string(y)},
                                                    {"t", to_string(t)},
                                                    {"N", std::to_string(order)}});
    const Poly1 p = lacunary_exponent(x, y, n);
    // e^(p(t+u)) = e^(p(t)) e^(q(u)); the constant factor is common to both sides.
    const Poly1 shifted = taylor_shift(p, t);
    const Poly1 q = shifted - Poly1({shifted.coefficient(0)});
    const TruncatedSeries e = series_exp(series_of(q, order));
    const TruncatedSeries lhs = series_derivative(e, m);

    const std::size_t rest = order - m;
    std::vector<TruncatedSeries> args;
    for (unsigned s = 1; s <= n; ++s) {
        args.push_back(series_of((Rational(1) / factorial(s)) * taylor_shift(p.derivative(s), t), rest));
    }
    const TruncatedSeries h = hermite_multivar_at<TruncatedSeries>(m, args);
    compare_series(report, "", lhs, h * series_truncate(e, rest));
    return report;
}

VerificationReport verify_rodriguez_legendre(unsigned m, const Rational& x, const Rational& y, const Rational& t)
{
    const Poly1 denom = Poly1({Rational(1)}) + lacunary_exponent(x, y, 2);
    const Rational d0 = denom.evaluate(t);
    if (d0 <= 0) {
        throw DomainError("rodriguez-legendre: 1 + p2 must be positive at t = " + to_string(t));
    }
    auto report = make_report("rodriguez-legendre",
                              {{"m", std::to_string(m)}, {"x", to_string(x)}, {"y", to_string(y)}, {"t", to_string(t)}});
    const Rational lhs = inv_sqrt_derivative_ratio(denom, m, t);
    const Rational a1 = denom.derivative(1).evaluate(t) / d0;
    const Rational a2 = denom.derivative(2).evaluate(t) / (factorial(2) * d0);
    record_exact(report, label("m", m), lhs, factorial(m) * legendre2_eval(m, a1, a2));
    return report;
}

VerificationReport verify_rodriguez_legendre_lacunary(unsigned n, unsigned m, const Rational& x, const Rational& y,
                                                      const Rational& t)
{
    if (m < 2) {
        throw UsageError("rodriguez-legendre-lacunary: lacunarity m must be at least 2");
    }
    const Poly1 denom = Poly1({Rational(1)}) + lacunary_exponent(x, y, m);
    const Rational d0 = denom.evaluate(t);
    if (d0 <= 0) {
        throw DomainError("rodriguez-legendre-lacunary: 1 + p_m must be positive at t = " + to_string(t));
    }
    auto report = make_report("rodriguez-legendre-lacunary", {{"n", std::to_string(n)},
                                                              {"m", std::to_string(m)},
                                                              {"x", to_string(x)},
                                                              {"y", to_string(y)},
                                                              {"t", to_string(t)}});
    const Rational lhs = inv_sqrt_derivative_ratio(denom, n, t);
    Rational rhs = 1;
    if (n > 0) {
        std::vector<Rational> args;
        for (unsigned s = 1; s <= n; ++s) {
            args.push_back(denom.derivative(s).evaluate(t) / (factorial(s) * d0));
        }
        rhs = factorial(n) * legendre_multivar_at<Rational>(n, args);
    }
    record_exact(report, label("n", n), lhs, rhs);
    return report;
}

VerificationReport verify_shifted_genfun_hermite(unsigned l, const Rational& x, const Rational& y, std::size_t order)
{
    auto params = xy_params(x, y);
    params.insert(params.begin(), {"l", std::to_string(l)});
    params.push_back({"N", std::to_string(order)});
    auto report = make_report("shifted-genfun-hermite", std::move(params));

    std::vector<Rational> lhs(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        lhs[n] = hermite2_eval(n + l, x, y) / factorial(n);
    }
    const TruncatedSeries big_x = series_of(Poly1({x, 2 * y}), order);
    const TruncatedSeries big_y = TruncatedSeries::constant(y, order);
    const TruncatedSeries gen = series_exp(series_of(lacunary_exponent(x, y, 2), order));
    compare_series(report, "", TruncatedSeries(std::move(lhs)), hermite2_at(l, big_x, big_y) * gen);
    return report;
}

VerificationReport verify_shifted_genfun_chebyshev(unsigned l, const Rational& x, const Rational& y,
                                                   std::size_t order)
{
    auto params = xy_params(x, y);
    params.insert(params.begin(), {"l", std::to_string(l)});
    params.push_back({"N", std::to_string(order)});
    auto report = make_report("shifted-genfun-chebyshev", std::move(params));

    std::vector<Rational> lhs(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        lhs[n] = factorial(n + l) / factorial(n) * chebyshev_u2_eval(n + l, x, y);
    }
    const TruncatedSeries recip = series_reciprocal(series_of(Poly1({Rational(1), x, y}), order));
    const TruncatedSeries big_x = series_of(Poly1({x, 2 * y}), order) * recip;
    const TruncatedSeries big_y = y * recip;
    const TruncatedSeries rhs = factorial(l) * (chebyshev_u2_at(l, big_x, big_y) * recip);
    compare_series(report, "", TruncatedSeries(std::move(lhs)), rhs);
    return report;
}

VerificationReport verify_rainville_lacunary(unsigned l, unsigned m, const Rational& x, const Rational& y,
                                             std::size_t order)
{
    if (m < 2) {
        throw UsageError("rainville: lacunarity m must be at least 2");
    }
    auto params = xy_params(x, y);
    params.insert(params.begin(), {"m", std::to_string(m)});
    params.insert(params.begin(), {"l", std::to_string(l)});
    params.push_back({"N", std::to_string(order)});
    auto report = make_report("rainville-lacunary", std::move(params));
    const Poly1 p = lacunary_exponent(x, y, m);

    {
        std::vector<Rational> lhs(order + 1);
        for (unsigned n = 0; n <= order; ++n) {
            lhs[n] = hermite_lacunary_eval(n + l, m, x, y) / factorial(n);
        }
        std::vector<TruncatedSeries> args;
        for (unsigned s = 1; s <= m; ++s) {
            args.push_back(series_of((Rational(1) / factorial(s)) * p.derivative(s), order));
        }
        const TruncatedSeries rhs = hermite_multivar_at<TruncatedSeries>(l, args) * series_exp(series_of(p, order));
        compare_series(report, "hermite ", TruncatedSeries(std::move(lhs)), rhs);
    }
    {
        std::vector<Rational> lhs(order + 1);
        for (unsigned n = 0; n <= order; ++n) {
            lhs[n] = factorial(n + l) / factorial(n) * humbert_eval(n + l, m, x, y);
        }
        const TruncatedSeries recip = series_reciprocal(series_of(Poly1({Rational(1)}) + p, order));
        std::vector<TruncatedSeries> args;
        for (unsigned s = 1; s <= m; ++s) {
            args.push_back(series_of((Rational(1) / factorial(s)) * p.derivative(s), order) * recip);
        }
        const TruncatedSeries rhs = factorial(l) * (multivar_u_at<TruncatedSeries>(l, args) * recip);
        compare_series(report, "chebyshev ", TruncatedSeries(std::move(lhs)), rhs);
    }
    return report;
}

VerificationReport legendre_scaling_classical(unsigned n, const Rational& lam, const Rational& x)
{
    auto report = make_report("scaling-legendre",
                              {{"n", std::to_string(n)}, {"lambda", to_string(lam)}, {"x", to_string(x)}});
    const Poly1 table = legendre_classical_table(n);
    Rational rhs = 0;
    for (unsigned r = 0; r <= n; ++r) {
        rhs += pow(lam - 1, r) / factorial(r) * pow(x, r) * table.derivative(r).evaluate(x);
    }
    record_exact(report, label("n", n), legendre_classical(n, lam * x), rhs);
    return report;
}

VerificationReport legendre_scaling_2var(unsigned n, const Rational& lam, const Rational& x, const Rational& y)
{
    if (lam == 0) {
        throw DomainError("scaling-legendre2: lambda must be nonzero");
    }
    auto report = make_report("scaling-legendre2", {{"n", std::to_string(n)},
                                                    {"lambda", to_string(lam)},
                                                    {"x", to_string(x)},
                                                    {"y", to_string(y)}});
    Rational rhs = 0;
    for (unsigned r = 0; r <= n; ++r) {
        const PolyXY d = legendre2_table(n - r).derivative_x(r);
        if (d.is_zero()) {
            continue;
        }
        rhs += pow(y, r) / factorial(r) * pow(1 - lam * lam, r) * pow(lam, static_cast<long>(n) - 2 * static_cast<long>(r)) *
               d.evaluate(x, y);
    }
    record_exact(report, label("n", n), legendre2_eval(n, lam * x, y), rhs);
    return report;
}

VerificationReport gegenbauer_scaling(unsigned n, const Rational& gamma, const Rational& lam, const Rational& x)
{
    if (lam == 0) {
        throw DomainError("scaling-gegenbauer: lambda must be nonzero");
    }
    auto report = make_report("scaling-gegenbauer", {{"n", std::to_string(n)},
                                                     {"gamma", to_string(gamma)},
                                                     {"lambda", to_string(lam)},
                                                     {"x", to_string(x)}});
    Rational rhs = 0;
    for (unsigned r = 0; r <= n; ++r) {
        const Poly1 d = gegenbauer_table(n - r, gamma).derivative(r);
        if (d.is_zero()) {
            continue;
        }
        rhs += pow(lam * lam - 1, r) * pow(lam, static_cast<long>(n) - 2 * static_cast<long>(r)) /
               (factorial(r) * pow(Rational(2), r)) * d.evaluate(x);
    }
    record_exact(report, label("n", n), gegenbauer_eval(n, gamma, lam * x), rhs);
    return report;
}

VerificationReport verify_hermite_dilatation(unsigned n, const Rational& a, const Rational& x, const Rational& y)
{
    auto params = xy_params(x, y);
    params.insert(params.begin(), {"a", to_string(a)});
    params.insert(params.begin(), {"n", std::to_string(n)});
    auto report = make_report("hermite-dilatation", std::move(params));
    record_exact(report, label("n", n), pow(a, n) * hermite2_eval(n, x, y), hermite2_eval(n, a * x, a * a * y));
    return report;
}

VerificationReport verify_hermite_repeated_derivative(unsigned n, unsigned r)
{
    if (r > n) {
        throw UsageError("hermite-repeated-derivative: r must not exceed n");
    }
    auto report = make_report("hermite-repeated-derivative", {{"n", std::to_string(n)}, {"r", std::to_string(r)}});
    compare_polys(report, hermite2_table(n).derivative_x(r), (factorial(n) / factorial(n - r)) * hermite2_table(n - r));
    return report;
}

VerificationReport verify_hermite_multiplication(unsigned n, const Rational& lam, const Rational& x,
                                                 const Rational& y)
{
    auto params = xy_params(x, y);
    params.insert(params.begin(), {"lambda", to_string(lam)});
    params.insert(params.begin(), {"n", std::to_string(n)});
    auto report = make_report("hermite-multiplication", std::move(params));
    Rational rhs = 0;
    for (unsigned r = 0; r <= n; ++r) {
        rhs += pow((lam - 1) * x, r) * binomial(n, r) * hermite2_eval(n - r, x, y);
    }
    record_exact(report, label("n", n), hermite2_eval(n, lam * x, y), rhs);
    return report;
}

VerificationReport verify_heat_operator(unsigned n, const Rational& y)
{
    auto report = make_report("hermite-heat-operator", {{"n", std::to_string(n)}, {"y", to_string(y)}});
    compare_polys(report, heat_operator_apply(n, y), PolyXY::from_x(hermite2_table(n).substitute_y(y)));
    return report;
}

VerificationReport verify_hermite_recurrence(unsigned n, const Rational& x, const Rational& y)
{
    auto params = xy_params(x, y);
    params.insert(params.begin(), {"n", std::to_string(n)});
    auto report = make_report("hermite-recurrence", std::move(params));
    Rational rhs = x * hermite2_eval(n, x, y);
    if (n > 0) {
        rhs += 2 * n * y * hermite2_eval(n - 1, x, y);
    }
    record_exact(report, label("n", n + 1), hermite2_eval(n + 1, x, y), rhs);
    return report;
}

VerificationReport dilation_gamma_operator(unsigned n, const Rational& x, const Rational& y)
{
    auto params = xy_params(x, y);
    params.insert(params.begin(), {"n", std::to_string(n)});
    auto report = make_report("operational-legendre", std::move(params));
    const Rational nf = factorial(n);
    const PolyXY image = euler_function_apply(
        hermite2_table(n),
        [&](unsigned w) { return (w % 2 == 0 ? Rational(1) : Rational(-1)) * half_integer_gamma(w) / nf; },
        EulerOperator::XY);
    compare_polys(report, image, legendre2_table(n));
    record_exact(report, "value", image.evaluate(x, y), legendre2_eval(n, x, y));
    return report;
}

VerificationReport asymptotic_hermite(const Rational& x, const Rational& y, const std::vector<unsigned>& ns)
{
    if (x == 0) {
        throw DomainError("asymptotic-hermite: x must be nonzero");
    }
    auto report = make_report("asymptotic-hermite", {{"x", to_string(x)}, {"y", to_string(y)}, {"ns", join(ns)}});
    const Real damping = exp(-to_real(y / (x * x)));
    std::vector<Real> devs;
    for (unsigned n : ns) {
        const Rational ratio = hermite2_eval(n, x, y / (Rational(n) * n)) / pow(x, n);
        const Real dev = abs(to_real(ratio) * damping - 1);
        devs.push_back(dev);
        record_deviation(report, label("n", n), {{"relative_error", to_string(dev, 20)}}, dev.convert_to<double>(), true);
    }
    finish_sequence(report, devs);
    return report;
}

VerificationReport asymptotic_legendre(const Rational& x, const Rational& y, const std::vector<unsigned>& ns,
                                       std::size_t rule_size)
{
    if (x == 0) {
        throw DomainError("asymptotic-legendre: x must be nonzero");
    }
    if (y < 0) {
        throw DomainError("asymptotic-legendre: y must be non-negative for the integral to converge");
    }
    auto report = make_report("asymptotic-legendre", {{"x", to_string(x)},
                                                      {"y", to_string(y)},
                                                      {"ns", join(ns)},
                                                      {"nodes", std::to_string(rule_size)}});
    std::vector<Real> devs;
    for (unsigned n : ns) {
        const Rational exact = legendre2_eval(n, x, y / (Rational(n) * n));
        const Rational prefactor = pow(-x, n) / factorial(n);
        Real dev;
        if (y == 0) {
            // The integral is Gamma(n + 1/2) in closed form.
            const Rational limit = prefactor * half_integer_gamma(n);
            dev = to_real(abs(exact / limit - 1));
        } else {
            const Real a = to_real(y / (x * x));
            const QuadratureRule rule = build_rule(Rational(2 * n - 1, 2), rule_size);
            const Real integral = integrate(rule, [&](const Real& s) { return exp(-a / s); });
            const Real limit = to_real(prefactor) * integral / sqrt(pi());
            dev = abs(to_real(exact) / limit - 1);
        }
        devs.push_back(dev);
        record_deviation(report, label("n", n), {{"relative_error", to_string(dev, 20)}}, dev.convert_to<double>(), true);
    }
    finish_sequence(report, devs);
    return report;
}

VerificationReport asymptotic_gegenbauer(const Rational& x, unsigned n, const std::vector<Rational>& gammas)
{
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        if (gammas[i] <= 0) {
            throw DomainError("asymptotic-gegenbauer: gamma values must be positive");
        }
        if (i > 0 && !(gammas[i] > gammas[i - 1])) {
            throw UsageError("asymptotic-gegenbauer: gamma values must be increasing");
        }
    }
    auto report =
        make_report("asymptotic-gegenbauer", {{"x", to_string(x)}, {"n", std::to_string(n)}, {"gammas", join(gammas)}});
    const Rational limit = hermite2_eval(n, 2 * x, -1) / factorial(n);
    std::vector<Real> devs;
    for (const auto& g : gammas) {
        // g^(-n/2) C_n^(g)(x/sqrt(g)) = sum_r (-1)^r (g)_(n-r) (2x)^(n-2r) g^(-(n-r)) / ((n-2r)! r!)
        Rational scaled = 0;
        for (unsigned r = 0; 2 * r <= n; ++r) {
            const Rational term = pochhammer(g, n - r) * pow(2 * x, n - 2 * r) * pow(g, -static_cast<long>(n - r)) /
                                  (factorial(n - 2 * r) * factorial(r));
            scaled += r % 2 == 0 ? term : Rational(-term);
        }
        const Rational dev = abs(scaled - limit);
        devs.push_back(to_real(dev));
        record_deviation(report, "gamma=" + to_string(g),
                         {{"scaled", to_string(scaled)}, {"limit", to_string(limit)}, {"deviation", to_string(dev)}},
                         dev.convert_to<double>(), true);
    }
    finish_sequence(report, devs);
    return report;
}

} // namespace lacunary
