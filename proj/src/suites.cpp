#include "lacunary/suites.hpp"

#include "lacunary/errors.hpp"
#include "lacunary/fps.hpp"
#include "lacunary/hermite.hpp"
#include "lacunary/identities.hpp"
#include "lacunary/legendre_family.hpp"
#include "lacunary/quadrature.hpp"
#include "lacunary/umbral.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <memory>
#include <thread>

namespace lacunary {

namespace {

using Task = std::function<VerificationReport()>;
using Tasks = std::vector<Task>;

Task guarded(std::string identity, ParamList params, std::function<VerificationReport()> body)
{
    return [identity = std::move(identity), params = std::move(params), body = std::move(body)]() {
        try {
            return body();
        } catch (const std::exception& e) {
            auto report = make_report(identity, params);
            fail(report, e.what());
            return report;
        }
    };
}

std::vector<unsigned> range_or(const std::optional<IndexRange>& r, unsigned lo, unsigned hi)
{
    return r ? r->values() : IndexRange{lo, hi}.values();
}

std::string str(unsigned v)
{
    return std::to_string(v);
}

ParamList xy(const Rational& x, const Rational& y)
{
    return {{"x", to_string(x)}, {"y", to_string(y)}};
}

std::vector<std::vector<Rational>> tuples(const std::vector<Rational>& grid, unsigned p)
{
    std::vector<std::vector<Rational>> out{{}};
    for (unsigned k = 0; k < p; ++k) {
        std::vector<std::vector<Rational>> next;
        for (const auto& prefix : out) {
            for (const auto& g : grid) {
                auto t = prefix;
                t.push_back(g);
                next.push_back(std::move(t));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::string join(const std::vector<Rational>& xs)
{
    std::string s;
    for (const auto& x : xs) {
        s += (s.empty() ? "" : ",") + to_string(x);
    }
    return s;
}

// Coefficient n (times n! when `exponential`) of the series against the closed form.
VerificationReport coefficient_report(std::string identity, ParamList params, const TruncatedSeries& series,
                                      const std::vector<unsigned>& ns, bool exponential,
                                      const std::function<Rational(unsigned)>& closed)
{
    auto report = make_report(std::move(identity), std::move(params));
    for (unsigned n : ns) {
        Rational c = series_coefficient(series, n);
        if (exponential) {
            c *= factorial(n);
        }
        record_exact(report, "n=" + str(n), closed(n), c);
    }
    return report;
}

Poly1 one_plus(const std::vector<Rational>& xs)
{
    std::vector<Rational> c{Rational(1)};
    c.insert(c.end(), xs.begin(), xs.end());
    return Poly1(std::move(c));
}

Poly1 lacunary_denominator(const Rational& x, const Rational& y, unsigned m)
{
    return Poly1({Rational(1)}) + lacunary_exponent(x, y, m);
}

void genfun_tasks(Tasks& out, const SuiteOptions& o)
{
    const auto ns = range_or(o.n, 0, 20);
    const std::size_t order = std::max<std::size_t>(o.order, ns.back());
    const auto ms = range_or(o.m, 2, 5);
    const auto ps = range_or(o.p, 1, 3);
    for (const auto& x : o.grid) {
        for (const auto& y : o.grid) {
            out.push_back(guarded("genfun-chebyshev-u2", xy(x, y), [=] {
                auto s = series_reciprocal(TruncatedSeries::from_poly(Poly1({Rational(1), x, y}), order));
                return coefficient_report("genfun-chebyshev-u2", xy(x, y), s, ns, false,
                                          [&](unsigned n) { return chebyshev_u2_eval(n, x, y); });
            }));
            for (unsigned m : ms) {
                ParamList params{{"m", str(m)}, {"x", to_string(x)}, {"y", to_string(y)}};
                out.push_back(guarded("genfun-humbert", params, [=] {
                    auto s = series_reciprocal(TruncatedSeries::from_poly(lacunary_denominator(x, y, m), order));
                    return coefficient_report("genfun-humbert", params, s, ns, false,
                                              [&](unsigned n) { return humbert_eval(n, m, x, y); });
                }));
            }
            out.push_back(guarded("genfun-legendre2", xy(x, y), [=] {
                auto s = series_inv_sqrt(TruncatedSeries::from_poly(Poly1({Rational(1), x, y}), order));
                return coefficient_report("genfun-legendre2", xy(x, y), s, ns, false,
                                          [&](unsigned n) { return legendre2_eval(n, x, y); });
            }));
            out.push_back(guarded("genfun-hermite2", xy(x, y), [=] {
                auto s = series_exp(TruncatedSeries::from_poly(lacunary_exponent(x, y, 2), order));
                return coefficient_report("genfun-hermite2", xy(x, y), s, ns, true,
                                          [&](unsigned n) { return hermite2_eval(n, x, y); });
            }));
            for (unsigned m : ms) {
                ParamList params{{"m", str(m)}, {"x", to_string(x)}, {"y", to_string(y)}};
                out.push_back(guarded("genfun-hermite-lacunary", params, [=] {
                    auto s = series_exp(TruncatedSeries::from_poly(lacunary_exponent(x, y, m), order));
                    return coefficient_report("genfun-hermite-lacunary", params, s, ns, true,
                                              [&](unsigned n) { return hermite_lacunary_eval(n, m, x, y); });
                }));
            }
        }
    }
    for (unsigned p : ps) {
        for (const auto& xs : tuples(o.grid, p)) {
            ParamList params{{"p", str(p)}, {"xs", join(xs)}};
            out.push_back(guarded("genfun-multivar-u", params, [=] {
                auto s = series_reciprocal(TruncatedSeries::from_poly(one_plus(xs), order));
                return coefficient_report("genfun-multivar-u", params, s, ns, false,
                                          [&](unsigned n) { return multivar_u_eval(n, xs); });
            }));
            out.push_back(guarded("genfun-legendre-multivar", params, [=] {
                auto s = series_inv_sqrt(TruncatedSeries::from_poly(one_plus(xs), order));
                return coefficient_report("genfun-legendre-multivar", params, s, ns, false, [&](unsigned n) {
                    return legendre_multivar_at<Rational>(n, xs);
                });
            }));
            std::vector<Rational> shifted{Rational(0)};
            shifted.insert(shifted.end(), xs.begin(), xs.end());
            out.push_back(guarded("genfun-hermite-multivar", params, [=] {
                auto s = series_exp(TruncatedSeries::from_poly(Poly1(shifted), order));
                return coefficient_report("genfun-hermite-multivar", params, s, ns, true,
                                          [&](unsigned n) { return hermite_multivar_eval(n, xs); });
            }));
        }
    }
    for (const Rational& g : {Rational(1, 2), Rational(1), Rational(3)}) {
        for (const auto& x : o.grid) {
            ParamList params{{"gamma", to_string(g)}, {"x", to_string(x)}};
            out.push_back(guarded("genfun-gegenbauer", params, [=] {
                auto base = TruncatedSeries::from_poly(Poly1({Rational(1), -2 * x, Rational(1)}), order);
                auto s = series_pow(base, -g);
                return coefficient_report("genfun-gegenbauer", params, s, ns, false,
                                          [&](unsigned n) { return gegenbauer_eval(n, g, x); });
            }));
        }
    }
}

using RuleCache = std::map<Rational, std::shared_ptr<const QuadratureRule>>;

std::shared_ptr<const QuadratureRule> rule_for(RuleCache& cache, const Rational& alpha, std::size_t size)
{
    auto& slot = cache[alpha];
    if (!slot) {
        slot = std::make_shared<const QuadratureRule>(build_rule(alpha, size));
    }
    return slot;
}

constexpr double kLaplaceTolerance = 1e-9;

void laplace_tasks(Tasks& out, const SuiteOptions& o)
{
    const auto ns = range_or(o.n, 0, 12);
    RuleCache cache;
    auto family_task = [&](const FamilyTag& tag, std::vector<Rational> args) {
        ParamList params{{"family", tag.name()}, {"args", join(args)}};
        auto rule = rule_for(cache, tag.weight_exponent(), o.rule_size);
        out.push_back(guarded("laplace-route", params, [=] {
            auto report = make_report("laplace-route", params, kLaplaceTolerance);
            for (unsigned n : ns) {
                const Rational exact = family_eval(tag, n, args);
                const Real quad = laplace_route_eval(tag, n, args, *rule);
                const Real dev = abs(quad - to_real(exact));
                const bool ok = dev <= kLaplaceTolerance * (1 + abs(to_real(exact)));
                record_deviation(report, "n=" + str(n), {{"exact", to_string(exact)}, {"quadrature", to_string(quad, 25)}},
                                 dev.convert_to<double>(), ok);
            }
            return report;
        }));
    };
    for (const auto& x : o.grid) {
        for (const auto& y : o.grid) {
            family_task(FamilyTag::chebyshev_u(), {x, y});
            family_task(FamilyTag::humbert(3), {x, y});
            family_task(FamilyTag::legendre2(), {x, y});
        }
    }
    for (const Rational& g : {Rational(1, 2), Rational(1), Rational(3)}) {
        for (const auto& x : o.grid) {
            family_task(FamilyTag::gegenbauer(g), {x});
        }
    }
    auto rule = rule_for(cache, 0, o.rule_size);
    for (const auto& x : o.grid) {
        ParamList params{{"family", "legendre-u2n"}, {"args", to_string(x)}};
        out.push_back(guarded("laplace-route", params, [=] {
            auto report = make_report("laplace-route", params, kLaplaceTolerance);
            for (unsigned n : ns) {
                const Rational exact = legendre_classical(n, x);
                const Real quad = legendre_u2n_integral(n, to_real(x), *rule);
                const Real dev = abs(quad - to_real(exact));
                const bool ok = dev <= kLaplaceTolerance * (1 + abs(to_real(exact)));
                record_deviation(report, "n=" + str(n), {{"exact", to_string(exact)}, {"quadrature", to_string(quad, 25)}},
                                 dev.convert_to<double>(), ok);
            }
            return report;
        }));
    }
}

void rodriguez_chebyshev_tasks(Tasks& out, const SuiteOptions& o)
{
    for (unsigned m : range_or(o.m, 0, 6)) {
        for (const auto& x : o.grid) {
            for (const auto& y : o.grid) {
                for (const auto& t : o.grid) {
                    if (lacunary_denominator(x, y, 2).evaluate(t) == 0) {
                        continue;
                    }
                    out.push_back(guarded("rodriguez-chebyshev", {{"m", str(m)}},
                                          [=] { return verify_rodriguez_chebyshev(m, x, y, t); }));
                }
            }
        }
    }
}

void rodriguez_hermite_tasks(Tasks& out, const SuiteOptions& o)
{
    const std::size_t order = o.order ? o.order : 12;
    for (unsigned n : range_or(o.n, 2, 3)) {
        for (unsigned m : range_or(o.m, 0, 6)) {
            for (const auto& x : o.grid) {
                for (const auto& y : o.grid) {
                    for (const auto& t : o.grid) {
                        out.push_back(guarded("rodriguez-hermite", {{"m", str(m)}, {"n", str(n)}},
                                              [=] { return verify_rodriguez_hermite(m, n, x, y, t, order); }));
                    }
                }
            }
        }
    }
}

void rodriguez_legendre_tasks(Tasks& out, const SuiteOptions& o)
{
    for (unsigned m : range_or(o.m, 0, 4)) {
        for (const auto& x : o.grid) {
            for (const auto& y : o.grid) {
                for (const auto& t : o.grid) {
                    if (lacunary_denominator(x, y, 2).evaluate(t) <= 0) {
                        continue;
                    }
                    out.push_back(guarded("rodriguez-legendre", {{"m", str(m)}},
                                          [=] { return verify_rodriguez_legendre(m, x, y, t); }));
                }
            }
        }
    }
}

void rodriguez_legendre_lacunary_tasks(Tasks& out, const SuiteOptions& o)
{
    for (unsigned m : range_or(o.m, 2, 3)) {
        for (unsigned n : range_or(o.n, 0, 4)) {
            for (const auto& x : o.grid) {
                for (const auto& y : o.grid) {
                    for (const auto& t : o.grid) {
                        if (lacunary_denominator(x, y, m).evaluate(t) <= 0) {
                            continue;
                        }
                        out.push_back(guarded("rodriguez-legendre-lacunary", {{"n", str(n)}, {"m", str(m)}},
                                              [=] { return verify_rodriguez_legendre_lacunary(n, m, x, y, t); }));
                    }
                }
            }
        }
    }
}

void shifted_tasks(Tasks& out, const SuiteOptions& o, bool hermite)
{
    const std::size_t order = o.order ? o.order : 9;
    for (unsigned l : range_or(o.l, 0, 3)) {
        for (const auto& x : o.grid) {
            for (const auto& y : o.grid) {
                if (hermite) {
                    out.push_back(guarded("shifted-genfun-hermite", {{"l", str(l)}},
                                          [=] { return verify_shifted_genfun_hermite(l, x, y, order); }));
                } else {
                    out.push_back(guarded("shifted-genfun-chebyshev", {{"l", str(l)}},
                                          [=] { return verify_shifted_genfun_chebyshev(l, x, y, order); }));
                }
            }
        }
    }
}

void rainville_tasks(Tasks& out, const SuiteOptions& o)
{
    const std::size_t order = o.order ? o.order : 9;
    for (unsigned m : range_or(o.m, 2, 3)) {
        for (unsigned l : range_or(o.l, 0, 3)) {
            for (const auto& x : o.grid) {
                for (const auto& y : o.grid) {
                    out.push_back(guarded("rainville-lacunary", {{"l", str(l)}, {"m", str(m)}},
                                          [=] { return verify_rainville_lacunary(l, m, x, y, order); }));
                }
            }
        }
    }
}

const std::vector<Rational>& scaling_lambdas()
{
    static const std::vector<Rational> values{Rational(-3, 2), Rational(1, 2), Rational(1), Rational(2)};
    return values;
}

void scaling_legendre_tasks(Tasks& out, const SuiteOptions& o)
{
    for (unsigned n : range_or(o.n, 0, 12)) {
        for (const auto& lam : scaling_lambdas()) {
            for (const auto& x : o.grid) {
                out.push_back(guarded("scaling-legendre", {{"n", str(n)}},
                                      [=] { return legendre_scaling_classical(n, lam, x); }));
            }
        }
    }
}

void scaling_legendre2_tasks(Tasks& out, const SuiteOptions& o)
{
    for (unsigned n : range_or(o.n, 0, 12)) {
        for (const auto& lam : scaling_lambdas()) {
            for (const auto& x : o.grid) {
                for (const auto& y : o.grid) {
                    out.push_back(guarded("scaling-legendre2", {{"n", str(n)}},
                                          [=] { return legendre_scaling_2var(n, lam, x, y); }));
                }
            }
        }
    }
}

void scaling_gegenbauer_tasks(Tasks& out, const SuiteOptions& o)
{
    for (unsigned n : range_or(o.n, 0, 12)) {
        for (const Rational& g : {Rational(1, 2), Rational(1), Rational(3)}) {
            for (const auto& lam : scaling_lambdas()) {
                for (const auto& x : o.grid) {
                    out.push_back(guarded("scaling-gegenbauer", {{"n", str(n)}},
                                          [=] { return gegenbauer_scaling(n, g, lam, x); }));
                }
            }
        }
    }
}

void hermite_property_tasks(Tasks& out, const SuiteOptions& o)
{
    const auto& grid = o.grid;
    for (unsigned n : range_or(o.n, 0, 16)) {
        for (const Rational& a : {Rational(-2), Rational(-1), Rational(1, 2), Rational(3)}) {
            for (const auto& x : grid) {
                for (const auto& y : grid) {
                    out.push_back(guarded("hermite-dilatation", {{"n", str(n)}},
                                          [=] { return verify_hermite_dilatation(n, a, x, y); }));
                }
            }
        }
    }
    for (unsigned n : range_or(o.n, 0, 12)) {
        for (unsigned r = 0; r <= n; ++r) {
            out.push_back(guarded("hermite-repeated-derivative", {{"n", str(n)}, {"r", str(r)}},
                                  [=] { return verify_hermite_repeated_derivative(n, r); }));
        }
    }
    for (unsigned n : range_or(o.n, 0, 12)) {
        for (const Rational& lam : {Rational(-3), Rational(-3, 2), Rational(1, 2), Rational(1), Rational(2)}) {
            for (const auto& x : grid) {
                for (const auto& y : grid) {
                    out.push_back(guarded("hermite-multiplication", {{"n", str(n)}},
                                          [=] { return verify_hermite_multiplication(n, lam, x, y); }));
                }
            }
        }
    }
    for (unsigned n : range_or(o.n, 0, 16)) {
        for (const auto& y : grid) {
            out.push_back(guarded("hermite-heat-operator", {{"n", str(n)}}, [=] { return verify_heat_operator(n, y); }));
        }
    }
    for (unsigned n : range_or(o.n, 0, 19)) {
        for (const auto& x : grid) {
            for (const auto& y : grid) {
                out.push_back(guarded("hermite-recurrence", {{"n", str(n)}},
                                      [=] { return verify_hermite_recurrence(n, x, y); }));
            }
        }
    }
    const auto ns = range_or(o.n, 0, 20);
    for (const auto& x : grid) {
        for (const auto& y : grid) {
            out.push_back(guarded("hermite-reductions", xy(x, y), [=] {
                auto report = make_report("hermite-reductions", xy(x, y));
                const std::vector<Rational> pair{x, y};
                for (unsigned n : ns) {
                    const Rational h = hermite2_eval(n, x, y);
                    record_exact(report, "lacunary n=" + str(n), hermite_lacunary_eval(n, 2, x, y), h);
                    record_exact(report, "multivar n=" + str(n), hermite_multivar_eval(n, pair), h);
                }
                return report;
            }));
        }
    }
}

constexpr double kBesselTolerance = 1e-10;
constexpr double kBesselDerivativeTolerance = 1e-6;

void umbral_tasks(Tasks& out, const SuiteOptions& o)
{
    const auto ns = range_or(o.n, 0, 20);
    for (const auto& x : o.grid) {
        for (const auto& y : o.grid) {
            out.push_back(guarded("umbral-hermite", xy(x, y), [=] {
                auto report = make_report("umbral-hermite", xy(x, y));
                for (unsigned n : ns) {
                    record_exact(report, "n=" + str(n), umbral_hermite_eval(n, x, y), hermite2_eval(n, x, y));
                }
                return report;
            }));
        }
    }
    const std::size_t vacuum_order = o.order ? o.order : 24;
    for (const auto& y : o.grid) {
        out.push_back(guarded("umbral-vacuum-genfun", {{"y", to_string(y)}},
                              [=] { return umbral_vacuum_genfun_check(y, vacuum_order); }));
    }
    for (const auto& alpha : o.grid) {
        for (const auto& beta : o.grid) {
            for (const auto& x : o.grid) {
                if (abs(alpha * x) + abs(beta * x * x) > 2) {
                    continue;
                }
                ParamList params{{"alpha", to_string(alpha)}, {"beta", to_string(beta)}, {"x", to_string(x)}};
                out.push_back(guarded("bessel-j0-u2n", params, [=] {
                    auto report = make_report("bessel-j0-u2n", params, kBesselTolerance);
                    const PartialSum s = bessel_j0_via_u2n(alpha, beta, to_real(x), 40);
                    record_deviation(report, "N=40",
                                     {{"series", to_string(s.value, 25)}, {"reference", to_string(s.reference, 25)}},
                                     s.deviation.convert_to<double>(), s.deviation <= kBesselTolerance);
                    return report;
                }));
                out.push_back(guarded("bessel-j0-derivative-u2n", params, [=] {
                    auto report = make_report("bessel-j0-derivative-u2n", params, kBesselDerivativeTolerance);
                    const PartialSum s = bessel_j0_derivative_via_u2n(1, alpha, beta, to_real(x), 40);
                    record_deviation(report, "m=1",
                                     {{"series", to_string(s.value, 25)}, {"finite_difference", to_string(s.reference, 25)}},
                                     s.deviation.convert_to<double>(), s.deviation <= kBesselDerivativeTolerance);
                    return report;
                }));
            }
        }
    }
}

void operational_legendre_tasks(Tasks& out, const SuiteOptions& o)
{
    for (unsigned n : range_or(o.n, 0, 16)) {
        for (const auto& x : o.grid) {
            for (const auto& y : o.grid) {
                out.push_back(guarded("operational-legendre", {{"n", str(n)}},
                                      [=] { return dilation_gamma_operator(n, x, y); }));
            }
        }
    }
}

void asymptotic_tasks(Tasks& out, const SuiteOptions& o)
{
    const std::vector<unsigned> hermite_ns{8, 16, 32, 64};
    const std::vector<unsigned> legendre_ns{8, 16, 32};
    for (const auto& [x, y] : {std::pair{Rational(1), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(1)}}) {
        out.push_back(guarded("asymptotic-hermite", xy(x, y), [=] { return asymptotic_hermite(x, y, hermite_ns); }));
    }
    const std::size_t rule_size = o.rule_size;
    for (const auto& [x, y] : {std::pair{Rational(1), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(1)}}) {
        out.push_back(guarded("asymptotic-legendre", xy(x, y),
                              [=] { return asymptotic_legendre(x, y, legendre_ns, rule_size); }));
    }
    const std::vector<Rational> gammas{Rational(10), Rational(100), Rational(1000)};
    for (const auto& [x, n] : {std::pair{Rational(1), 1u}, {Rational(1), 2u}, {Rational(1), 3u}, {Rational(0), 2u}}) {
        out.push_back(guarded("asymptotic-gegenbauer", {{"x", to_string(x)}, {"n", str(n)}},
                              [=] { return asymptotic_gegenbauer(x, n, gammas); }));
    }
}

using Builder = void (*)(Tasks&, const SuiteOptions&);

const std::vector<std::pair<std::string, Builder>>& registry()
{
    static const std::vector<std::pair<std::string, Builder>> suites{
        {"genfun", genfun_tasks},
        {"laplace", laplace_tasks},
        {"rodriguez-chebyshev", rodriguez_chebyshev_tasks},
        {"rodriguez-hermite", rodriguez_hermite_tasks},
        {"rodriguez-legendre", rodriguez_legendre_tasks},
        {"rodriguez-legendre-lacunary", rodriguez_legendre_lacunary_tasks},
        {"shifted-hermite", [](Tasks& t, const SuiteOptions& o) { shifted_tasks(t, o, true); }},
        {"shifted-chebyshev", [](Tasks& t, const SuiteOptions& o) { shifted_tasks(t, o, false); }},
        {"rainville", rainville_tasks},
        {"scaling-legendre", scaling_legendre_tasks},
        {"scaling-legendre2", scaling_legendre2_tasks},
        {"scaling-gegenbauer", scaling_gegenbauer_tasks},
        {"hermite-properties", hermite_property_tasks},
        {"umbral", umbral_tasks},
        {"operational-legendre", operational_legendre_tasks},
        {"asymptotic", asymptotic_tasks},
    };
    return suites;
}

} // namespace

std::vector<unsigned> IndexRange::values() const
{
    std::vector<unsigned> out;
    for (unsigned v = lo; v <= hi; ++v) {
        out.push_back(v);
    }
    return out;
}

IndexRange parse_range(std::string_view text)
{
    auto parse_one = [&](std::string_view s) {
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            throw UsageError("malformed range '" + std::string(text) + "'");
        }
        return v;
    };
    const auto dots = text.find("..");
    IndexRange r;
    if (dots == std::string_view::npos) {
        r.lo = r.hi = parse_one(text);
    } else {
        r.lo = parse_one(text.substr(0, dots));
        r.hi = parse_one(text.substr(dots + 2));
    }
    if (r.lo > r.hi) {
        throw UsageError("empty range '" + std::string(text) + "'");
    }
    return r;
}

std::vector<Rational> small_grid()
{
    return {Rational(-3, 2), Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
}

std::vector<std::string> suite_names()
{
    std::vector<std::string> names;
    for (const auto& [name, builder] : registry()) {
        names.push_back(name);
    }
    names.push_back("all");
    return names;
}

std::vector<VerificationReport> run_parallel(const std::vector<std::function<VerificationReport()>>& tasks,
                                             unsigned jobs)
{
    std::vector<VerificationReport> results(tasks.size());
    if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, tasks.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            results[i] = tasks[i]();
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++) {
                results[i] = tasks[i]();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    return results;
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options)
{
    if (options.grid.empty()) {
        throw UsageError("the parameter grid is empty");
    }
    Tasks tasks;
    bool found = false;
    for (const auto& [suite, builder] : registry()) {
        if (name == "all" || name == suite) {
            builder(tasks, options);
            found = true;
        }
    }
    if (!found) {
        throw UsageError("unknown suite '" + name + "'");
    }
    return run_parallel(tasks, options.jobs);
}

} // namespace lacunary
