#include "lacunary/legendre_family.hpp"

#include "lacunary/errors.hpp"
#include "lacunary/hermite.hpp"

#include <string>
#include <vector>

namespace lacunary {

namespace {

Rational sign(unsigned k)
{
    return k % 2 == 0 ? Rational(1) : Rational(-1);
}

void compositions(unsigned remaining, std::size_t part, std::size_t p, std::vector<unsigned>& k,
                  const std::function<Rational(unsigned)>& weight, PolyMulti& out)
{
    if (part == 0) {
        // k_1 absorbs whatever is left.
        k[0] = remaining;
        unsigned total = 0;
        Rational denom = 1;
        for (unsigned v : k) {
            total += v;
            denom *= factorial(v);
        }
        out.add_term(k, weight(total) / denom);
        return;
    }
    const unsigned s = static_cast<unsigned>(part + 1);
    for (unsigned ks = 0; ks * s <= remaining; ++ks) {
        k[part] = ks;
        compositions(remaining - ks * s, part - 1, p, k, weight, out);
    }
    k[part] = 0;
}

void require_arity(const FamilyTag& tag, std::size_t got)
{
    if (got != tag.arity()) {
        throw UsageError(tag.name() + " takes " + std::to_string(tag.arity()) + " argument(s), got " +
                         std::to_string(got));
    }
}

} // namespace

void FamilyTag::validate() const
{
    switch (kind) {
    case Kind::Humbert:
        if (index < 2) {
            throw UsageError("Humbert lacunarity m must be at least 2");
        }
        break;
    case Kind::MultiU:
        if (index < 1) {
            throw UsageError("multi-variable U needs p >= 1");
        }
        break;
    case Kind::Gegenbauer:
        if (gamma <= 0) {
            throw DomainError("Gegenbauer parameter must be positive, got " + to_string(gamma));
        }
        break;
    default:
        break;
    }
}

std::size_t FamilyTag::arity() const
{
    switch (kind) {
    case Kind::MultiU:
        return index;
    case Kind::Gegenbauer:
        return 1;
    default:
        return 2;
    }
}

Rational FamilyTag::weight_exponent() const
{
    switch (kind) {
    case Kind::ChebyshevU:
    case Kind::Humbert:
    case Kind::MultiU:
        return 0;
    case Kind::Legendre2:
        return Rational(-1, 2);
    case Kind::Gegenbauer:
        return gamma - 1;
    case Kind::U2Poly:
        break;
    }
    throw UsageError("2U_n has no Laplace representation over a Hermite kernel");
}

std::string FamilyTag::name() const
{
    switch (kind) {
    case Kind::ChebyshevU:
        return "chebyshev-u2";
    case Kind::Humbert:
        return "humbert(m=" + std::to_string(index) + ")";
    case Kind::MultiU:
        return "multi-u(p=" + std::to_string(index) + ")";
    case Kind::Legendre2:
        return "legendre2";
    case Kind::Gegenbauer:
        return "gegenbauer(gamma=" + to_string(gamma) + ")";
    case Kind::U2Poly:
        return "u2n";
    }
    return "unknown";
}

Rational half_integer_gamma(unsigned k)
{
    return factorial(2 * k) / (pow(Rational(4), k) * factorial(k));
}

Rational pochhammer(const Rational& g, unsigned k)
{
    Rational out = 1;
    for (unsigned j = 0; j < k; ++j) {
        out *= g + j;
    }
    return out;
}

PolyXY chebyshev_u2_table(unsigned n)
{
    return humbert_table(n, 2);
}

Rational chebyshev_u2_eval(unsigned n, const Rational& x, const Rational& y)
{
    return chebyshev_u2_table(n).evaluate(x, y);
}

PolyXY humbert_table(unsigned n, unsigned m)
{
    if (m < 2) {
        throw UsageError("Humbert lacunarity m must be at least 2, got " + std::to_string(m));
    }
    PolyXY out;
    for (unsigned r = 0; m * r <= n; ++r) {
        Rational c = sign(n) * sign((m - 1) * r) * factorial(n - (m - 1) * r) / (factorial(n - m * r) * factorial(r));
        out.add_term(n - m * r, r, c);
    }
    return out;
}

Rational humbert_eval(unsigned n, unsigned m, const Rational& x, const Rational& y)
{
    return humbert_table(n, m).evaluate(x, y);
}

PolyMulti composition_table(unsigned n, std::size_t p, const std::function<Rational(unsigned)>& weight)
{
    PolyMulti out(p);
    std::vector<unsigned> k(p, 0);
    compositions(n, p - 1, p, k, weight, out);
    return out;
}

PolyMulti multivar_u_table(unsigned n, std::size_t p)
{
    return composition_table(n, p, [](unsigned j) { return sign(j) * factorial(j); });
}

Rational multivar_u_eval(unsigned n, std::span<const Rational> xs)
{
    if (xs.empty()) {
        throw UsageError("multivar_u_eval: at least one argument is required");
    }
    return multivar_u_table(n, xs.size()).evaluate(xs);
}

PolyXY legendre2_table(unsigned n)
{
    PolyXY out;
    for (unsigned r = 0; 2 * r <= n; ++r) {
        // (-1)^n (-1)^r = (-1)^(n-r)
        Rational c = sign(n - r) * half_integer_gamma(n - r) / (factorial(n - 2 * r) * factorial(r));
        out.add_term(n - 2 * r, r, c);
    }
    return out;
}

Rational legendre2_eval(unsigned n, const Rational& x, const Rational& y)
{
    return legendre2_table(n).evaluate(x, y);
}

PolyMulti legendre_multivar_table(unsigned n, std::size_t p)
{
    return composition_table(n, p, [](unsigned j) { return sign(j) * half_integer_gamma(j); });
}

Poly1 legendre_classical_table(unsigned n)
{
    std::vector<Rational> coeffs(n + 1, Rational(0));
    const PolyXY table = legendre2_table(n);
    for (const auto& [e, c] : table.terms()) {
        coeffs[e.first] += c * pow(Rational(-2), e.first);
    }
    return Poly1(std::move(coeffs));
}

Rational legendre_classical(unsigned n, const Rational& x)
{
    return legendre2_eval(n, -2 * x, 1);
}

PolyXY u2n_table(unsigned n)
{
    PolyXY out;
    for (unsigned r = 0; 2 * r <= n; ++r) {
        Rational c = sign(n + r) / (factorial(n - 2 * r) * factorial(n - r) * factorial(r));
        out.add_term(n - 2 * r, r, c);
    }
    return out;
}

Rational u2n_eval(unsigned n, const Rational& alpha, const Rational& beta)
{
    return u2n_table(n).evaluate(alpha, beta);
}

Poly1 gegenbauer_table(unsigned n, const Rational& gamma)
{
    if (gamma <= 0) {
        throw DomainError("Gegenbauer parameter must be positive, got " + to_string(gamma));
    }
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (unsigned r = 0; 2 * r <= n; ++r) {
        coeffs[n - 2 * r] = sign(r) * pochhammer(gamma, n - r) * pow(Rational(2), n - 2 * r) /
                            (factorial(n - 2 * r) * factorial(r));
    }
    return Poly1(std::move(coeffs));
}

Rational gegenbauer_eval(unsigned n, const Rational& gamma, const Rational& x)
{
    return gegenbauer_table(n, gamma).evaluate(x);
}

Rational family_eval(const FamilyTag& tag, unsigned n, std::span<const Rational> args)
{
    tag.validate();
    require_arity(tag, args.size());
    switch (tag.kind) {
    case FamilyTag::Kind::ChebyshevU:
        return chebyshev_u2_eval(n, args[0], args[1]);
    case FamilyTag::Kind::Humbert:
        return humbert_eval(n, tag.index, args[0], args[1]);
    case FamilyTag::Kind::MultiU:
        return multivar_u_eval(n, args);
    case FamilyTag::Kind::Legendre2:
        return legendre2_eval(n, args[0], args[1]);
    case FamilyTag::Kind::Gegenbauer:
        return gegenbauer_eval(n, tag.gamma, args[0]);
    case FamilyTag::Kind::U2Poly:
        return u2n_eval(n, args[0], args[1]);
    }
    throw UsageError("unknown family");
}

Real laplace_route_eval(const FamilyTag& tag, unsigned n, std::span<const Rational> args, const QuadratureRule& rule)
{
    tag.validate();
    require_arity(tag, args.size());
    const Rational alpha = tag.weight_exponent();
    if (rule.alpha != alpha) {
        throw UsageError(tag.name() + " needs a rule with alpha = " + to_string(alpha) + ", got " +
                         to_string(rule.alpha));
    }
    std::vector<Real> a;
    for (const auto& v : args) {
        a.push_back(to_real(v));
    }
    const Real nf = to_real(factorial(n));

    switch (tag.kind) {
    case FamilyTag::Kind::ChebyshevU:
    case FamilyTag::Kind::Humbert: {
        const PolyXY h = hermite_lacunary_table({n, tag.index});
        return integrate(rule, [&](const Real& s) { return h.evaluate<Real>(-s * a[0], -s * a[1]); }) / nf;
    }
    case FamilyTag::Kind::MultiU: {
        const PolyMulti h = hermite_multivar_table(n, tag.index);
        return integrate(rule, [&](const Real& s) {
                   std::vector<Real> scaled;
                   for (const auto& v : a) {
                       scaled.push_back(-s * v);
                   }
                   return h.evaluate(std::span<const Real>(scaled));
               }) /
               nf;
    }
    case FamilyTag::Kind::Legendre2: {
        const PolyXY h = hermite2_table(n);
        return integrate(rule, [&](const Real& s) { return h.evaluate<Real>(-s * a[0], -s * a[1]); }) /
               (nf * sqrt(pi()));
    }
    case FamilyTag::Kind::Gegenbauer: {
        const PolyXY h = hermite2_table(n);
        const Real gamma_fn = boost::multiprecision::tgamma(to_real(tag.gamma));
        return integrate(rule, [&](const Real& s) { return h.evaluate<Real>(2 * s * a[0], -s); }) / (nf * gamma_fn);
    }
    case FamilyTag::Kind::U2Poly:
        break;
    }
    throw UsageError("2U_n has no Laplace representation over a Hermite kernel");
}

Real legendre_u2n_integral(unsigned n, const Real& x, const QuadratureRule& rule)
{
    if (rule.alpha != 0) {
        throw UsageError("legendre_u2n_integral needs an alpha = 0 rule, got " + to_string(rule.alpha));
    }
    const PolyXY u = u2n_table(n);
    const Real integral = integrate(rule, [&](const Real& s) { return pow(s, n) * u.evaluate<Real>(x * s, Real(1)); });
    return to_real(pow(Rational(-1, 2), static_cast<long>(n))) * integral;
}

} // namespace lacunary
