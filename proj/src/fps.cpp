#include "lacunary/fps.hpp"

#include "lacunary/errors.hpp"

#include <string>

namespace lacunary {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op)
{
    if (a.order() != b.order()) {
        throw UsageError(std::string(op) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()) + ")");
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw UsageError("a truncated series needs at least the constant coefficient");
    }
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order)
{
    std::vector<Rational> coeffs(order + 1, Rational(0));
    coeffs[0] = c;
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::variable(std::size_t order)
{
    std::vector<Rational> coeffs(order + 1, Rational(0));
    if (order >= 1) {
        coeffs[1] = 1;
    }
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::from_poly(const Poly1& p, std::size_t order)
{
    std::vector<Rational> coeffs(order + 1, Rational(0));
    for (std::size_t k = 0; k <= order; ++k) {
        coeffs[k] = p.coefficient(k);
    }
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_order(a, b, "series_add");
    std::vector<Rational> out(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) {
        out[k] = a[k] + b[k];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_order(a, b, "series_sub");
    std::vector<Rational> out(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) {
        out[k] = a[k] - b[k];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c)
{
    std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& v : out) {
        v *= c;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_order(a, b, "series_mul");
    const std::size_t n = a.order();
    std::vector<Rational> out(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a)
{
    if (a[0] == 0) {
        throw SingularSeriesError("series_reciprocal: constant term is zero");
    }
    const std::size_t n = a.order();
    const Rational inv0 = Rational(1) / a[0];
    std::vector<Rational> b(n + 1, Rational(0));
    b[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += a[j] * b[k - j];
        }
        b[k] = -acc * inv0;
    }
    return TruncatedSeries(std::move(b));
}

// b = a^e with a_0 = 1 follows from a b' = e a' b:
//   k b_k = sum_{j=1..k} ((e+1) j - k) a_j b_{k-j}
TruncatedSeries series_pow(const TruncatedSeries& a, const Rational& exponent)
{
    if (a[0] != 1) {
        throw UnsupportedNormalizationError("series_pow: constant term must be 1, got " + to_string(a[0]));
    }
    const std::size_t n = a.order();
    std::vector<Rational> b(n + 1, Rational(0));
    b[0] = 1;
    const Rational e1 = exponent + 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j] == 0) {
                continue;
            }
            acc += (e1 * static_cast<unsigned long>(j) - static_cast<unsigned long>(k)) * a[j] * b[k - j];
        }
        b[k] = acc / static_cast<unsigned long>(k);
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries series_inv_sqrt(const TruncatedSeries& a)
{
    if (a[0] != 1) {
        throw UnsupportedNormalizationError("series_inv_sqrt: constant term must be 1, got " + to_string(a[0]));
    }
    return series_pow(a, Rational(-1, 2));
}

// d/dt exp(a) = a' exp(a):  k b_k = sum_{j=1..k} j a_j b_{k-j}
TruncatedSeries series_exp(const TruncatedSeries& a)
{
    if (a[0] != 0) {
        throw UnsupportedNormalizationError("series_exp: constant term must be 0, got " + to_string(a[0]));
    }
    const std::size_t n = a.order();
    std::vector<Rational> b(n + 1, Rational(0));
    b[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j] == 0) {
                continue;
            }
            acc += static_cast<unsigned long>(j) * a[j] * b[k - j];
        }
        b[k] = acc / static_cast<unsigned long>(k);
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries series_derivative(const TruncatedSeries& a, std::size_t k)
{
    if (k > a.order()) {
        throw UsageError("series_derivative: derivative order " + std::to_string(k) + " exceeds series order " +
                         std::to_string(a.order()));
    }
    std::vector<Rational> out(a.order() - k + 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Rational falling = 1;
        for (std::size_t j = 0; j < k; ++j) {
            falling *= static_cast<unsigned long>(i + k - j);
        }
        out[i] = a[i + k] * falling;
    }
    return TruncatedSeries(std::move(out));
}

Rational series_coefficient(const TruncatedSeries& a, std::size_t n)
{
    if (n > a.order()) {
        throw UsageError("series_coefficient: index " + std::to_string(n) + " beyond order " +
                         std::to_string(a.order()));
    }
    return a[n];
}

TruncatedSeries series_truncate(const TruncatedSeries& a, std::size_t order)
{
    std::vector<Rational> out(order + 1, Rational(0));
    for (std::size_t k = 0; k <= order && k <= a.order(); ++k) {
        out[k] = a[k];
    }
    return TruncatedSeries(std::move(out));
}

} // namespace lacunary
