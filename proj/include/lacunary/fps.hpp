#pragma once

#include "lacunary/poly.hpp"
#include "lacunary/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace lacunary {

inline constexpr std::size_t kDefaultSeriesOrder = 32;

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N + O(t^(N+1)) over
/// Rational. Immutable once built; every operation returns a new series.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order = kDefaultSeriesOrder);
    /// Order is coeffs.size() - 1; throws UsageError on an empty list.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& c, std::size_t order = kDefaultSeriesOrder);
    /// The variable t itself (order >= 1 keeps it nonzero).
    static TruncatedSeries variable(std::size_t order = kDefaultSeriesOrder);
    /// Polynomial truncated to the order.
    static TruncatedSeries from_poly(const Poly1& p, std::size_t order = kDefaultSeriesOrder);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    std::span<const Rational> coeffs() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    std::vector<Rational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c);
/// Cauchy product truncated at the common order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Throws SingularSeriesError when c_0 = 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);
/// a^exponent for a rational exponent; requires c_0 = 1.
TruncatedSeries series_pow(const TruncatedSeries& a, const Rational& exponent);
/// a^(-1/2); requires c_0 = 1.
TruncatedSeries series_inv_sqrt(const TruncatedSeries& a);
/// exp(a); requires c_0 = 0.
TruncatedSeries series_exp(const TruncatedSeries& a);
/// k-th formal derivative; the result has order N - k.
TruncatedSeries series_derivative(const TruncatedSeries& a, std::size_t k);
Rational series_coefficient(const TruncatedSeries& a, std::size_t n);
/// Same coefficients cut (or zero-padded) to a new order.
TruncatedSeries series_truncate(const TruncatedSeries& a, std::size_t order);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return series_add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return series_sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }
inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) { return series_scale(a, c); }

inline TruncatedSeries lift(const Rational& c, const TruncatedSeries& like)
{
    return TruncatedSeries::constant(c, like.order());
}

} // namespace lacunary
