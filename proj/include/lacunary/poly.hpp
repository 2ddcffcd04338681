#pragma once

#include "lacunary/rational.hpp"
#include "lacunary/real.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lacunary {

namespace detail {

// like^0 ... like^max_exponent, using only ring multiplication.
template <class T>
std::vector<T> power_table(const T& like, unsigned max_exponent)
{
    std::vector<T> powers;
    powers.reserve(max_exponent + 1);
    powers.push_back(lift(Rational(1), like));
    for (unsigned k = 1; k <= max_exponent; ++k) {
        powers.push_back(powers.back() * like);
    }
    return powers;
}

} // namespace detail

/// Dense polynomial in one variable over Rational. Trailing zeros are trimmed,
/// so the zero polynomial has no coefficients and degree -1.
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(std::vector<Rational> coeffs);

    static Poly1 monomial(const Rational& c, unsigned k);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    std::span<const Rational> coeffs() const { return coeffs_; }

    Poly1 derivative(unsigned r = 1) const;

    /// Horner evaluation in any ring that can lift a Rational.
    template <class T>
    T evaluate(const T& t) const
    {
        T result = lift(Rational(0), t);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            result = result * t + lift(*it, t);
        }
        return result;
    }

    friend Poly1 operator+(const Poly1& a, const Poly1& b);
    friend Poly1 operator-(const Poly1& a, const Poly1& b);
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    friend Poly1 operator*(const Rational& c, const Poly1& a);
    friend bool operator==(const Poly1& a, const Poly1& b) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// "3 t^2 - 1/2" style rendering.
std::string to_string(const Poly1& p, const std::string& var = "x");

/// Sparse polynomial in (x, y) over Rational. Zero coefficients are never stored.
class PolyXY {
public:
    using Exponents = std::pair<unsigned, unsigned>;
    using TermMap = std::map<Exponents, Rational>;

    PolyXY() = default;

    static PolyXY from_x(const Poly1& p);

    /// Accumulates c x^i y^j into the polynomial.
    void add_term(unsigned i, unsigned j, const Rational& c);

    const TermMap& terms() const { return terms_; }
    Rational coefficient(unsigned i, unsigned j) const;
    bool is_zero() const { return terms_.empty(); }
    unsigned max_x_exponent() const;
    unsigned max_y_exponent() const;

    PolyXY derivative_x(unsigned r = 1) const;

    /// Polynomial in x alone, obtained by substituting a value for y.
    Poly1 substitute_y(const Rational& y) const;

    template <class T>
    T evaluate(const T& x, const T& y) const
    {
        T result = lift(Rational(0), x);
        if (terms_.empty()) {
            return result;
        }
        auto xp = detail::power_table(x, max_x_exponent());
        auto yp = detail::power_table(y, max_y_exponent());
        for (const auto& [e, c] : terms_) {
            result = result + lift(c, x) * xp[e.first] * yp[e.second];
        }
        return result;
    }

    friend PolyXY operator+(const PolyXY& a, const PolyXY& b);
    friend PolyXY operator-(const PolyXY& a, const PolyXY& b);
    friend PolyXY operator*(const PolyXY& a, const PolyXY& b);
    friend PolyXY operator*(const Rational& c, const PolyXY& a);
    friend bool operator==(const PolyXY& a, const PolyXY& b) = default;

private:
    TermMap terms_;
};

/// Highest total degree first, ties broken by the x exponent: "3/8 x^2 - 1/2 y".
std::string to_string(const PolyXY& p);

/// Sparse polynomial in p variables x1..xp over Rational.
class PolyMulti {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rational>;

    explicit PolyMulti(std::size_t arity);

    std::size_t arity() const { return arity_; }
    void add_term(const Exponents& exps, const Rational& c);
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Exponents& exps) const;
    bool is_zero() const { return terms_.empty(); }

    template <class T>
    T evaluate(std::span<const T> xs) const
    {
        check_arity(xs.size());
        T result = lift(Rational(0), xs.front());
        std::vector<std::vector<T>> powers;
        powers.reserve(arity_);
        for (std::size_t v = 0; v < arity_; ++v) {
            unsigned top = 0;
            for (const auto& [e, c] : terms_) {
                top = std::max(top, e[v]);
            }
            powers.push_back(detail::power_table(xs[v], top));
        }
        for (const auto& [e, c] : terms_) {
            T term = lift(c, xs.front());
            for (std::size_t v = 0; v < arity_; ++v) {
                if (e[v] != 0) {
                    term = term * powers[v][e[v]];
                }
            }
            result = result + term;
        }
        return result;
    }

    friend bool operator==(const PolyMulti& a, const PolyMulti& b) = default;

private:
    void check_arity(std::size_t n) const;

    std::size_t arity_;
    TermMap terms_;
};

std::string to_string(const PolyMulti& p);

} // namespace lacunary
