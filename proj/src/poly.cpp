#include "lacunary/poly.hpp"

#include "lacunary/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lacunary {

namespace {

// Appends one signed term to a rendering; `monomial` is empty for constants.
void append_term(std::ostringstream& out, bool first, const Rational& c, const std::string& monomial)
{
    bool negative = c < 0;
    Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
        if (negative) {
            out << '-';
        }
    } else {
        out << (negative ? " - " : " + ");
    }
    if (monomial.empty()) {
        out << to_string(magnitude);
    } else if (magnitude == 1) {
        out << monomial;
    } else {
        out << to_string(magnitude) << ' ' << monomial;
    }
}

std::string power_string(const std::string& var, unsigned e)
{
    if (e == 0) {
        return {};
    }
    return e == 1 ? var : var + "^" + std::to_string(e);
}

std::string join_factors(const std::vector<std::string>& factors)
{
    std::string s;
    for (const auto& f : factors) {
        if (f.empty()) {
            continue;
        }
        if (!s.empty()) {
            s += ' ';
        }
        s += f;
    }
    return s;
}

} // namespace

Poly1::Poly1(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Poly1 Poly1::monomial(const Rational& c, unsigned k)
{
    std::vector<Rational> coeffs(k + 1, Rational(0));
    coeffs[k] = c;
    return Poly1(std::move(coeffs));
}

void Poly1::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Poly1 Poly1::derivative(unsigned r) const
{
    if (static_cast<int>(r) > degree()) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() - r);
    for (std::size_t k = r; k < coeffs_.size(); ++k) {
        Rational falling = 1;
        for (unsigned j = 0; j < r; ++j) {
            falling *= static_cast<unsigned long>(k - j);
        }
        out[k - r] = coeffs_[k] * falling;
    }
    return Poly1(std::move(out));
}

Poly1 operator+(const Poly1& a, const Poly1& b)
{
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = a.coefficient(k) + b.coefficient(k);
    }
    return Poly1(std::move(out));
}

Poly1 operator-(const Poly1& a, const Poly1& b)
{
    return a + Rational(-1) * b;
}

Poly1 operator*(const Poly1& a, const Poly1& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly1(std::move(out));
}

Poly1 operator*(const Rational& c, const Poly1& a)
{
    std::vector<Rational> out(a.coeffs_);
    for (auto& v : out) {
        v *= c;
    }
    return Poly1(std::move(out));
}

std::string to_string(const Poly1& p, const std::string& var)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coefficient(static_cast<std::size_t>(k));
        if (c == 0) {
            continue;
        }
        append_term(out, first, c, power_string(var, static_cast<unsigned>(k)));
        first = false;
    }
    return out.str();
}

PolyXY PolyXY::from_x(const Poly1& p)
{
    PolyXY out;
    for (int k = 0; k <= p.degree(); ++k) {
        out.add_term(static_cast<unsigned>(k), 0, p.coefficient(static_cast<std::size_t>(k)));
    }
    return out;
}

void PolyXY::add_term(unsigned i, unsigned j, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Rational PolyXY::coefficient(unsigned i, unsigned j) const
{
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned PolyXY::max_x_exponent() const
{
    unsigned top = 0;
    for (const auto& [e, c] : terms_) {
        top = std::max(top, e.first);
    }
    return top;
}

unsigned PolyXY::max_y_exponent() const
{
    unsigned top = 0;
    for (const auto& [e, c] : terms_) {
        top = std::max(top, e.second);
    }
    return top;
}

PolyXY PolyXY::derivative_x(unsigned r) const
{
    PolyXY out;
    for (const auto& [e, c] : terms_) {
        if (e.first < r) {
            continue;
        }
        Rational falling = 1;
        for (unsigned j = 0; j < r; ++j) {
            falling *= e.first - j;
        }
        out.add_term(e.first - r, e.second, c * falling);
    }
    return out;
}

Poly1 PolyXY::substitute_y(const Rational& y) const
{
    std::vector<Rational> coeffs(max_x_exponent() + 1);
    for (const auto& [e, c] : terms_) {
        coeffs[e.first] += c * pow(y, e.second);
    }
    return Poly1(std::move(coeffs));
}

PolyXY operator+(const PolyXY& a, const PolyXY& b)
{
    PolyXY out = a;
    for (const auto& [e, c] : b.terms_) {
        out.add_term(e.first, e.second, c);
    }
    return out;
}

PolyXY operator-(const PolyXY& a, const PolyXY& b)
{
    return a + Rational(-1) * b;
}

PolyXY operator*(const PolyXY& a, const PolyXY& b)
{
    PolyXY out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        }
    }
    return out;
}

PolyXY operator*(const Rational& c, const PolyXY& a)
{
    PolyXY out;
    for (const auto& [e, v] : a.terms_) {
        out.add_term(e.first, e.second, c * v);
    }
    return out;
}

std::string to_string(const PolyXY& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::vector<std::pair<PolyXY::Exponents, Rational>> ordered(p.terms().begin(), p.terms().end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        unsigned da = a.first.first + a.first.second;
        unsigned db = b.first.first + b.first.second;
        if (da != db) {
            return da > db;
        }
        return a.first.first > b.first.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        append_term(out, first, c, join_factors({power_string("x", e.first), power_string("y", e.second)}));
        first = false;
    }
    return out.str();
}

PolyMulti::PolyMulti(std::size_t arity) : arity_(arity)
{
    if (arity == 0) {
        throw UsageError("multivariate polynomial needs at least one variable");
    }
}

void PolyMulti::check_arity(std::size_t n) const
{
    if (n != arity_) {
        throw UsageError("expected " + std::to_string(arity_) + " arguments, got " + std::to_string(n));
    }
}

void PolyMulti::add_term(const Exponents& exps, const Rational& c)
{
    check_arity(exps.size());
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Rational PolyMulti::coefficient(const Exponents& exps) const
{
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string to_string(const PolyMulti& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::vector<std::pair<PolyMulti::Exponents, Rational>> ordered(p.terms().begin(), p.terms().end());
    auto total = [](const PolyMulti::Exponents& e) {
        unsigned s = 0;
        for (unsigned v : e) {
            s += v;
        }
        return s;
    };
    std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
        unsigned da = total(a.first);
        unsigned db = total(b.first);
        if (da != db) {
            return da > db;
        }
        return a.first > b.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        std::vector<std::string> factors;
        for (std::size_t v = 0; v < e.size(); ++v) {
            factors.push_back(power_string("x" + std::to_string(v + 1), e[v]));
        }
        append_term(out, first, c, join_factors(factors));
        first = false;
    }
    return out.str();
}

} // namespace lacunary
