#pragma once

#include "lacunary/rational.hpp"
#include "lacunary/real.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace lacunary {

inline constexpr std::size_t kDefaultRuleSize = 80;

/// Generalized Gauss-Laguerre rule for the weight s^alpha e^(-s) on [0, inf).
/// Nodes are strictly increasing; the rule integrates s^k exactly (to working
/// precision) for k <= 2N - 1.
struct QuadratureRule {
    Rational alpha;
    std::vector<Real> nodes;
    std::vector<Real> weights;

    std::size_t size() const { return nodes.size(); }
};

/// Seeds the nodes with a double-precision Golub-Welsch eigensolve, then
/// polishes each one by Newton iteration on L_N^(alpha) at the working
/// precision. Throws DomainError for alpha <= -1 and UsageError for count = 0.
QuadratureRule build_rule(const Rational& alpha, std::size_t count = kDefaultRuleSize);

/// sum_i w_i f(s_i). Throws EvaluationError if f is non-finite at a node.
Real integrate(const QuadratureRule& rule, const std::function<Real(const Real&)>& f);

struct GammaEstimate {
    Real estimate;
    Real reference;
    Real deviation;
};

/// Quadrature estimate of Gamma(nu) = int e^(-s) s^(nu-1) ds using the rule's
/// weight and the residual factor s^(nu-1-alpha). Throws DomainError for nu <= 0.
GammaEstimate gamma_check(const Real& nu, const QuadratureRule& rule);

} // namespace lacunary
