#include "lacunary/quadrature.hpp"

#include "lacunary/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace lacunary {

namespace {

struct LaguerreValue {
    Real value;      // L_N^(alpha)(x)
    Real derivative; // d/dx L_N^(alpha)(x)
};

// Three-term recurrence (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1},
// with x L_N' = N L_N - (N+alpha) L_{N-1}.
LaguerreValue laguerre(std::size_t n, const Real& alpha, const Real& x)
{
    Real prev = 1;
    Real curr = 1 + alpha - x;
    if (n == 0) {
        return {prev, Real(0)};
    }
    for (std::size_t k = 1; k < n; ++k) {
        Real next = ((2 * k + 1 + alpha - x) * curr - (k + alpha) * prev) / (k + 1);
        prev = curr;
        curr = next;
    }
    Real deriv = (n * curr - (n + alpha) * prev) / x;
    return {curr, deriv};
}

std::vector<double> seed_nodes(double alpha, std::size_t n)
{
    Eigen::VectorXd diag(static_cast<Eigen::Index>(n));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(n > 1 ? n - 1 : 0));
    for (std::size_t k = 0; k < n; ++k) {
        diag[static_cast<Eigen::Index>(k)] = 2.0 * static_cast<double>(k) + 1.0 + alpha;
        if (k + 1 < n) {
            const double kk = static_cast<double>(k + 1);
            sub[static_cast<Eigen::Index>(k)] = std::sqrt(kk * (kk + alpha));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    const auto& values = solver.eigenvalues();
    return {values.data(), values.data() + values.size()};
}

} // namespace

QuadratureRule build_rule(const Rational& alpha, std::size_t count)
{
    if (alpha <= -1) {
        throw DomainError("build_rule: alpha must exceed -1, got " + to_string(alpha));
    }
    if (count == 0) {
        throw UsageError("build_rule: the rule needs at least one node");
    }
    const Real a = to_real(alpha);
    const Real tolerance = pow(Real(10), -static_cast<int>(working_digits()) + 2);

    QuadratureRule rule;
    rule.alpha = alpha;
    rule.nodes.reserve(count);
    rule.weights.reserve(count);

    const Real scale = boost::multiprecision::tgamma(Real(count) + a + 1) / to_real(factorial(count));
    for (double seed : seed_nodes(alpha.convert_to<double>(), count)) {
        Real x = seed;
        LaguerreValue l = laguerre(count, a, x);
        for (int iter = 0; iter < 100; ++iter) {
            Real step = l.value / l.derivative;
            x -= step;
            l = laguerre(count, a, x);
            if (abs(step) <= tolerance * x) {
                break;
            }
        }
        rule.nodes.push_back(x);
        rule.weights.push_back(scale / (x * l.derivative * l.derivative));
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (!(rule.nodes[i] > 0) || (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1]))) {
            throw Error("build_rule: Newton refinement failed to separate the nodes");
        }
    }
    return rule;
}

Real integrate(const QuadratureRule& rule, const std::function<Real(const Real&)>& f)
{
    Real sum = 0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        Real v = f(rule.nodes[i]);
        if (!boost::multiprecision::isfinite(v)) {
            throw EvaluationError("integrand is not finite at node " + std::to_string(i));
        }
        sum += rule.weights[i] * v;
    }
    return sum;
}

GammaEstimate gamma_check(const Real& nu, const QuadratureRule& rule)
{
    if (!(nu > 0)) {
        throw DomainError("gamma_check: nu must be positive");
    }
    const Real residual = nu - 1 - to_real(rule.alpha);
    GammaEstimate out;
    out.estimate = integrate(rule, [&](const Real& s) { return residual == 0 ? Real(1) : Real(pow(s, residual)); });
    out.reference = boost::multiprecision::tgamma(nu);
    out.deviation = abs(out.estimate - out.reference);
    return out;
}

} // namespace lacunary
