#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "endpoint/detail/airy_wide.hpp"
#include "endpoint/numcore.hpp"

namespace endpoint {

QuadRule gauss_legendre(int n) {
    if (n < 1 || n > 2048) throw DomainError("gauss_legendre: n must be in [1, 2048], got " + std::to_string(n));
    QuadRule rule;
    detail::gauss_legendre_wide<double>(n, rule.nodes, rule.weights);
    return rule;
}

QuadRule map_interval(const QuadRule& rule, double a, double b) {
    if (!(b > a)) throw DomainError("map_interval: need a < b");
    QuadRule out;
    out.lower = a;
    out.upper = b;
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    out.nodes.resize(rule.size());
    out.weights.resize(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
        out.nodes[i] = mid + half * rule.nodes[i];
        out.weights[i] = half * rule.weights[i];
    }
    return out;
}

QuadRule map_semi_infinite(const QuadRule& rule, double origin, double scale) {
    if (!(scale > 0)) throw DomainError("map_semi_infinite: scale must be positive");
    QuadRule out;
    out.domain = QuadRule::Domain::semi_infinite;
    out.lower = origin;
    out.upper = std::numeric_limits<double>::infinity();
    out.scale = scale;
    out.nodes.resize(rule.size());
    out.weights.resize(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double t = rule.nodes[i];
        const double d = 1.0 - t;
        out.nodes[i] = origin + scale * (1.0 + t) / d;
        out.weights[i] = rule.weights[i] * 2.0 * scale / (d * d);
    }
    return out;
}

double integrate_adaptive(const RealFn& f, double a, double b, double tol, double* error_estimate) {
    if (!(tol >= 1e-13)) throw DomainError("integrate_adaptive: tol must be >= 1e-13");
    if (a == b) {
        if (error_estimate) *error_estimate = 0.0;
        return 0.0;
    }
    double err = 0.0, l1 = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        [&](double x) { return f(x); }, a, b, 30, tol, &err, &l1);
    if (error_estimate) *error_estimate = err;
    if (!std::isfinite(value) || err > tol * std::max(1.0, l1)) {
        throw NonConvergence("integrate_adaptive: estimated error " + std::to_string(err) +
                             " exceeds tolerance on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    return value;
}

}  // namespace endpoint
