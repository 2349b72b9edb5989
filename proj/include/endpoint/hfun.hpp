#pragma once

#include "endpoint/fredholm.hpp"
#include "endpoint/lax.hpp"
#include "endpoint/numcore.hpp"

namespace endpoint {

enum class HRoute { direct, resolvent, expansion };

struct HEvaluation {
    double s = 0.0;
    double w = 0.0;
    double value = 0.0;
    HRoute route = HRoute::resolvent;
    double error_estimate = 0.0;
};

// a(y, w) = (pi / 2^{4/3}) e^{w^3/24 + w y/4} [Ai'(xi) + (w / 2^{4/3}) Ai(xi)],
// xi = 2^{-2/3} y + 2^{-8/3} w^2, for either sign of w.
struct LogAbs {
    double log_abs = 0.0;  // -inf for an exact zero
    int sign = 0;
};
LogAbs a_closed_log(double y, double w);
// Throws Overflow when |a| exceeds the double range.
double a_closed(double y, double w);

// a(y, -w) for w > 0 as the double series in (4y/w^2)^n and xi^{-3m/2},
// n < nmax, m < mmax (see pi_factor_series).
AsymptoticEval a_negative_series(double y, double w, int nmax, int mmax);

// h = (1/2w) int_0^inf lambda Phi_2(lambda / sqrt(2w); s) e^{-lambda^2/2} d lambda.
// Throws RadiusExceeded when w is too small for the Lax series.
HEvaluation h_direct(double s, double w);
HEvaluation h_direct(const LaxSeries& series, double w);

// h = a(s,w) + int_0^inf a(s + 2x, w) K(x, s) dx by adaptive quadrature with
// off-grid K, truncated 40 log-units below the integrand's peak. The error
// estimate is the distance to the Nystrom-grid sum plus the quadrature estimate.
// Requires s >= -12 and -30 <= w <= 12.
HEvaluation h_resolvent(double s, double w);
// Grid sum a(s,w) + sum_j w_j a(s + 2 x_j, w) K_j on a tabulated node.
double h_grid(const TableNode& node, double w);
double h_grid(const NystromOperator& op, double w);

// Phi_2(zeta; s) = Theta(0) + <Theta, K_s>, Theta(x) = -sin(4 zeta^3 / 3 + (s + 2x) zeta),
// on the Nystrom grid. Valid for all real zeta (no radius limit).
double phi2_resolvent(double zeta, double s);

// (sqrt(pi) / (4 w^{3/2})) e^{-int q} sum_{n < nterms} Q_n w^{-n};
// requires w >= 10, -6 <= s <= 6, 1 <= nterms <= 25.
AsymptoticEval h_expansion(double s, double w, int nterms = 2);

}  // namespace endpoint
