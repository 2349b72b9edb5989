#pragma once

#include <vector>

#include "endpoint/numcore.hpp"

namespace endpoint {

// Derivatives d[k] = g^{(k)}(x0), k = 0..order, with an error estimate.
struct Jet {
    std::vector<double> d;
    double noise = 0.0;
};

// 13-point central stencil (order <= 8); noise compares steps h and 2h.
Jet derivative_jet(const RealFn& g, double x0, int order, double h);

// Coefficients A_k of  int e^{-wH} f du ~ e^{-wH(u0)} sqrt(2pi/(wH'')) sum_k A_k w^{-k}.
// H holds H^{(j)}(u0), f holds f^{(j)}(u0); missing entries count as zero.
std::vector<double> laplace_series_interior(const std::vector<double>& H,
                                            const std::vector<double>& f, int kmax);

// Coefficients B_k of  int_a^inf e^{-wH} f du ~ e^{-wH(a)} sum_k B_k w^{-1-k}.
std::vector<double> laplace_series_boundary(const std::vector<double>& H,
                                            const std::vector<double>& f, int kmax);

// Interior minimum at u0 in (a,b); one-term correction bracket.
AsymptoticEval laplace_interior(const RealFn& H, const RealFn& f, double a, double b, double u0, double w);
// Same with analytic derivatives at u0 (H through order 8, f through order 6 for the estimate).
AsymptoticEval laplace_interior(const std::vector<double>& H, const std::vector<double>& f, double w);

// Minimum at the left endpoint a with H'(a) > 0; bracket through w^{-2}.
// H and f must be smooth on a neighbourhood of a (central stencil).
AsymptoticEval laplace_boundary(const RealFn& H, const RealFn& f, double a, double w);
// Analytic variant: H through order 5, f through order 4.
AsymptoticEval laplace_boundary(const std::vector<double>& H, const std::vector<double>& f, double w);

}  // namespace endpoint
