#pragma once

#include "endpoint/numcore.hpp"

namespace endpoint {

// Psi(omega; x) = 2^{1/3} e^{-x^3/24 - omega x/2} Ai(2^{1/3}(omega + x^2/8)), the
// contour integral (1/2 pi i) int exp(z^3/6 - x z^2/4 - omega z) dz in closed form.
double psi_dot(double omega, double x);
// d/d omega of psi_dot.
double psi_dot_domega(double omega, double x);

// Phi_{omega omega'}(s, x) = -(1/2) int_0^inf [(d_w - d_w') Psi(w + s/2 + y; x) Psi(w' + s/2 + y; -x)
//                                            + (d_w + d_w') Psi(w + s/2 - y; x) Psi(w' + s/2 + y; -x)] dy
double phi_dot(double omega, double omega_prime, double s, double x);

// Both sides of the t-derivative identity for Phi. literal: lhs = -d/dt Phi_{x2 x1}(m, t);
// corrected: lhs = d/dt Phi_{x1 x2}(m, t). rhs = 2^{-5/3} psi(2^{1/3} x1; -2^{-4/3} t, 2^{-2/3} m)
// psi(2^{1/3} x2; 2^{-4/3} t, 2^{-2/3} m) in both cases.
struct IdentitySides {
    double lhs = 0.0;
    double rhs = 0.0;
};
IdentitySides phi_t_identity_literal(double x1, double x2, double m, double t);
IdentitySides phi_t_identity(double x1, double x2, double m, double t);

enum class DotsenkoRoute { appendix_c, main_density };

struct DotsenkoEval {
    double x = 0.0;
    double W = 0.0;
    DotsenkoRoute route = DotsenkoRoute::appendix_c;
};

// W(x) = int F_1(s) <rho_s, Phi(s, x)> ds over s in [-10, 8], |x| <= 2.5.
// The y-integral of Phi is taken outside the omega bilinear form. nodes in
// [60, 512]: coarser Nystrom grids lose positive definiteness near s = -10.
DotsenkoEval w_dist(double x, int nodes = 80, bool parallel = true);
// int_x^inf P(w) dw from the marginal density.
DotsenkoEval w_main_density(double x);

}  // namespace endpoint
