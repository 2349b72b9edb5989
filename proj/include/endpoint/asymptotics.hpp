#pragma once

#include "endpoint/numcore.hpp"

namespace endpoint {

// phi(t) = t^3 - 2 t^{3/2} + 3 t^{3/4} and its derivative.
double phi_exponent(double t);
double phi_exponent_prime(double t);

struct TailExpansion {
    double t = 0.0;
    double leading = 0.0;     // log of the prefactor times e^{-(4/3) phi} t^{-p}
    double value = 0.0;       // e^{leading} (1 + correction)
    double correction = 0.0;  // 15 / (4 t^{3/4})
    double next_order = 0.0;  // value t^{-3/2}, unit coefficient
};

// tau e^{-(4/3) phi(t)} t^{-81/32} (1 + 15/(4 t^{3/4})); t >= 1.
TailExpansion phat_asym(double t);
// C e^{-(4/3) phi(t)} t^{-145/32} (1 + 15/(4 t^{3/4})), C = tau / 2; t >= 1.
TailExpansion tail_asym(double t);

enum class Side { left, right };
// right (s >= 4): the right GOE tail; left (s <= -6): nterms-term left series.
AsymptoticEval f1_tail(double s, Side side, int nterms = 5);
// F(u) for u <= -6, five terms.
AsymptoticEval f_cumulative_asym(double u);
// F_1(u) / F(u) = (u^2 / 8) sum r_j |u|^{-3j/2}, r_0 = 1, r_1 = 2 sqrt2; u <= -6.
AsymptoticEval f1_over_f_asym(double u, int nterms = 4);
// K(0, s) = (s^2/4)(1 + 2 sqrt2 x^{-3/2} + x^{-3}/2 - (sqrt2/4) x^{-9/2}), x = -s <= -6;
// the omitted term is (9/16) x^{-6}.
AsymptoticEval k_zero_asym(double s);

// u_0 = -2 sqrt(w) (1 - 3/(2 w^{3/4}) - 65/(32 w^{3/2}) - 3/(8 w^{9/4})), w >= 8.
// newton = true applies one Newton step on H'(u | w).
double u0_critical(double w, bool newton = false);

// H(u | w) = -(1/w) ln F(u) + u/4 + (1/w) int_u^inf q + (w^2/24)(1 + 4u/w^2)^{3/2}
// and its u-derivative; u >= -12, 1 + 4u/w^2 > 0.
double h_exponent_H(double u, double w);
double h_exponent_dH(double u, double w);

// P_1, P_2 and P = P_1 + P_2 for w >= 4; next_order = value w^{-3/2}.
AsymptoticEval p1_asym(double w);
AsymptoticEval p2_asym(double w);
AsymptoticEval p_asym_total(double w);

// Pi(u, w) = 1 + 1/(3 w^3) + u^2/(2 w^4); w >= 4, |4u/w^2| < 1.
double pi_factor(double u, double w);
// Pi as the double series (1/2) sum (4u/w^2)^n (-3/2)^m xi^{-3m/2}
// [binom(1/4, n) d_m + binom(-1/4, n) c_m], n < nmax, m < mmax,
// xi = 2^{-2/3} u + 2^{-8/3} w^2.
AsymptoticEval pi_factor_series(double u, double w, int nmax = 8, int mmax = 8);

}  // namespace endpoint
