#pragma once

#include "endpoint/numcore.hpp"

namespace endpoint {

struct PainleveSample {
    double s = 0.0;
    double q = 0.0;
    double q_prime = 0.0;
    double int_q = 0.0;       // int_s^inf q
    double int_int_q2 = 0.0;  // int_s^inf int_t^inf q^2
    double v = 0.0;           // s + 2 q^2 - 2 q'
    double ode_residual = 0.0;  // |q'' - s q - 2 q^3|, q'' by 5-point differences
};

// Hastings-McLeod q(s) from the Nystrom resolvent, s >= -12.
double q_hm(double s);
// Richardson-extrapolated central difference of q_hm, s >= -11.5.
double q_prime(double s);
double v_of_s(double s);

// int_s^inf q and int_s^inf (x - s) q^2 from the panel table, s >= -12.
double int_q(double s);
double int_int_q2(double s);

// exp(-int_q / 2 - int_int_q2 / 2).
double f1_painleve(double s);

// Memoized; safe for concurrent callers.
const PainleveSample& painleve_sample(double s);

// s -> -inf expansions with x = -s:
//   q  = sqrt(x/2) sum_k a_k x^{-3k}
//   q' = -(2 sqrt(2x))^{-1} sum_k (1 - 6k) a_k x^{-3k}
//   v  = (2x)^{-1/2} sum_j v_j x^{-3j/2}
// nterms counts correction terms (k >= 1); next_term_estimate is the first
// omitted term with its exact coefficient. Requires s <= -4.
AsymptoticEval q_asym(double s, int nterms = 3);
AsymptoticEval qp_asym(double s, int nterms = 3);
AsymptoticEval v_asym(double s, int nterms = 4);
// Coefficient a_k of the q expansion, k <= 6.
double q_series_coeff(int k);

// (sqrt2/3) x^{3/2} + log(2)/2 + (sqrt2/24) x^{-3/2}, x = -s: the leading
// terms of int_s^inf q for s -> -inf. Reference only.
AsymptoticEval int_q_asym(double s);

}  // namespace endpoint
