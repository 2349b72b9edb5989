#pragma once

#include <vector>

#include "endpoint/hfun.hpp"

namespace endpoint {

// G(u, w) = h(u, w) h(u, -w) at every node of the sample table (index
// panel * kPerPanel + j), memoized by |w|. The parallel and serial sweeps
// produce identical values.
const std::vector<double>& h_products(double w);
std::vector<double> h_products_compute(double w, bool parallel);

// P(s, w) = (4/pi^2) F_1(s) int_s^inf G(u, w) du; s >= -10, |w| <= 10.
double p_joint_schehr(double s, double w);
// P(w) = (4/pi^2) int F(u) G(u, w) du with F(u) = int_{-inf}^u F_1; |w| <= 10. Memoized.
double p_marginal(double w);

// P^(m, t) = 4 P(2^{2/3} m, 2^{4/3} t) and P^(t) = 2^{4/3} P(2^{4/3} t).
double phat_joint(double m, double t);
double phat_marginal(double t);

// psi(x; t, m) = 2 e^{xt} [t Ai(t^2 + m + x) + Ai'(t^2 + m + x)].
double psi_mfqr(double x, double t, double m);
// 2^{1/3} F_1(2^{2/3} m) <psi(2^{1/3} . ; -t, m), (1 - B)^{-1} psi(2^{1/3} . ; t, m)>,
// with s = 2^{2/3} m >= -10.
double phat_joint_mfqr(double m, double t, int nodes = NystromOperator::kDefaultNodes);

struct TailProb {
    double value = 0.0;
    double error_estimate = 0.0;
};
// P(|T| > t) = 2 int_t^inf P^; 0 <= t <= 2.8.
TailProb tail_prob(double t);

enum class DensityMethod { schehr, mfqr, asymptotic };

struct DensityRow {
    double t = 0.0;
    double value = 0.0;
    DensityMethod method = DensityMethod::schehr;
    double error_estimate = 0.0;
};
using DensityTable = std::vector<DensityRow>;

// P^(t) at each t. mfqr integrates the MFQR joint density over m on the
// table nodes; asymptotic uses the large-t expansion.
DensityTable density_table(const std::vector<double>& ts, DensityMethod method, bool parallel = true);

}  // namespace endpoint
