#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "endpoint/density.hpp"
#include "endpoint/dotsenko.hpp"
#include "endpoint/errors.hpp"
#include "endpoint/fredholm.hpp"

namespace endpoint {

namespace {

const double k13 = std::cbrt(2.0);

void require(bool ok, const char* name, const char* what) {
    if (!ok) throw DomainError(std::string(name) + ": " + what);
}

struct PsiPair {
    double psi;
    double dpsi;
};

PsiPair psi_pair(double omega, double x) {
    const ScaledAiry a = airy_scaled(k13 * (omega + x * x / 8.0));
    if (a.ai == 0.0 && a.aip == 0.0) return {0.0, 0.0};
    const double e = std::exp(-x * x * x / 24.0 - omega * x / 2.0 - a.zeta);
    const PsiPair p{k13 * e * a.ai, k13 * e * (-0.5 * x * a.ai + k13 * a.aip)};
    if (!std::isfinite(p.psi) || !std::isfinite(p.dpsi)) throw Overflow("psi_dot: result exceeds the double range");
    return p;
}

// Upper y-limit: the last unit step where the log-envelope of the integrand is
// within 40 units of its running peak.
double y_limit(double omega, double omega_prime, double s, double x) {
    auto env = [&](double y) {
        const double z = k13 * (omega_prime + s / 2.0 + y + x * x / 8.0);
        const double decay = z > 0.0 ? -2.0 / 3.0 * z * std::sqrt(z) : 0.0;
        return (omega_prime - omega) * x / 2.0 + y * x + decay;
    };
    double peak = env(0.0), y = 0.0;
    while (y < 400.0) {
        y += 1.0;
        const double e = env(y);
        peak = std::max(peak, e);
        if (e < peak - 40.0) break;
    }
    return y;
}

double psi_mfqr_scaled(double x1, double t, double m) { return psi_mfqr(k13 * x1, t, m); }

template <class F>
double d_dt(F&& f, double t) {
    const double h = 1e-2;
    return (8.0 * (f(t + h) - f(t - h)) - (f(t + 2.0 * h) - f(t - 2.0 * h))) / (12.0 * h);
}

double identity_rhs(double x1, double x2, double m, double t) {
    const double c43 = std::pow(2.0, -4.0 / 3.0), c23 = std::pow(2.0, -2.0 / 3.0);
    return std::pow(2.0, -5.0 / 3.0) * psi_mfqr_scaled(x1, -c43 * t, c23 * m) * psi_mfqr_scaled(x2, c43 * t, c23 * m);
}

// <rho_s, Phi(s, x)> with the omega bilinear form inside the y-integral.
double rho_phi(double s, double x, int nodes) {
    const NystromOperator op = NystromOperator::build(s, nodes, 0.0, Precision::automatic, false);
    const std::vector<double> S = op.inverse();
    const auto& om = op.nodes();
    const auto& wt = op.weights();
    const int n = op.size();
    std::vector<double> sw(n);
    for (int i = 0; i < n; ++i) sw[i] = std::sqrt(wt[i]);

    std::vector<double> up_x(n), dup_x(n), dn_x(n), ddn_x(n), up_m(n), dup_m(n), p1(n), p2(n);
    auto integrand = [&](double y) {
        for (int i = 0; i < n; ++i) {
            const PsiPair a = psi_pair(om[i] + s / 2.0 + y, x);
            const PsiPair b = psi_pair(om[i] + s / 2.0 - y, x);
            const PsiPair c = psi_pair(om[i] + s / 2.0 + y, -x);
            up_x[i] = sw[i] * a.psi;
            dup_x[i] = sw[i] * a.dpsi;
            dn_x[i] = sw[i] * b.psi;
            ddn_x[i] = sw[i] * b.dpsi;
            up_m[i] = sw[i] * c.psi;
            dup_m[i] = sw[i] * c.dpsi;
        }
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            double r1 = 0.0, r2 = 0.0;
            for (int j = 0; j < n; ++j) {
                r1 += S[i * n + j] * up_m[j];
                r2 += S[i * n + j] * dup_m[j];
            }
            total += (dup_x[i] + ddn_x[i]) * r1 + (dn_x[i] - up_x[i]) * r2;
        }
        return total;
    };

    static const QuadRule rule = gauss_legendre(16);
    double total = 0.0;
    int quiet = 0;
    for (int p = 0; p < 60 && quiet < 2; ++p) {
        const double part = map_interval(rule, p, p + 1.0).apply(integrand);
        total += part;
        quiet = std::abs(part) < 1e-16 * std::abs(total) ? quiet + 1 : 0;
    }
    return -0.5 * total;
}

}  // namespace

double psi_dot(double omega, double x) { return psi_pair(omega, x).psi; }

double psi_dot_domega(double omega, double x) { return psi_pair(omega, x).dpsi; }

double phi_dot(double omega, double omega_prime, double s, double x) {
    require(omega >= 0.0 && omega_prime >= 0.0, "phi_dot", "omega and omega' must be nonnegative");
    const double u = s / 2.0;
    auto f = [&](double y) {
        const PsiPair a = psi_pair(omega + u + y, x), b = psi_pair(omega + u - y, x);
        const PsiPair c = psi_pair(omega_prime + u + y, -x);
        return a.dpsi * c.psi - a.psi * c.dpsi + b.dpsi * c.psi + b.psi * c.dpsi;
    };
    return -0.5 * integrate_adaptive(f, 0.0, y_limit(omega, omega_prime, s, x), 1e-13);
}

IdentitySides phi_t_identity_literal(double x1, double x2, double m, double t) {
    const double lhs = -d_dt([&](double tt) { return phi_dot(x2, x1, m, tt); }, t);
    return {lhs, identity_rhs(x1, x2, m, t)};
}

IdentitySides phi_t_identity(double x1, double x2, double m, double t) {
    const double lhs = d_dt([&](double tt) { return phi_dot(x1, x2, m, tt); }, t);
    return {lhs, identity_rhs(x1, x2, m, t)};
}

DotsenkoEval w_dist(double x, int nodes, bool parallel) {
    require(std::abs(x) <= 2.5, "w_dist", "|x| must be <= 2.5");
    require(nodes >= 60 && nodes <= 512, "w_dist", "nodes must be in [60, 512]");
    static const QuadRule rule = gauss_legendre(8);
    std::vector<double> ss, ws;
    for (int p = -10; p < 8; ++p) {
        const QuadRule r = map_interval(rule, p, p + 1.0);
        ss.insert(ss.end(), r.nodes.begin(), r.nodes.end());
        ws.insert(ws.end(), r.weights.begin(), r.weights.end());
    }
    const int m = static_cast<int>(ss.size());
    std::vector<double> terms(m);
    parallel_for(m, parallel, [&](int k) { terms[k] = ws[k] * f1_fredholm(ss[k]) * rho_phi(ss[k], x, nodes); });
    double total = 0.0;
    for (double v : terms) total += v;
    return {x, total, DotsenkoRoute::appendix_c};
}

DotsenkoEval w_main_density(double x) {
    require(std::abs(x) <= 10.0, "w_main_density", "|x| must be <= 10");
    // unit panels shared across calls so p_marginal's cache is reused
    static const QuadRule rule = gauss_legendre(16);
    const double first = std::ceil(x);
    double total = first > x ? map_interval(rule, x, first).apply(p_marginal) : 0.0;
    for (double a = first; a < 10.0; a += 1.0) total += map_interval(rule, a, a + 1.0).apply(p_marginal);
    return {x, total, DotsenkoRoute::main_density};
}

}  // namespace endpoint
