#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "endpoint/asymptotics.hpp"
#include "endpoint/hfun.hpp"

namespace endpoint {

namespace {

const double kC43 = std::cbrt(16.0);  // 2^{4/3}
const double kC23 = std::cbrt(4.0);   // 2^{2/3}
const double kLogPre = std::log(std::numbers::pi / kC43);
constexpr double kSeriesXi = 10.0;

// For xi >= kSeriesXi: log(Ai(xi) e^{zeta}) and the bracket
// [Ai' + c Ai] / Ai with the sqrt(xi) - c difference taken exactly.
struct Bracket {
    long double log_ai_scaled;
    long double ratio;
};

Bracket bracket_series(long double xi, long double diff) {
    const AiryAsymCoeffs& k = AiryAsymCoeffs::get();
    const long double rx = std::sqrt(xi);
    const long double zeta = 2.0L / 3.0L * xi * rx;
    long double C = 1.0L, D = 0.0L, zk = 1.0L, prev = std::numeric_limits<long double>::infinity();
    for (std::size_t j = 1; j < k.c.size(); ++j) {
        zk /= -zeta;
        const long double tc = k.c[j] * zk, td = (k.d[j] - k.c[j]) * zk;
        const long double mag = std::abs(tc) + std::abs(td);
        if (mag > prev) break;
        C += tc;
        D += td;
        prev = mag;
        if (mag < 1e-21L) break;
    }
    // Ai'/Ai = -sqrt(xi) (C + D) / C
    const long double log_ai = std::log(C / (2.0L * std::sqrt(std::numbers::pi_v<long double>) * std::sqrt(rx)));
    return {log_ai, -diff - rx * D / C};
}

}  // namespace

LogAbs a_closed_log(double y, double w) {
    if (!std::isfinite(y) || !std::isfinite(w)) throw DomainError("a_closed: arguments must be finite");
    const long double yl = y, wl = w;
    const long double c = wl / kC43;
    const long double xi = yl / kC23 + c * c;
    const long double P = wl * wl * wl / 24.0L + wl * yl / 4.0L;
    long double log_mag, sgn;
    if (xi >= kSeriesXi) {
        const long double rx = std::sqrt(xi);
        // sqrt(xi) - c without cancellation
        const long double diff = c > 0 ? (yl / kC23) / (rx + c) : rx - c;
        const Bracket b = bracket_series(xi, diff);
        if (b.ratio == 0.0L) return {-std::numeric_limits<double>::infinity(), 0};
        log_mag = kLogPre + P - 2.0L / 3.0L * xi * rx + b.log_ai_scaled + std::log(std::abs(b.ratio));
        sgn = b.ratio > 0 ? 1 : -1;
    } else {
        const AiryPair ap = airy_pair(static_cast<double>(xi));
        const long double br = ap.aip + c * ap.ai;
        if (br == 0.0L) return {-std::numeric_limits<double>::infinity(), 0};
        log_mag = kLogPre + P + std::log(std::abs(br));
        sgn = br > 0 ? 1 : -1;
    }
    return {static_cast<double>(log_mag), static_cast<int>(sgn)};
}

double a_closed(double y, double w) {
    const LogAbs la = a_closed_log(y, w);
    if (la.sign == 0) return 0.0;
    if (la.log_abs > std::log(std::numeric_limits<double>::max()))
        throw Overflow("a_closed: |a| overflows at y = " + std::to_string(y) + ", w = " + std::to_string(w));
    return la.sign * std::exp(la.log_abs);
}

AsymptoticEval a_negative_series(double y, double w, int nmax, int mmax) {
    if (!(w > 0.0)) throw DomainError("a_negative_series: w must be positive");
    const double xi = y / kC23 + w * w / (kC43 * kC43);
    if (!(xi > 0.0) || !(std::abs(4.0 * y / (w * w)) < 1.0))
        throw DomainError("a_negative_series: requires |4y/w^2| < 1");
    // a(y, -w) = -(sqrt(pi w) / 4) e^{-w^3/24 - w y/4 - (2/3) xi^{3/2}} Pi(y, w)
    const AsymptoticEval pi = pi_factor_series(y, w, nmax, mmax);
    const double pref = -std::exp(std::log(std::sqrt(std::numbers::pi * w) / 4.0) - w * w * w / 24.0 - w * y / 4.0 -
                                  2.0 / 3.0 * xi * std::sqrt(xi));
    return {pref * pi.value, std::abs(pref) * pi.next_term_estimate};
}

HEvaluation h_direct(const LaxSeries& series, double w) {
    if (!(w > 0.0)) throw DomainError("h_direct: w must be positive");
    constexpr double kLambdaMax = 9.0;
    const double scale = 1.0 / std::sqrt(2.0 * w);
    auto integral = [&](int n) {
        const QuadRule r = map_interval(gauss_legendre(n), 0.0, kLambdaMax);
        return r.apply([&](double l) { return l * series.phi2(l * scale) * std::exp(-0.5 * l * l); }) / (2.0 * w);
    };
    const double fine = integral(120), coarse = integral(90);
    HEvaluation e;
    e.s = series.s();
    e.w = w;
    e.value = fine;
    e.route = HRoute::direct;
    e.error_estimate = std::abs(fine - coarse) + 1e-15 * std::abs(fine);
    return e;
}

HEvaluation h_direct(double s, double w) {
    return h_direct(lax_series(s, LaxSeries::kMaxOrder), w);
}

double h_grid(const NystromOperator& op, double w) {
    const double s = op.s();
    const auto& x = op.nodes();
    const auto& wt = op.weights();
    const auto& K = op.resolvent_grid();
    double sum = a_closed(s, w);
    for (std::size_t j = 0; j < x.size(); ++j)
        if (K[j] != 0.0) sum += wt[j] * a_closed(s + 2.0 * x[j], w) * K[j];
    return sum;
}

double h_grid(const TableNode& node, double w) {
    double sum = a_closed(node.s, w);
    for (std::size_t j = 0; j < node.x.size(); ++j)
        if (node.K[j] != 0.0) sum += node.w[j] * a_closed(node.s + 2.0 * node.x[j], w) * node.K[j];
    return sum;
}

HEvaluation h_resolvent(double s, double w) {
    if (!(s >= SampleTable::kLo)) throw DomainError("h_resolvent: s must be >= -12");
    if (!(w >= -30.0 && w <= 12.0)) throw DomainError("h_resolvent: w must be in [-30, 12]");
    const NystromOperator op = NystromOperator::build(s);

    // log-magnitude envelope of a(s + 2x, w) K(x, s), with K ~ Ai(x + s)
    auto envelope = [&](double x) {
        const double z = x + s;
        const double la = a_closed_log(s + 2.0 * x, w).log_abs;
        return z > 1.0 ? la - 2.0 / 3.0 * z * std::sqrt(z) - 0.25 * std::log(z) : la;
    };
    double peak = -std::numeric_limits<double>::infinity(), x_end = 0.0;
    for (double x = 0.0; x <= 400.0; x += 0.25) {
        const double e = envelope(x);
        peak = std::max(peak, e);
        x_end = x;
        if (e < peak - 40.0 && x + s > 1.0) break;
    }
    double quad_err = 0.0;
    const double integral = integrate_adaptive(
        [&](double x) { return a_closed(s + 2.0 * x, w) * op.K_at(x); }, 0.0, x_end, 1e-12, &quad_err);
    HEvaluation e;
    e.s = s;
    e.w = w;
    e.value = a_closed(s, w) + integral;
    e.route = HRoute::resolvent;
    e.error_estimate = std::abs(e.value - h_grid(op, w)) + quad_err;
    return e;
}

double phi2_resolvent(double zeta, double s) {
    const NystromOperator op = NystromOperator::build(s);
    const auto& x = op.nodes();
    const auto& wt = op.weights();
    const auto& K = op.resolvent_grid();
    const double base = 4.0 / 3.0 * zeta * zeta * zeta;
    double sum = -std::sin(base + s * zeta);
    for (std::size_t j = 0; j < x.size(); ++j) sum -= wt[j] * std::sin(base + (s + 2.0 * x[j]) * zeta) * K[j];
    return sum;
}

AsymptoticEval h_expansion(double s, double w, int nterms) {
    if (!(w >= 10.0)) throw DomainError("h_expansion: w must be >= 10");
    if (!(s >= -6.0 && s <= 6.0)) throw DomainError("h_expansion: s must be in [-6, 6]");
    if (nterms < 1 || nterms > 25) throw DomainError("h_expansion: nterms must be in [1, 25]");
    const LaxSeries L = lax_series(s, std::max(LaxSeries::kDefaultOrder, 2 * nterms + 1));
    const double pref = std::sqrt(std::numbers::pi) / (4.0 * w * std::sqrt(w)) * std::exp(-L.coefficients().int_q);
    double sum = 0.0, wn = 1.0;
    for (int n = 0; n < nterms; ++n, wn /= w) sum += qn_poly(n, L) * wn;
    return {pref * sum, std::abs(pref * qn_poly(nterms, L) * wn)};
}

}  // namespace endpoint
