#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "endpoint/asymptotics.hpp"
#include "endpoint/fredholm.hpp"
#include "endpoint/painleve.hpp"

namespace endpoint {

namespace {

const double kSqrt2 = std::numbers::sqrt2;

void require(bool ok, const char* name, const char* what) {
    if (!ok) throw DomainError(std::string(name) + ": " + what);
}

TailExpansion tail_form(double t, double log_pref, double power) {
    TailExpansion e;
    e.t = t;
    e.leading = log_pref - 4.0 / 3.0 * phi_exponent(t) - power * std::log(t);
    e.correction = 15.0 / (4.0 * std::pow(t, 0.75));
    e.value = std::exp(e.leading) * (1.0 + e.correction);
    e.next_order = e.value * std::pow(t, -1.5);
    return e;
}

// -w^3/12 + (2/3) w^{3/2} - 2 w^{3/4} - (81/32) log w
double log_envelope(double w) {
    return -w * w * w / 12.0 + 2.0 / 3.0 * w * std::sqrt(w) - 2.0 * std::pow(w, 0.75) - 81.0 / 32.0 * std::log(w);
}

AsymptoticEval p_form(double w, double c) {
    require(w >= 4.0, "p_asym", "w must be >= 4");
    const double v = constants().kappa * std::exp(log_envelope(w)) * (1.0 + c / std::pow(w, 0.75));
    return {v, v * std::pow(w, -1.5)};
}

// F_1 and q outside the table fall back to direct evaluation
double f1_at(double u) {
    return u <= SampleTable::kHi ? std::exp(SampleTable::global().log_f1(u)) : std::exp(log_f1_fredholm(u));
}

double q_at(double u) { return u <= SampleTable::kHi ? SampleTable::global().q(u) : q_hm(u); }

}  // namespace

double phi_exponent(double t) {
    require(t > 0.0, "phi_exponent", "t must be positive");
    return t * t * t - 2.0 * t * std::sqrt(t) + 3.0 * std::pow(t, 0.75);
}

double phi_exponent_prime(double t) {
    require(t > 0.0, "phi_exponent_prime", "t must be positive");
    return 3.0 * t * t - 3.0 * std::sqrt(t) + 2.25 * std::pow(t, -0.25);
}

TailExpansion phat_asym(double t) {
    require(t >= 1.0, "phat_asym", "t must be >= 1");
    return tail_form(t, std::log(constants().tau), 81.0 / 32.0);
}

TailExpansion tail_asym(double t) {
    require(t >= 1.0, "tail_asym", "t must be >= 1");
    return tail_form(t, std::log(constants().C), 145.0 / 32.0);
}

AsymptoticEval f1_tail(double s, Side side, int nterms) {
    if (side == Side::right) {
        require(s >= 4.0, "f1_tail", "right tail requires s >= 4");
        return f1_right_series(s);
    }
    require(s <= -6.0, "f1_tail", "left tail requires s <= -6");
    return f1_left_series(s, nterms);
}

AsymptoticEval f_cumulative_asym(double u) {
    require(u <= -6.0, "f_cumulative_asym", "u must be <= -6");
    return f_cumulative_series(u, 5);
}

AsymptoticEval f1_over_f_asym(double u, int nterms) {
    require(u <= -6.0, "f1_over_f_asym", "u must be <= -6");
    require(nterms >= 1 && nterms <= 7, "f1_over_f_asym", "nterms must be in [1, 7]");
    // r = t / f as power series
    std::vector<double> r(nterms + 1);
    for (int j = 0; j <= nterms; ++j) {
        double v = f1_left_coeff(j);
        for (int i = 0; i < j; ++i) v -= r[i] * f_cumulative_coeff(j - i);
        r[j] = v;
    }
    const double x = -u, z = std::pow(x, -1.5);
    double sum = 0.0, zk = 1.0;
    for (int j = 0; j < nterms; ++j, zk *= z) sum += r[j] * zk;
    const double pre = x * x / 8.0;
    return {pre * sum, pre * std::abs(r[nterms] * zk)};
}

AsymptoticEval k_zero_asym(double s) {
    require(s <= -6.0, "k_zero_asym", "s must be <= -6");
    const double x = -s, z = std::pow(x, -1.5), pre = x * x / 4.0;
    const double sum = 1.0 + 2.0 * kSqrt2 * z + 0.5 * z * z - kSqrt2 / 4.0 * z * z * z;
    return {pre * sum, pre * 9.0 / 16.0 * z * z * z * z};
}

double u0_critical(double w, bool newton) {
    require(w >= 8.0, "u0_critical", "w must be >= 8");
    const double a = std::pow(w, -0.75);
    double u = -2.0 * std::sqrt(w) * (1.0 - 1.5 * a - 65.0 / 32.0 * a * a - 3.0 / 8.0 * a * a * a);
    if (newton) {
        const double h = 1e-3;
        const double d2 = (h_exponent_dH(u + h, w) - h_exponent_dH(u - h, w)) / (2.0 * h);
        u -= h_exponent_dH(u, w) / d2;
    }
    return u;
}

double h_exponent_H(double u, double w) {
    require(w > 0.0, "h_exponent_H", "w must be positive");
    require(u >= SampleTable::kLo, "h_exponent_H", "u must be >= -12");
    const double rad = 1.0 + 4.0 * u / (w * w);
    require(rad > 0.0, "h_exponent_H", "1 + 4u/w^2 must be positive");
    return -std::log(f_cumulative(u)) / w + u / 4.0 + int_q(u) / w + w * w / 24.0 * rad * std::sqrt(rad);
}

double h_exponent_dH(double u, double w) {
    require(w > 0.0, "h_exponent_dH", "w must be positive");
    require(u >= SampleTable::kLo, "h_exponent_dH", "u must be >= -12");
    const double rad = 1.0 + 4.0 * u / (w * w);
    require(rad > 0.0, "h_exponent_dH", "1 + 4u/w^2 must be positive");
    return -f1_at(u) / (w * f_cumulative(u)) + 0.25 - q_at(u) / w + 0.25 * std::sqrt(rad);
}

AsymptoticEval p1_asym(double w) { return p_form(w, 17.0 / 2.0); }
AsymptoticEval p2_asym(double w) { return p_form(w, 13.0 / 2.0); }

AsymptoticEval p_asym_total(double w) {
    require(w >= 4.0, "p_asym_total", "w must be >= 4");
    const double v = 2.0 * constants().kappa * std::exp(log_envelope(w)) * (1.0 + 7.5 / std::pow(w, 0.75));
    return {v, v * std::pow(w, -1.5)};
}

double pi_factor(double u, double w) {
    require(w >= 4.0, "pi_factor", "w must be >= 4");
    require(std::abs(4.0 * u / (w * w)) < 1.0, "pi_factor", "requires |4u/w^2| < 1");
    const double w3 = w * w * w;
    return 1.0 + 1.0 / (3.0 * w3) + u * u / (2.0 * w3 * w);
}

AsymptoticEval pi_factor_series(double u, double w, int nmax, int mmax) {
    require(w > 0.0, "pi_factor_series", "w must be positive");
    require(std::abs(4.0 * u / (w * w)) < 1.0, "pi_factor_series", "requires |4u/w^2| < 1");
    const AiryAsymCoeffs& k = AiryAsymCoeffs::get();
    require(nmax >= 1 && mmax >= 1 && mmax + 1 < static_cast<int>(k.c.size()), "pi_factor_series",
            "bad truncation");
    const double r = 4.0 * u / (w * w);
    const double xi = u / std::cbrt(4.0) + w * w / std::cbrt(256.0);
    const double g = -1.5 * std::pow(xi, -1.5);
    std::vector<double> bp(nmax + 1), bm(nmax + 1);
    bp[0] = bm[0] = 1.0;
    for (int n = 1; n <= nmax; ++n) {
        bp[n] = bp[n - 1] * (0.25 - (n - 1)) / n;
        bm[n] = bm[n - 1] * (-0.25 - (n - 1)) / n;
    }
    auto term = [&](int n, int m) { return 0.5 * std::pow(r, n) * std::pow(g, m) * (bp[n] * k.d[m] + bm[n] * k.c[m]); };
    double sum = 0.0, next = 0.0;
    for (int n = 0; n < nmax; ++n)
        for (int m = 0; m < mmax; ++m) sum += term(n, m);
    for (int m = 0; m <= mmax; ++m) next = std::max(next, std::abs(term(nmax, m)));
    for (int n = 0; n < nmax; ++n) next = std::max(next, std::abs(term(n, mmax)));
    return {sum, next};
}

}  // namespace endpoint
