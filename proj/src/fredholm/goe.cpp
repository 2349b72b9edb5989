#include <array>
#include <cmath>
#include <numbers>

#include "endpoint/fredholm.hpp"

namespace endpoint {

namespace {

constexpr int kTerms = 8;
const double kSqrt2 = std::numbers::sqrt2;

// log F_1(s) for s -> -inf: tau1 x^{-1/16} e^{-x^3/24 - x^{3/2}/(3 sqrt2)} sum t_j x^{-3j/2}
const std::array<double, kTerms>& left_coeffs() {
    static const std::array<double, kTerms> t = {
        1.0,
        -kSqrt2 / 48.0,
        55.0 / 2304.0,
        -10675.0 * kSqrt2 / 331776.0,
        3970225.0 / 31850496.0,
        -535444805.0 * kSqrt2 / 1528823808.0,
        521540143355.0 / 220150628352.0,
        -107469011105225.0 * kSqrt2 / 10567230160896.0,
    };
    return t;
}

// F = 8 tau1 x^{-33/16} e^{...} sum f_j x^{-3j/2}; F' = F_1 gives
// f_j = t_j - 2 sqrt2 f_{j-1} - (33/2 + 12 (j - 2)) f_{j-2}.
const std::array<double, kTerms>& cumulative_coeffs() {
    static const std::array<double, kTerms> f = [] {
        const auto& t = left_coeffs();
        std::array<double, kTerms> c{};
        c[0] = 1.0;
        c[1] = t[1] - 2.0 * kSqrt2 * c[0];
        for (int j = 2; j < kTerms; ++j) c[j] = t[j] - 2.0 * kSqrt2 * c[j - 1] - (16.5 + 12.0 * (j - 2)) * c[j - 2];
        return c;
    }();
    return f;
}

AsymptoticEval left_sum(const std::array<double, kTerms>& c, double x, double log_pref, int nterms) {
    if (nterms < 1 || nterms >= kTerms) throw DomainError("left-tail series: nterms must be in [1, 7]");
    const double pref = std::exp(log_pref);
    const double r = std::pow(x, -1.5);
    double sum = 0.0, rk = 1.0;
    for (int j = 0; j < nterms; ++j) {
        sum += c[j] * rk;
        rk *= r;
    }
    return {pref * sum, pref * std::abs(c[nterms] * rk)};
}

double log_envelope(double x) { return -x * x * x / 24.0 - x * std::sqrt(x) / (3.0 * kSqrt2); }

// 1 - F_1 = (1/2) int_s^inf Ai + O(Ai^2)
double right_tail(double s) {
    const double s32 = s * std::sqrt(s);
    return std::exp(-2.0 * s32 / 3.0) / (4.0 * std::sqrt(std::numbers::pi) * std::pow(s, 0.75));
}

}  // namespace

double f1_left_coeff(int j) {
    if (j < 0 || j >= kTerms) throw DomainError("f1_left_coeff: j must be in [0, 7]");
    return left_coeffs()[j];
}

double f_cumulative_coeff(int j) {
    if (j < 0 || j >= kTerms) throw DomainError("f_cumulative_coeff: j must be in [0, 7]");
    return cumulative_coeffs()[j];
}

AsymptoticEval f1_left_series(double s, int nterms) {
    if (!(s < 0.0)) throw DomainError("f1_left_series: s must be negative");
    const double x = -s;
    const double lp = std::log(constants().tau1) - std::log(x) / 16.0 + log_envelope(x);
    return left_sum(left_coeffs(), x, lp, nterms);
}

AsymptoticEval f_cumulative_series(double u, int nterms) {
    if (!(u < 0.0)) throw DomainError("f_cumulative_series: u must be negative");
    const double x = -u;
    const double lp = std::log(8.0 * constants().tau1) - 33.0 / 16.0 * std::log(x) + log_envelope(x);
    return left_sum(cumulative_coeffs(), x, lp, nterms);
}

AsymptoticEval f1_right_series(double s) {
    if (!(s > 0.0)) throw DomainError("f1_right_series: s must be positive");
    const double tail = right_tail(s);
    return {1.0 - tail, 41.0 / 48.0 * tail / (s * std::sqrt(s))};
}

double f_cumulative(double u) {
    if (!std::isfinite(u)) throw DomainError("f_cumulative: u must be finite");
    // six terms at the splice: the series bottoms out near |u| = 9
    if (u <= kSpliceF) return f_cumulative_series(u, 6).value;
    const SampleTable& tab = SampleTable::global();
    const double base = f_cumulative_series(kSpliceF, 6).value;
    if (u <= SampleTable::kHi) return base + tab.int_f1(kSpliceF, u);
    const double hi = SampleTable::kHi;
    const double deficit = integrate_adaptive(right_tail, hi, u, 1e-13);
    return base + tab.int_f1(kSpliceF, hi) + (u - hi) - deficit;
}

}  // namespace endpoint
