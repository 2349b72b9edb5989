#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "endpoint/painleve.hpp"

namespace endpoint {

namespace {

constexpr int kMaxK = 6;

// q = sqrt(x/2) sum a_k x^{-3k}, x = -s, from the Painleve II recursion
constexpr std::array<double, kMaxK + 1> kA = {
    1.0,
    -1.0 / 8.0,
    -73.0 / 128.0,
    -10657.0 / 1024.0,
    -13912277.0 / 32768.0,
    -8045883943.0 / 262144.0,
    -14518451390349.0 / 4194304.0,
};

// v = (2x)^{-1/2} sum_j v_j x^{-3j/2}: v_{2k} = (1 - 6k) a_k, v_{2k-1} = sqrt2 [G^2]_k
constexpr int kMaxV = 2 * kMaxK;

const std::array<double, kMaxV + 1>& v_coeffs() {
    static const std::array<double, kMaxV + 1> v = [] {
        std::array<double, kMaxV + 1> c{};
        for (int k = 0; k <= kMaxK; ++k) c[2 * k] = (1.0 - 6.0 * k) * kA[k];
        for (int k = 1; k <= kMaxK; ++k) {
            double g2 = 0.0;
            for (int i = 0; i <= k; ++i) g2 += kA[i] * kA[k - i];
            c[2 * k - 1] = std::numbers::sqrt2 * g2;
        }
        return c;
    }();
    return v;
}

void check_args(const char* name, double s, int nterms, int max_terms) {
    if (!(s <= -4.0)) throw DomainError(std::string(name) + ": requires s <= -4");
    if (nterms < 0 || nterms > max_terms)
        throw DomainError(std::string(name) + ": nterms must be in [0, " + std::to_string(max_terms) + "]");
}

}  // namespace

double q_series_coeff(int k) {
    if (k < 0 || k > kMaxK) throw DomainError("q_series_coeff: k must be in [0, 6]");
    return kA[k];
}

AsymptoticEval q_asym(double s, int nterms) {
    check_args("q_asym", s, nterms, kMaxK - 1);
    const double x = -s, r = std::pow(x, -3.0), pref = std::sqrt(x / 2.0);
    double sum = 0.0, rk = 1.0;
    for (int k = 0; k <= nterms; ++k, rk *= r) sum += kA[k] * rk;
    return {pref * sum, pref * std::abs(kA[nterms + 1] * rk)};
}

AsymptoticEval qp_asym(double s, int nterms) {
    check_args("qp_asym", s, nterms, kMaxK - 1);
    const double x = -s, r = std::pow(x, -3.0), pref = -1.0 / (2.0 * std::sqrt(2.0 * x));
    double sum = 0.0, rk = 1.0;
    for (int k = 0; k <= nterms; ++k, rk *= r) sum += (1.0 - 6.0 * k) * kA[k] * rk;
    const int k = nterms + 1;
    return {pref * sum, std::abs(pref * (1.0 - 6.0 * k) * kA[k] * rk)};
}

AsymptoticEval v_asym(double s, int nterms) {
    check_args("v_asym", s, nterms, kMaxV - 1);
    const auto& v = v_coeffs();
    const double x = -s, r = std::pow(x, -1.5), pref = 1.0 / std::sqrt(2.0 * x);
    double sum = 0.0, rj = 1.0;
    for (int j = 0; j <= nterms; ++j, rj *= r) sum += v[j] * rj;
    return {pref * sum, pref * std::abs(v[nterms + 1] * rj)};
}

AsymptoticEval int_q_asym(double s) {
    if (!(s <= -4.0)) throw DomainError("int_q_asym: requires s <= -4");
    const double x = -s, x32 = x * std::sqrt(x), r2 = std::numbers::sqrt2;
    const double value = r2 / 3.0 * x32 + 0.5 * std::numbers::ln2 + r2 / 24.0 / x32;
    // termwise integral of the q series: a_2 / (sqrt2 (3/2 - 6)) x^{-9/2}
    const double next = kA[2] / (r2 * (1.5 - 6.0)) / (x32 * x32 * x32);
    return {value, std::abs(next)};
}

}  // namespace endpoint
