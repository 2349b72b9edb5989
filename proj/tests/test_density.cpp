#include <cmath>
#include <random>

#include "doctest.h"
#include "endpoint/asymptotics.hpp"
#include "endpoint/density.hpp"

using namespace endpoint;

namespace {

const double k13 = std::cbrt(2.0);
const double k23 = k13 * k13;
const double k43 = 2.0 * k13;

// Gauss-Legendre on unit panels of [0, 8] in w; P(s, w) is even in w and below 1e-40 past |w| = 8.
template <class F>
double integrate_w(F&& f) {
    static const QuadRule rule = gauss_legendre(12);
    double total = 0.0;
    for (int p = 0; p < 8; ++p) total += map_interval(rule, p, p + 1.0).apply(f);
    return 2.0 * total;
}

}  // namespace

TEST_CASE("psi") {
    for (double x : {0.0, 0.4, 2.0}) CHECK(psi_mfqr(x, 0.0, -0.3) == doctest::Approx(2.0 * airy_ai_prime(x - 0.3)).epsilon(1e-15));
    // Ai(1), Ai'(1)
    CHECK(psi_mfqr(0.0, 1.0, 0.0) == doctest::Approx(2.0 * (0.1352924163128814 - 0.1591474412967932)).epsilon(1e-14));

    // e^{-xt} psi decays like Ai: log-slope between x = 10 and 12 against -(2/3) d(z^{3/2})
    const double t = 0.5, m = 0.0;
    auto g = [&](double x) { return std::log(std::abs(psi_mfqr(x, t, m))) - x * t; };
    const double z0 = t * t + m + 10.0, z1 = z0 + 2.0;
    const double slope = (g(12.0) - g(10.0)) / 2.0;
    const double airy_slope = -2.0 / 3.0 * (z1 * std::sqrt(z1) - z0 * std::sqrt(z0)) / 2.0;
    CHECK(std::abs(slope / airy_slope - 1.0) < 0.05);

    CHECK(psi_mfqr(1e5, 1.0, 0.0) == 0.0);
    CHECK_THROWS_AS(psi_mfqr(-1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("h products") {
    const auto a = h_products_compute(3.3, true), b = h_products_compute(3.3, false);
    CHECK(a == b);
    CHECK(h_products(-2.5) == h_products(2.5));
    const auto& g0 = h_products(0.0);
    for (double v : g0) CHECK(v >= 0.0);
    CHECK_THROWS_AS(h_products_compute(11.0, false), DomainError);
}

TEST_CASE("symmetry") {
    CHECK(std::abs(p_joint_schehr(-1.0, 3.0) - p_joint_schehr(-1.0, -3.0)) < 1e-9);
    CHECK(std::abs(p_marginal(2.0) - p_marginal(-2.0)) < 1e-9);
    CHECK(std::abs(phat_marginal(1.5) - phat_marginal(-1.5)) < 1e-9);
    CHECK(std::abs(phat_joint_mfqr(0.0, 0.7) - phat_joint_mfqr(0.0, -0.7)) < 1e-9);
    CHECK(p_joint_schehr(0.5, 0.0) > 0.0);
}

TEST_CASE("Schehr and MFQR joint densities agree") {
    for (auto [m, t] : {std::pair{0.0, 0.5}, {-0.8, 0.3}, {1.2, -1.1}}) {
        CAPTURE(m);
        CAPTURE(t);
        CHECK(std::abs(phat_joint(m, t) - phat_joint_mfqr(m, t)) < 1e-6);
    }
    std::mt19937 gen(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) CHECK(phat_joint_mfqr(u(gen), u(gen)) >= -1e-9);
}

TEST_CASE("normalization and the m-marginal") {
    // int int P(s, w) ds dw with the s-integral on [-10, 14]
    static const QuadRule srule = gauss_legendre(16);
    double total = 0.0;
    for (int p = -10; p < 14; ++p)
        total += map_interval(srule, p, p + 1.0).apply([](double s) { return integrate_w([s](double w) { return p_joint_schehr(s, w); }); });
    CHECK(std::abs(total - 1.0) < 3e-3);
    CHECK(std::abs(integrate_w(p_marginal) - 1.0) < 1e-3);

    // int P^(m, t) dt = 2^{2/3} F_1'(2^{2/3} m)
    for (double m : {-1.0, 0.0, 1.0}) {
        const double s = k23 * m, h = 1e-4;
        const double target = k23 * (f1_fredholm(s + h) - f1_fredholm(s - h)) / (2.0 * h);
        const double marg = 4.0 / k43 * integrate_w([s](double w) { return p_joint_schehr(s, w); });
        CAPTURE(m);
        CHECK(std::abs(marg - target) < 1e-4);
    }
}

TEST_CASE("tail probability") {
    const TailProb t0 = tail_prob(0.0);
    CHECK(std::abs(t0.value - 1.0) < 1e-3);
    CHECK(t0.error_estimate < 1e-10);
    const double a = tail_prob(1.0).value, b = tail_prob(1.5).value, c = tail_prob(2.0).value;
    CHECK(a > b);
    CHECK(b > c);
    const double ratio = c / tail_asym(2.0).value;
    CHECK(ratio > 0.7);
    CHECK(ratio < 1.3);
    CHECK_THROWS_AS(tail_prob(3.0), DomainError);
}

TEST_CASE("marginal against its expansion") {
    const double r = p_marginal(6.0) / p_asym_total(6.0).value;
    CHECK(r > 0.75);
    CHECK(r < 1.25);
    CHECK(p_marginal(6.0) > 0.0);
}

TEST_CASE("density table") {
    const std::vector<double> ts = {-1.2, -0.4, 0.0, 0.4, 1.2};
    const DensityTable s = density_table(ts, DensityMethod::schehr, true);
    const DensityTable q = density_table(ts, DensityMethod::schehr, false);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        CHECK(s[i].value == q[i].value);
        CHECK(s[i].value >= -1e-9);
        CHECK(std::abs(s[i].value - s[ts.size() - 1 - i].value) < 1e-8);
        CHECK(s[i].error_estimate < 1e-10);
    }
    const DensityTable m = density_table({0.0, 1.2}, DensityMethod::mfqr);
    CHECK(std::abs(m[1].value - s[4].value) < 1e-6);
    CHECK(m[0].method == DensityMethod::mfqr);

    const DensityTable a = density_table({2.0, -2.0}, DensityMethod::asymptotic);
    CHECK(a[0].value == a[1].value);
    CHECK(a[0].error_estimate == phat_asym(2.0).next_order);
    CHECK_THROWS_AS(density_table({0.5}, DensityMethod::asymptotic), DomainError);
    CHECK_THROWS_AS(p_joint_schehr(-11.0, 0.0), DomainError);
}
