#include <cmath>
#include <numbers>

#include "doctest.h"
#include "endpoint/asymptotics.hpp"
#include "endpoint/fredholm.hpp"

using namespace endpoint;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
const double k43 = std::cbrt(16.0);  // 2^{4/3}

}  // namespace

TEST_CASE("phat_asym and tail_asym closed forms") {
    const double t = 2.0;
    const double phi = 8.0 - 2.0 * std::pow(2.0, 1.5) + 3.0 * std::pow(2.0, 0.75);
    const double expect = constants().tau * std::exp(-4.0 / 3.0 * phi) * std::pow(2.0, -81.0 / 32.0) *
                          (1.0 + 15.0 / (4.0 * std::pow(2.0, 0.75)));
    CHECK(rel(phat_asym(t).value, expect) < 1e-14);
    CHECK(phi_exponent(t) == doctest::Approx(phi).epsilon(1e-15));

    for (double x : {1.5, 3.0}) {
        const TailExpansion e = tail_asym(x);
        const double inv = e.value * std::exp(4.0 / 3.0 * phi_exponent(x)) * std::pow(x, 145.0 / 32.0) /
                           (1.0 + 15.0 / (4.0 * std::pow(x, 0.75)));
        CHECK(rel(inv, constants().C) < 1e-13);
        CHECK(rel(e.next_order, e.value * std::pow(x, -1.5)) < 1e-15);
    }

    // leading exponent: log ratio is (4/3)(phi(3) - phi(2)) plus the power and correction terms
    const TailExpansion a = tail_asym(2.0), b = tail_asym(3.0);
    const double lhs = std::log(a.value / b.value);
    const double rhs = 4.0 / 3.0 * (phi_exponent(3.0) - phi_exponent(2.0)) + 145.0 / 32.0 * std::log(1.5) +
                       std::log((1.0 + a.correction) / (1.0 + b.correction));
    CHECK(std::abs(lhs - rhs) < 1e-12 * lhs);

    CHECK_THROWS_AS(phat_asym(0.5), DomainError);
    CHECK_THROWS_AS(phi_exponent(0.0), DomainError);
}

TEST_CASE("phi derivative") {
    for (double t : {0.7, 1.3, 2.9}) {
        const double h = 1e-5;
        const double fd = (phi_exponent(t + h) - phi_exponent(t - h)) / (2.0 * h);
        CHECK(std::abs(fd - phi_exponent_prime(t)) < 1e-8 * std::abs(phi_exponent_prime(t)));
    }
}

TEST_CASE("tail by quadrature of the density expansion") {
    for (double t : {2.0, 3.0, 4.0}) {
        const TailExpansion e = tail_asym(t);
        const double quad = 2.0 * integrate_adaptive([](double x) { return phat_asym(x).value; }, t, t + 3.0, 1e-13);
        CAPTURE(t);
        CHECK(std::abs(quad - e.value) <= e.next_order);
    }
}

TEST_CASE("rescaled marginal expansion") {
    for (double t : {1.6, 2.0, 3.0}) {
        const double lhs = k43 * p_asym_total(k43 * t).value;
        CHECK(rel(lhs, phat_asym(t).value) < 1e-12);
    }
    for (double w : {4.0, 7.5, 12.0}) {
        const double env = std::exp(-w * w * w / 12.0 + 2.0 / 3.0 * std::pow(w, 1.5) - 2.0 * std::pow(w, 0.75)) *
                           std::pow(w, -81.0 / 32.0);
        const AsymptoticEval tot = p_asym_total(w);
        CHECK(rel(p1_asym(w).value + p2_asym(w).value, tot.value) < 1e-14);
        CHECK(rel(tot.value, 2.0 * constants().kappa * env * (1.0 + 7.5 / std::pow(w, 0.75))) < 1e-12);
        CHECK(p1_asym(w).value > p2_asym(w).value);
    }
    CHECK_THROWS_AS(p1_asym(3.0), DomainError);
}

TEST_CASE("F1 tails") {
    const double s = 9.0;
    const double right = 1.0 - std::exp(-18.0) / (4.0 * std::sqrt(std::numbers::pi) * std::pow(s, 0.75));
    CHECK(f1_tail(s, Side::right).value == doctest::Approx(right).epsilon(1e-15));

    const AsymptoticEval left = f1_tail(-10.0, Side::left);
    CHECK(std::abs(left.value - f1_fredholm(-10.0)) <= left.next_term_estimate);

    double prev = INFINITY;
    for (int n = 1; n <= 3; ++n) {
        const double err = std::abs(f1_tail(-8.0, Side::left, n).value - f1_fredholm(-8.0));
        CHECK(err < prev);
        prev = err;
    }
    CHECK_THROWS_AS(f1_tail(0.0, Side::left), DomainError);
    CHECK_THROWS_AS(f1_tail(2.0, Side::right), DomainError);
}

TEST_CASE("cumulative F expansion") {
    const AsymptoticEval a = f_cumulative_asym(-8.0);
    CHECK(std::abs(a.value - f_cumulative(-8.0)) <= a.next_term_estimate);

    const AsymptoticEval r = f1_over_f_asym(-10.0);
    CHECK(std::abs(r.value - f1_fredholm(-10.0) / f_cumulative(-10.0)) <= r.next_term_estimate);
    CHECK(rel(f1_over_f_asym(-10.0, 1).value, 100.0 / 8.0) < 1e-15);

    // log F(-x) + x^3/24 + x^{3/2}/(3 sqrt2) + (33/16) log x -> log(8 tau_1)
    const double target = std::log(8.0 * constants().tau1);
    double prev = INFINITY;
    for (double x : {6.0, 8.0, 10.0}) {
        const double d = std::log(f_cumulative(-x)) + x * x * x / 24.0 + std::pow(x, 1.5) / (3.0 * std::numbers::sqrt2) +
                         33.0 / 16.0 * std::log(x) - target;
        CHECK(std::abs(d) < prev);
        prev = std::abs(d);
    }
    CHECK_THROWS_AS(f_cumulative_asym(-5.0), DomainError);
}

TEST_CASE("K(0,s) expansion") {
    const AsymptoticEval k = k_zero_asym(-10.0);
    CHECK(std::abs(k.value - k_zero(-10.0)) <= k.next_term_estimate);
    CHECK_THROWS_AS(k_zero_asym(-2.0), DomainError);
}

TEST_CASE("critical point u0") {
    const double a = std::pow(16.0, -0.75);
    CHECK(u0_critical(16.0) ==
          doctest::Approx(-8.0 * (1.0 - 1.5 * a - 65.0 / 32.0 * a * a - 3.0 / 8.0 * a * a * a)).epsilon(1e-15));

    // root of H': the series value misses by the O(w^{-3}) term, one Newton step fixes it
    const double w = 12.0;
    const double un = u0_critical(w, true);
    CHECK(std::abs(h_exponent_dH(un, w)) <= 1e-3 * std::abs(h_exponent_dH(un + 1.0, w)));
    CHECK(std::abs(u0_critical(w) - un) < 0.05);

    CHECK(std::abs(u0_critical(64.0) / (-16.0) - 1.0) < std::abs(u0_critical(16.0) / (-8.0) - 1.0));
    CHECK_THROWS_AS(u0_critical(4.0), DomainError);
}

TEST_CASE("exponent H") {
    const double u = -4.0, w = 12.0, h = 1e-4;
    const double fd = (h_exponent_H(u + h, w) - h_exponent_H(u - h, w)) / (2.0 * h);
    CHECK(std::abs(fd - h_exponent_dH(u, w)) < 1e-6);

    const double u0 = u0_critical(w, true), g = 1e-2;
    CHECK(h_exponent_H(u0 + g, w) - 2.0 * h_exponent_H(u0, w) + h_exponent_H(u0 - g, w) > 0.0);

    double prev = INFINITY;
    for (double ww : {10.0, 20.0, 40.0}) {
        const double d = std::abs(24.0 / (ww * ww) * h_exponent_H(0.0, ww) - 1.0);
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 1e-4);
    CHECK_THROWS_AS(h_exponent_H(-40.0, 4.0), DomainError);
    CHECK_THROWS_AS(h_exponent_H(-13.0, 40.0), DomainError);
}

TEST_CASE("Pi factor") {
    const double w = 16.0;
    CHECK(std::abs(pi_factor(u0_critical(w), w) - 1.0) <= 2.0 / (w * w * w));
    CHECK(pi_factor(0.0, 8.0) == doctest::Approx(1.0 + 1.0 / (3.0 * 512.0)).epsilon(1e-15));

    // the three-term form drops O(u/w^5) and O(w^{-6}); the double series converges well past that
    const AsymptoticEval s = pi_factor_series(1.0, 8.0);
    CHECK(s.next_term_estimate < 1e-10);
    CHECK(std::abs(s.value - pi_factor(1.0, 8.0)) < 3e-5);
    for (double ww : {8.0, 16.0, 32.0}) {
        CHECK(std::abs(pi_factor_series(0.0, ww).value - pi_factor(0.0, ww)) < 4.0 / std::pow(ww, 6.0));
    }
    CHECK_THROWS_AS(pi_factor(100.0, 8.0), DomainError);
    CHECK_THROWS_AS(pi_factor(0.0, 2.0), DomainError);
}
