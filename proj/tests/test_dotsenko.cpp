#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "endpoint/dotsenko.hpp"

using namespace endpoint;

namespace {

// (1/2 pi i) int_L exp(z^3/6 - x z^2/4 - omega z) dz along the rays arg z = +-pi/3
double psi_contour(double omega, double x) {
    const std::complex<double> e = std::polar(1.0, std::numbers::pi / 3.0);
    auto f = [&](double r) {
        const std::complex<double> z = r * e;
        return (std::exp(z * z * z / 6.0 - x * z * z / 4.0 - omega * z) * e).imag();
    };
    return integrate_adaptive(f, 0.0, 12.0, 1e-13) / std::numbers::pi;
}

}  // namespace

TEST_CASE("Psi closed form") {
    const double k13 = std::cbrt(2.0);
    for (double w : {-2.0, 0.0, 1.5}) CHECK(psi_dot(w, 0.0) == doctest::Approx(k13 * airy_ai(k13 * w)).epsilon(1e-15));
    CHECK(std::abs(psi_dot(1.0, 1.0) - psi_contour(1.0, 1.0)) < 1e-8);
    CHECK(std::abs(psi_dot(-0.7, 2.0) - psi_contour(-0.7, 2.0)) < 1e-8);
    // 30-digit reference
    CHECK(psi_dot(1.0, 1.0) == doctest::Approx(0.05876129181899561264).epsilon(1e-14));

    const double slope = (std::log(psi_dot(14.0, 0.0)) - std::log(psi_dot(10.0, 0.0))) / 4.0;
    const double expect = -2.0 / 3.0 * (std::pow(k13 * 14.0, 1.5) - std::pow(k13 * 10.0, 1.5)) / 4.0;
    CHECK(std::abs(slope / expect - 1.0) < 0.02);

    const double h = 1e-5;
    for (double w : {-1.0, 0.4}) {
        const double fd = (psi_dot(w + h, 0.8) - psi_dot(w - h, 0.8)) / (2.0 * h);
        CHECK(std::abs(fd - psi_dot_domega(w, 0.8)) < 1e-9);
    }
}

TEST_CASE("Phi") {
    // mpmath, 20 digits, from the y-integral as printed
    CHECK(phi_dot(0.7, 0.3, 0.0, 1.0) == doctest::Approx(0.14038456403361090896).epsilon(1e-11));
    CHECK(phi_dot(0.7, 0.3, 1.0, -1.0) == doctest::Approx(0.013021682830204167121).epsilon(1e-10));

    // Phi vanishes as x -> -inf and tends to a constant as x -> +inf
    CHECK(std::abs(phi_dot(0.7, 0.3, 0.0, -6.0)) < std::abs(phi_dot(0.7, 0.3, 0.0, -4.0)));
    CHECK(std::abs(phi_dot(0.7, 0.3, 0.0, -6.0)) < 1e-8);
    CHECK(std::abs(phi_dot(0.7, 0.3, 0.0, 6.0) - phi_dot(0.7, 0.3, 0.0, 4.0)) < 1e-5);

    // swap with t -> -t: Phi_{x2 x1}(m, -t) + Phi_{x1 x2}(m, t) does not depend on t
    const double c = phi_dot(0.7, 0.3, 0.5, -0.5) + phi_dot(0.3, 0.7, 0.5, 0.5);
    for (double t : {1.0, 2.0}) CHECK(std::abs(phi_dot(0.7, 0.3, 0.5, -t) + phi_dot(0.3, 0.7, 0.5, t) - c) < 1e-6);
    CHECK_THROWS_AS(phi_dot(-1.0, 0.0, 0.0, 0.0), DomainError);
}

TEST_CASE("t-derivative identity") {
    // mpmath: -d/dt Phi_{x2 x1} = -0.0279062444938499 while the product is 0.0488684579253164
    const IdentitySides lit = phi_t_identity_literal(0.3, 0.7, 0.0, 1.0);
    CHECK(lit.rhs == doctest::Approx(0.048868457925316389593).epsilon(1e-12));
    CHECK(lit.lhs == doctest::Approx(-0.027906244493849937681).epsilon(1e-8));

    const IdentitySides a = phi_t_identity(0.3, 0.7, 0.0, 1.0);
    CHECK(std::abs(a.lhs - a.rhs) < 1e-8);
    const IdentitySides b = phi_t_identity(0.3, 0.7, 1.0, -1.0);
    CHECK(b.rhs == doctest::Approx(0.0098840305011741581741).epsilon(1e-12));
    CHECK(std::abs(b.lhs - b.rhs) < 1e-8);
    const IdentitySides c = phi_t_identity(0.1, 0.5, -1.0, 0.5);
    CHECK(c.rhs == doctest::Approx(0.08076442264416766947).epsilon(1e-12));
    CHECK(std::abs(c.lhs - c.rhs) < 1e-8);
}

TEST_CASE("W by both routes") {
    const DotsenkoEval w0 = w_dist(0.0, 60);
    CHECK(std::abs(w0.W - 0.5) < 1e-6);
    CHECK(w0.route == DotsenkoRoute::appendix_c);

    // the formula as printed is the distribution function: W(x) = int_{-inf}^x P
    const DotsenkoEval w1 = w_dist(1.0, 60), m1 = w_main_density(1.0);
    CHECK(m1.route == DotsenkoRoute::main_density);
    CHECK(std::abs(w1.W - (1.0 - m1.W)) < 1e-6);
    CHECK(w1.W > w0.W);
    CHECK(w1.W <= 1.0 + 1e-6);

    CHECK(std::abs(w_main_density(0.0).W - 0.5) < 1e-9);
    CHECK(w_dist(1.0, 60, false).W == w1.W);
    CHECK_THROWS_AS(w_dist(3.0), DomainError);
    CHECK_THROWS_AS(w_dist(0.0, 40), DomainError);
}
