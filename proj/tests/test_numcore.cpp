#include <cmath>
#include <numbers>
#include <random>

#include <boost/multiprecision/float128.hpp>

#include "doctest.h"
#include "endpoint/detail/airy_wide.hpp"
#include "endpoint/laplace.hpp"
#include "endpoint/numcore.hpp"
#include "endpoint/panel.hpp"

using namespace endpoint;
using boost::multiprecision::float128;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("gauss_legendre small rules") {
    const QuadRule r1 = gauss_legendre(1);
    REQUIRE(r1.size() == 1);
    CHECK(r1.nodes[0] == 0.0);
    CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

    const QuadRule r2 = gauss_legendre(2);
    CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(gauss_legendre(0), DomainError);
    CHECK_THROWS_AS(gauss_legendre(2049), DomainError);
}

TEST_CASE("gauss_legendre moments and structure") {
    const QuadRule r = gauss_legendre(40);
    const double m38 = r.apply([](double x) { return std::pow(x, 38); });
    CHECK(std::abs(m38 - 2.0 / 39.0) < 1e-13);

    for (int n : {3, 16, 120, 513, 2048}) {
        const QuadRule q = gauss_legendre(n);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            CHECK(q.weights[i] > 0.0);
            if (i > 0) CHECK(q.nodes[i] > q.nodes[i - 1]);
            CHECK(q.nodes[i] == -q.nodes[n - 1 - i]);
            sum += q.weights[i];
        }
        CHECK(std::abs(sum - 2.0) < 2e-13);
    }
}

TEST_CASE("gauss_legendre degree exactness on random polynomials") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int n : {2, 5, 12, 30}) {
        const QuadRule r = map_interval(gauss_legendre(n), -0.5, 2.0);
        const int deg = 2 * n - 1;
        std::vector<double> c(deg + 1);
        for (double& v : c) v = coef(gen);
        double exact = 0.0;
        for (int k = 0; k <= deg; ++k) exact += c[k] * (std::pow(2.0, k + 1) - std::pow(-0.5, k + 1)) / (k + 1);
        const double approx = r.apply([&](double x) {
            double p = 0.0;
            for (int k = deg; k >= 0; --k) p = p * x + c[k];
            return p;
        });
        double scale = 0.0;
        for (int k = 0; k <= deg; ++k) scale += std::abs(c[k]) * std::pow(2.0, k + 1) / (k + 1);
        CHECK(std::abs(approx - exact) <= 1e-12 * scale);
    }
}

TEST_CASE("map_semi_infinite") {
    const QuadRule r = map_semi_infinite(gauss_legendre(60), 0.0, 2.0);
    CHECK(r.domain == QuadRule::Domain::semi_infinite);
    CHECK(std::abs(r.apply([](double x) { return std::exp(-x); }) - 1.0) < 1e-10);
    CHECK(std::abs(r.apply([](double x) { return x * std::exp(-x * x / 2); }) - 1.0) < 1e-10);
    const QuadRule s = map_semi_infinite(gauss_legendre(60), 1.0, 2.0);
    CHECK(std::abs(s.apply([](double x) { return std::exp(-x); }) - std::exp(-1.0)) < 1e-10);
    CHECK_THROWS_AS(map_semi_infinite(gauss_legendre(4), 0.0, 0.0), DomainError);
}

TEST_CASE("integrate_adaptive") {
    CHECK(std::abs(integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-12) - 1.0 / 3.0) < 1e-14);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(std::abs(integrate_adaptive(airy_ai, 0.0, inf, 1e-12) - 1.0 / 3.0) < 1e-9);
    CHECK(std::abs(integrate_adaptive([](double x) { return std::exp(-x * x); }, -inf, inf, 1e-12) -
                   std::sqrt(std::numbers::pi)) < 1e-10);
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 0.0, 1.0, 1e-15), DomainError);
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sin(1.0 / x) / x; }, 1e-9, 1.0, 1e-13),
                    NonConvergence);
}

TEST_CASE("Airy closed-form values") {
    CHECK(std::abs(airy_ai(0.0) - 0.3550280538878172) < 1e-16);
    CHECK(std::abs(airy_ai_prime(0.0) + 0.2588194037928068) < 1e-16);
}

TEST_CASE("Airy against quad-precision Maclaurin oracle") {
    for (double x : {-9.5, -6.0, -2.5, -0.7, 0.4, 1.0, 3.3, 5.5, 7.9}) {
        const auto o = detail::airy_maclaurin<float128>(float128(x));
        const double ai = static_cast<double>(o.ai), aip = static_cast<double>(o.aip);
        CHECK(std::abs(airy_ai(x) - ai) <= 1e-13 * std::max(std::abs(ai), 1e-2));
        CHECK(std::abs(airy_ai_prime(x) - aip) <= 1e-13 * std::max(std::abs(aip), 1e-2));
    }
    // Ai(1) frozen from a 200-term extended-precision Maclaurin sum.
    CHECK(rel(airy_ai(1.0), 0.1352924163128814155241474) < 1e-14);
}

TEST_CASE("Airy frozen reference values") {
    CHECK(rel(airy_ai(-7.3), 0.3357703705151472769671717) < 1e-13);
    CHECK(rel(airy_ai_prime(-7.3), -0.1800958044832936598516171) < 1e-13);
    CHECK(rel(airy_ai(5.5), 3.368531190859981442528973e-05) < 1e-13);
}

TEST_CASE("Airy asymptotic branch matches the wide oracle") {
    for (double x : {10.0, 12.5, 20.0, 45.0, 90.0}) {
        const auto o = detail::airy_wide<float128>(float128(x));
        CHECK(rel(airy_ai(x), static_cast<double>(o.ai)) < 1e-13);
        CHECK(rel(airy_ai_prime(x), static_cast<double>(o.aip)) < 1e-13);
    }
    for (double x : {-10.0, -11.0, -13.9}) {
        const auto o = detail::airy_maclaurin<float128>(float128(x));
        CHECK(std::abs(airy_ai(x) - static_cast<double>(o.ai)) < 1e-13);
        CHECK(std::abs(airy_ai_prime(x) - static_cast<double>(o.aip)) < 1e-12);
    }
    for (double x : {-40.0, -200.0}) {
        const auto o = detail::airy_asym_neg<float128>(float128(x));
        CHECK(std::abs(airy_ai(x) - static_cast<double>(o.ai)) < 1e-11);
    }
    CHECK(airy_ai(kAiryClamp + 1.0) == 0.0);
    CHECK(airy_ai_prime(kAiryClamp + 1.0) == 0.0);
}

TEST_CASE("scaled Airy") {
    for (double x : {-3.0, 0.5, 4.0, 9.99, 10.0, 30.0, 300.0}) {
        const ScaledAiry s = airy_scaled(x);
        if (x <= 0) {
            CHECK(s.zeta == 0.0);
            CHECK(s.ai == airy_ai(x));
        } else {
            CHECK(rel(s.zeta, 2.0 * std::pow(x, 1.5) / 3.0) < 1e-15);
            if (x < kAiryClamp) CHECK(rel(s.ai * std::exp(-s.zeta), airy_ai(x)) < 1e-13);
            CHECK(s.aip < 0.0);
        }
    }
}

TEST_CASE("Airy ODE residual") {
    const double h = 2e-3;
    for (double x = -10.0; x <= 10.0; x += 0.25) {
        const double d2 = (-airy_ai(x + 2 * h) + 16 * airy_ai(x + h) - 30 * airy_ai(x) + 16 * airy_ai(x - h) -
                           airy_ai(x - 2 * h)) /
                          (12 * h * h);
        CHECK(std::abs(d2 - x * airy_ai(x)) <= 1e-9);
    }
}

TEST_CASE("AiryAsymCoeffs") {
    const auto& k = AiryAsymCoeffs::get();
    CHECK(k.c[0] == 1.0);
    CHECK(k.d[0] == 1.0);
    CHECK(k.c[1] == doctest::Approx(5.0 / 72.0).epsilon(1e-15));
    CHECK(k.d[1] == doctest::Approx(-7.0 / 72.0).epsilon(1e-15));
    for (std::size_t n = 1; n < k.c.size(); ++n) {
        CHECK(rel(k.d[n] / k.c[n], -(6.0 * n + 1) / (6.0 * n - 1)) < 1e-15);
        // Gamma-function form
        const double lg = std::lgamma(3.0 * n + 0.5) - n * std::log(54.0) - std::lgamma(n + 1.0) - std::lgamma(n + 0.5);
        CHECK(rel(k.c[n], std::exp(lg)) < 1e-11);
    }
}

TEST_CASE("constants") {
    // log of Glaisher's constant by Euler-Maclaurin on sum k log k
    const int N = 100;
    long double s = 0.0L;
    for (int k = 1; k <= N; ++k) s += k * std::log(static_cast<long double>(k));
    const long double n = N, ln = std::log(n);
    const long double logA = s - (n * n / 2 + n / 2 + 1.0L / 12) * ln + n * n / 4 - 1.0L / (720 * n * n) +
                             1.0L / (5040 * n * n * n * n) - 1.0L / (10080 * std::pow(n, 6.0L));
    const double zp = static_cast<double>(1.0L / 12 - logA);
    const Constants& c = constants();
    CHECK(std::abs(c.zeta_prime_m1 - zp) < 1e-14);
    CHECK(std::abs(c.zeta_prime_m1 + 0.1654211437004509) < 1e-15);

    CHECK(rel(c.tau1, std::exp(zp / 2) / std::pow(2.0, 11.0 / 48.0)) < 1e-14);
    CHECK(rel(c.tau1, 0.785404190991725668) < 1e-15);
    CHECK(rel(c.tau, 0.627615779531409745) < 1e-15);
    CHECK(rel(c.kappa, 1.29201265124885767) < 1e-15);
    CHECK(c.C == c.tau / 2);
    CHECK(rel(c.tau / c.kappa, std::pow(2.0, -25.0 / 24.0)) < 1e-15);
}

TEST_CASE("PanelRule interpolation and partial integrals") {
    const PanelRule p(16);
    std::vector<double> v(16);
    auto poly = [](double t) { return 1.0 + t - 3 * t * t + std::pow(t, 9) - 0.5 * std::pow(t, 15); };
    for (int j = 0; j < 16; ++j) v[j] = poly(p.nodes()[j]);
    for (double t : {-0.93, -0.2, 0.0, 0.51, 0.999}) CHECK(std::abs(p.interpolate(v.data(), t) - poly(t)) < 1e-13);
    auto anti = [](double t) { return t + t * t / 2 - t * t * t + std::pow(t, 10) / 10 - std::pow(t, 16) / 32; };
    CHECK(std::abs(p.integrate_from(v.data(), 0.3) - (anti(1.0) - anti(0.3))) < 1e-13);
    CHECK(std::abs(p.integrate_to(v.data(), -0.4) - (anti(-0.4) - anti(-1.0))) < 1e-13);
}

TEST_CASE("derivative_jet") {
    const Jet j = derivative_jet([](double x) { return std::exp(x); }, 0.3, 6, 0.05);
    for (int k = 0; k <= 4; ++k) CHECK(rel(j.d[k], std::exp(0.3)) < 1e-8);
    for (int k = 5; k <= 6; ++k) CHECK(rel(j.d[k], std::exp(0.3)) < 1e-5);
    CHECK(j.noise < 1e-3);
}

namespace {

double quad(const RealFn& H, const RealFn& f, double w, double a, double b) {
    return integrate_adaptive(
        [&](double u) {
            const double v = std::exp(-w * H(u)) * f(u);
            return std::isfinite(v) ? v : 0.0;
        },
        a, b, 1e-13);
}

}  // namespace

TEST_CASE("laplace_interior") {
    const double inf = std::numeric_limits<double>::infinity();
    auto sq = [](double u) { return u * u; };
    auto one = [](double) { return 1.0; };
    const AsymptoticEval g = laplace_interior(sq, one, -inf, inf, 0.0, 7.0);
    CHECK(rel(g.value, std::sqrt(std::numbers::pi / 7.0)) < 1e-13);
    const AsymptoticEval ga = laplace_interior(std::vector<double>{0, 0, 2}, std::vector<double>{1}, 7.0);
    CHECK(ga.value == doctest::Approx(std::sqrt(std::numbers::pi / 7.0)).epsilon(1e-15));
    CHECK(ga.next_term_estimate == 0.0);

    auto f2 = [](double u) { return 1.0 + u * u; };
    const AsymptoticEval a = laplace_interior(sq, f2, -inf, inf, 0.0, 10.0);
    CHECK(std::abs(a.value - quad(sq, f2, 10.0, -inf, inf)) <= a.next_term_estimate + 1e-15);

    auto ch = [](double u) { return std::cosh(u) - 1.0; };
    const AsymptoticEval b = laplace_interior(ch, one, -inf, inf, 0.0, 20.0);
    CHECK(std::abs(b.value - quad(ch, one, 20.0, -inf, inf)) <= b.next_term_estimate);

    CHECK_THROWS_AS(laplace_interior(std::vector<double>{0, 0, -1}, std::vector<double>{1}, 3.0), DomainError);
    CHECK_THROWS_AS(laplace_interior(sq, one, 1.0, 2.0, 0.0, 3.0), DomainError);
}

TEST_CASE("laplace_boundary") {
    const double inf = std::numeric_limits<double>::infinity();
    auto id = [](double u) { return u; };
    auto one = [](double) { return 1.0; };
    const AsymptoticEval e = laplace_boundary(std::vector<double>{0, 1}, std::vector<double>{1}, 4.0);
    CHECK(e.value == 0.25);

    auto h2 = [](double u) { return u + u * u; };
    const AsymptoticEval a = laplace_boundary(h2, one, 0.0, 15.0);
    CHECK(std::abs(a.value - quad(h2, one, 15.0, 0.0, inf)) <= a.next_term_estimate);

    auto ex = [](double u) { return std::exp(u); };
    const AsymptoticEval b = laplace_boundary(id, ex, 1.0, 20.0);
    CHECK(std::abs(b.value - quad(id, ex, 20.0, 1.0, inf)) <= b.next_term_estimate);

    CHECK_THROWS_AS(laplace_boundary(std::vector<double>{0, 0}, std::vector<double>{1}, 3.0), DomainError);
}

TEST_CASE("Laplace w^{-2} bracket for H = u + u^2") {
    // int_0^inf e^{-w(u+u^2)} du = (1/w)(1 - 2/w + 12/w^2 - 120/w^3 + ...)
    const auto B = laplace_series_boundary({0, 1, 2}, {1}, 3);
    CHECK(B[0] == 1.0);
    CHECK(B[1] == -2.0);
    CHECK(B[2] == 12.0);
    CHECK(B[3] == -120.0);
}

TEST_CASE("explicit formulas agree with the formal series") {
    const std::vector<double> H{0.3, 0.0, 1.7, -0.4, 2.2, 0.6, -1.1};
    const std::vector<double> f{1.2, 0.5, -0.8, 0.9, 0.3};
    const double w = 9.0;
    const auto A = laplace_series_interior(H, f, 1);
    const double lead = std::exp(-w * H[0]) * std::sqrt(2 * std::numbers::pi / (w * H[2]));
    CHECK(rel(laplace_interior(H, f, w).value, lead * (A[0] + A[1] / w)) < 1e-14);

    const std::vector<double> Hb{0.3, 1.4, 1.7, -0.4, 2.2};
    const auto B = laplace_series_boundary(Hb, f, 2);
    const double bv = std::exp(-w * Hb[0]) * (B[0] / w + B[1] / (w * w) + B[2] / (w * w * w));
    CHECK(rel(laplace_boundary(Hb, f, w).value, bv) < 1e-14);
}

TEST_CASE("Laplace error order on H = u^2 + u^4, f = 1 + u") {
    auto H = [](double u) { return u * u + std::pow(u, 4); };
    auto f = [](double u) { return 1.0 + u; };
    const double inf = std::numeric_limits<double>::infinity();
    for (double w : {8.0, 16.0}) {
        const double e1 = rel(laplace_interior(H, f, -inf, inf, 0.0, w).value, quad(H, f, w, -inf, inf));
        const double e2 = rel(laplace_interior(H, f, -inf, inf, 0.0, 2 * w).value, quad(H, f, 2 * w, -inf, inf));
        CHECK(e1 / e2 >= 3.0);
        const double b1 = rel(laplace_boundary(H, f, 0.5, w).value, quad(H, f, w, 0.5, inf));
        const double b2 = rel(laplace_boundary(H, f, 0.5, 2 * w).value, quad(H, f, 2 * w, 0.5, inf));
        CHECK(b1 / b2 >= 3.0);
    }
}
