#include "xcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "endpoint/asymptotics.hpp"
#include "endpoint/density.hpp"
#include "endpoint/dotsenko.hpp"
#include "endpoint/fredholm.hpp"
#include "endpoint/hfun.hpp"
#include "endpoint/laplace.hpp"
#include "endpoint/painleve.hpp"

namespace endpoint::xcheck {

namespace {

const double k23 = std::cbrt(2.0) * std::cbrt(2.0);
const double k43 = 2.0 * std::cbrt(2.0);
const double kInf = std::numeric_limits<double>::infinity();

// mpmath, 30 digits, from zeta'(-1)
constexpr double kTauOracle = 0.627615779531409745086851845228;
constexpr double kTau1Oracle = 0.785404190991725668244533405256;

void le(Report& r, std::string name, double measured, double bound) {
    r.checks.push_back({std::move(name), measured, bound, false, std::isfinite(measured) && measured <= bound});
}

void lt(Report& r, std::string name, double measured, double bound) {
    r.checks.push_back({std::move(name), measured, bound, true, std::isfinite(measured) && measured < bound});
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

void c1(Report& r) {
    r.title = "F1 route equivalence";
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int s = -10; s <= 4; ++s) worst = std::max(worst, std::abs(f1_fredholm(s) - f1_painleve(s)));
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    le(r, "max |f1_fredholm - f1_painleve|, s = -10..4", worst, 1e-8);
    le(r, "runtime [s]", sec, 120.0);
}

void c2(Report& r) {
    r.title = "GOE tails";
    const AsymptoticEval left = f1_tail(-10.0, Side::left), right = f1_tail(8.0, Side::right);
    r.checks.push_back({"|left tail - f1_fredholm| at s = -10", std::abs(left.value - f1_fredholm(-10.0)),
                        left.next_term_estimate});
    r.checks.push_back({"|right tail - f1_fredholm| at s = 8", std::abs(right.value - f1_fredholm(8.0)),
                        right.next_term_estimate});
    for (auto& c : r.checks) c.pass = c.measured <= c.bound;
}

void c3(Report& r) {
    r.title = "Hastings-McLeod";
    le(r, "|q_hm(5) - Ai(5)| / Ai(5)", rel(q_hm(5.0), airy_ai(5.0)), 1e-6);
    const AsymptoticEval a = q_asym(-10.0);
    le(r, "|q_hm(-10) - q_asym(-10)| vs next term", std::abs(q_hm(-10.0) - a.value), a.next_term_estimate);
    double worst = 0.0;
    for (int k = 0; k <= 64; ++k) worst = std::max(worst, painleve_sample(-10.0 + 0.25 * k).ode_residual);
    le(r, "max ODE residual on [-10, 6], step 0.25", worst, 1e-6);
    r.notes.push_back("the q expansion has same-sign terms, so its remainder exceeds the first omitted term");
}

void c4(Report& r) {
    r.title = "K(0,s)";
    const AsymptoticEval a = k_zero_asym(-10.0);
    le(r, "|k_zero(-10) - expansion| vs O(s^-6) term", std::abs(k_zero(-10.0) - a.value), a.next_term_estimate);
    const SampleTable& tab = SampleTable::global();
    const double q2 = tab.integrate_from(-6.0, [](const TableNode& n) { return n.q * n.q; }) +
                      integrate_adaptive([](double x) { return airy_ai(x) * airy_ai(x); }, SampleTable::kHi, kInf, 1e-13);
    le(r, "|k_zero(-6) - (q + int q^2)|", std::abs(k_zero(-6.0) - (q_hm(-6.0) + q2)), 1e-7);
}

void c5(Report& r) {
    r.title = "h routes";
    double worst = 0.0;
    for (double s : {-2.0, 0.0, 2.0})
        for (double w : {10.0, 15.0, 20.0}) {
            // h_resolvent's off-grid quadrature stops at w = 12; beyond it the
            // resolvent sum on the Nystrom grid is the same route
            const double res = w <= 12.0 ? h_resolvent(s, w).value : h_grid(NystromOperator::build(s), w);
            worst = std::max(worst, std::abs(h_direct(s, w).value - res));
        }
    le(r, "max |h_direct - h_resolvent| on {-2,0,2} x {10,15,20}", worst, 1e-7);

    const double d = h_direct(0.0, 20.0).value;
    const double e1 = std::abs(d - h_expansion(0.0, 20.0, 1).value), e2 = std::abs(d - h_expansion(0.0, 20.0, 2).value);
    lt(r, "expansion error ratio nterms 2 / 1 at (0, 20)", e2 / e1, 1.0);

    const double lead = std::sqrt(std::numbers::pi) / 4.0;
    auto scaled = [](double w) {
        return h_direct(0.0, w).value * std::pow(w, 1.5) / (std::exp(-int_q(0.0)) * -v_of_s(0.0));
    };
    const double fitted = 2.0 * scaled(80.0) - scaled(40.0);  // 1/w term removed
    le(r, "|fitted prefactor / (sqrt(pi)/4) - 1|", std::abs(fitted / lead - 1.0), 0.02);
    r.notes.push_back(fmt("fitted prefactor %.6f; sqrt(pi)/4 = %.6f, sqrt(pi)/8 = %.6f", fitted, lead, lead / 2.0));
}

void c6(Report& r) {
    r.title = "Schehr and MFQR joint densities";
    double worst = 0.0;
    for (int i = -2; i <= 2; ++i)
        for (int j = -2; j <= 2; ++j)
            worst = std::max(worst, std::abs(phat_joint(0.5 * i, 0.5 * j) - phat_joint_mfqr(0.5 * i, 0.5 * j)));
    le(r, "max |phat_joint - phat_joint_mfqr| on [-1,1]^2, step 0.5", worst, 1e-6);
}

double integrate_w(const std::function<double(double)>& f) {
    static const QuadRule rule = gauss_legendre(12);
    double total = 0.0;
    for (int p = 0; p < 8; ++p) total += map_interval(rule, p, p + 1.0).apply(f);
    return 2.0 * total;
}

void c7(Report& r) {
    r.title = "probability axioms";
    le(r, "|int phat - 1|", std::abs(tail_prob(0.0).value - 1.0), 1e-3);
    double odd = 0.0;
    for (double m : {-1.0, 0.0, 1.0})
        for (double t : {0.5, 1.0, 1.5}) odd = std::max(odd, std::abs(phat_joint_mfqr(m, t) - phat_joint_mfqr(m, -t)));
    for (double t : {0.5, 1.0, 1.5, 2.0}) odd = std::max(odd, std::abs(phat_marginal(t) - phat_marginal(-t)));
    le(r, "max |phat(t) - phat(-t)|", odd, 1e-8);
    double worst = 0.0;
    for (double m : {-1.0, 0.0, 1.0}) {
        const double s = k23 * m, h = 1e-4;
        const double target = k23 * (f1_fredholm(s + h) - f1_fredholm(s - h)) / (2.0 * h);
        const double marg = 4.0 / k43 * integrate_w([s](double w) { return p_joint_schehr(s, w); });
        worst = std::max(worst, std::abs(marg - target));
    }
    le(r, "max |int phat(m,t) dt - 2^{2/3} F1'(2^{2/3} m)|, m = -1,0,1", worst, 1e-4);
}

void c8(Report& r) {
    r.title = "density against its tail expansion";
    const auto t0 = std::chrono::steady_clock::now();
    double dev[3];
    const double ts[3] = {1.6, 2.0, 2.4};
    for (int i = 0; i < 3; ++i) {
        const double ratio = phat_marginal(ts[i]) / phat_asym(ts[i]).value;
        dev[i] = std::abs(ratio - 1.0);
        r.notes.push_back(fmt("r(%.1f) = %.6f", ts[i], ratio));
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    lt(r, "max step of |r - 1| over t = 1.6, 2.0, 2.4", std::max(dev[1] - dev[0], dev[2] - dev[1]), 0.0);
    le(r, "|r(2.4) - 1|", dev[2], 0.2);
    le(r, "runtime [s]", sec, 600.0);
}

void c9(Report& r) {
    r.title = "tail probability";
    const double ratio = tail_prob(2.0).value / tail_asym(2.0).value;
    le(r, "|tail_prob(2) / tail_asym(2) - 1|", std::abs(ratio - 1.0), 0.3);
    for (double t : {2.0, 3.0, 4.0}) {
        const TailExpansion e = tail_asym(t);
        const double quad = 2.0 * integrate_adaptive([](double x) { return phat_asym(x).value; }, t, t + 3.0, 1e-13);
        r.checks.push_back({fmt("|2 int_t phat_asym - tail_asym| at t = %.0f", t), std::abs(quad - e.value),
                            e.next_order, false, std::abs(quad - e.value) <= e.next_order});
    }
}

void c10(Report& r) {
    r.title = "constants";
    const Constants& c = constants();
    le(r, "|tau / (2^{11/8} kappa) - 1|", std::abs(c.tau / (std::pow(2.0, 11.0 / 8.0) * c.kappa) - 1.0), 1e-12);
    le(r, "|C / (tau/2) - 1|", std::abs(c.C / (c.tau / 2.0) - 1.0), 1e-12);
    double worst = 0.0;
    for (double t : {1.6, 2.0, 3.0}) worst = std::max(worst, rel(k43 * p_asym_total(k43 * t).value, phat_asym(t).value));
    le(r, "max rel |2^{4/3} p_asym_total(2^{4/3} t) - phat_asym(t)|", worst, 1e-12);
    le(r, "|tau / oracle - 1|", rel(c.tau, kTauOracle), 1e-12);
    le(r, "|tau1 / oracle - 1|", rel(c.tau1, kTau1Oracle), 1e-12);
    le(r, "|tau - 0.62660| (quoted digits)", std::abs(c.tau - 0.62660), 5e-6);
    le(r, "|tau1 - 0.78537| (quoted digits)", std::abs(c.tau1 - 0.78537), 5e-6);
    r.notes.push_back(fmt("tau / (2^{-25/24} kappa) - 1 = %.2e", c.tau / (std::pow(2.0, -25.0 / 24.0) * c.kappa) - 1.0));
}

void c11(Report& r) {
    r.title = "Dotsenko identities";
    double lit = 0.0, cor = 0.0;
    for (double x1 : {0.3, 0.7})
        for (double x2 : {0.3, 0.7})
            for (double m : {-0.5, 0.5})
                for (double t : {-1.0, 1.0}) {
                    const IdentitySides a = phi_t_identity_literal(x1, x2, m, t), b = phi_t_identity(x1, x2, m, t);
                    lit = std::max(lit, std::abs(a.lhs - a.rhs));
                    cor = std::max(cor, std::abs(b.lhs - b.rhs));
                }
    le(r, "t-derivative identity as printed, max residual", lit, 1e-5);
    r.notes.push_back(fmt("with indices swapped and sign flipped: max residual %.2e", cor));
    double worst = 0.0, worst_cdf = 0.0, w0 = 0.0;
    for (double x : {0.0, 0.5, 1.0, 1.5}) {
        const double W = w_dist(x).W, tail = w_main_density(x).W;
        if (x == 0.0) w0 = W;
        worst = std::max(worst, std::abs(W - tail));
        worst_cdf = std::max(worst_cdf, std::abs(W - (1.0 - tail)));
    }
    le(r, "max |W(x) - int_x^inf P|, x = 0, 0.5, 1, 1.5", worst, 1e-3);
    le(r, "|W(0) - 1/2|", std::abs(w0 - 0.5), 1e-3);
    r.notes.push_back(fmt("W is the distribution function: max |W(x) - (1 - int_x^inf P)| = %.2e", worst_cdf));
}

void c12(Report& r) {
    r.title = "Laplace evaluators";
    auto quad = [](const RealFn& H, const RealFn& f, double w, double a, double b) {
        return integrate_adaptive(
            [&](double u) {
                const double v = std::exp(-w * H(u)) * f(u);
                return std::isfinite(v) ? v : 0.0;
            },
            a, b, 1e-13);
    };
    auto add = [&](const char* name, const AsymptoticEval& e, double q) {
        r.checks.push_back({name, std::abs(e.value - q), e.next_term_estimate, false,
                            std::abs(e.value - q) <= e.next_term_estimate});
    };
    auto sq = [](double u) { return u * u; };
    auto one = [](double) { return 1.0; };
    auto f2 = [](double u) { return 1.0 + u * u; };
    auto ch = [](double u) { return std::cosh(u) - 1.0; };
    auto id = [](double u) { return u; };
    auto h2 = [](double u) { return u + u * u; };
    auto ex = [](double u) { return std::exp(u); };
    const double g = std::sqrt(std::numbers::pi / 7.0);
    le(r, "interior H = u^2, f = 1, w = 7: rel error vs sqrt(pi/w)",
       rel(laplace_interior(sq, one, -kInf, kInf, 0.0, 7.0).value, g), 1e-13);
    add("interior H = u^2, f = 1 + u^2, w = 10", laplace_interior(sq, f2, -kInf, kInf, 0.0, 10.0),
        quad(sq, f2, 10.0, -kInf, kInf));
    add("interior H = cosh u - 1, f = 1, w = 20", laplace_interior(ch, one, -kInf, kInf, 0.0, 20.0),
        quad(ch, one, 20.0, -kInf, kInf));
    le(r, "boundary H = u, f = 1, a = 0, w = 4: |value - 1/w|",
       std::abs(laplace_boundary(std::vector<double>{0, 1}, std::vector<double>{1}, 4.0).value - 0.25), 1e-15);
    add("boundary H = u + u^2, f = 1, a = 0, w = 15", laplace_boundary(h2, one, 0.0, 15.0), quad(h2, one, 15.0, 0.0, kInf));
    add("boundary H = u, f = e^u, a = 1, w = 20", laplace_boundary(id, ex, 1.0, 20.0), quad(id, ex, 20.0, 1.0, kInf));
}

}  // namespace

bool Report::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Report run(int id) {
    static const std::function<void(Report&)> table[kCriteria] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
    Report r;
    r.id = id;
    if (id < 1 || id > kCriteria) {
        r.title = "unknown criterion";
        return r;
    }
    const auto t0 = std::chrono::steady_clock::now();
    try {
        table[id - 1](r);
    } catch (const std::exception& e) {
        r.checks.push_back({"evaluation", kInf, 0.0, false, false});
        r.notes.push_back(std::string("error: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string format(const Report& r) {
    std::ostringstream os;
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s  criterion %2d  %s (%.1f s)\n", r.passed() ? "PASS" : "FAIL", r.id,
                  r.title.c_str(), r.seconds);
    os << buf;
    for (const Check& c : r.checks) {
        std::snprintf(buf, sizeof buf, "      [%s] %-58s %11.3e %s %.3e\n", c.pass ? "ok" : "x ", c.name.c_str(),
                      c.measured, c.strict ? "< " : "<=", c.bound);
        os << buf;
    }
    for (const std::string& n : r.notes) os << "      note: " << n << '\n';
    return os.str();
}

}  // namespace endpoint::xcheck
