#include "endpoint/laplace.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace endpoint {

namespace {

constexpr int kStencil = 13;
constexpr int kMaxOrder = 8;

using StencilTable = std::array<std::array<double, kMaxOrder + 1>, kStencil>;

// Fornberg weights for offsets -6..6 evaluated at 0.
const StencilTable& stencil() {
    static const StencilTable c = [] {
        StencilTable t{};
        std::array<double, kStencil> x{};
        for (int i = 0; i < kStencil; ++i) x[i] = i - kStencil / 2;
        double c1 = 1.0, c4 = x[0];
        t[0][0] = 1.0;
        for (int i = 1; i < kStencil; ++i) {
            const int mn = std::min(i, kMaxOrder);
            double c2 = 1.0;
            const double c5 = c4;
            c4 = x[i];
            for (int j = 0; j < i; ++j) {
                const double c3 = x[i] - x[j];
                c2 *= c3;
                if (j == i - 1) {
                    for (int k = mn; k >= 1; --k) t[i][k] = c1 * (k * t[i - 1][k - 1] - c5 * t[i - 1][k]) / c2;
                    t[i][0] = -c1 * c5 * t[i - 1][0] / c2;
                }
                for (int k = mn; k >= 1; --k) t[j][k] = (c4 * t[j][k] - k * t[j][k - 1]) / c3;
                t[j][0] = c4 * t[j][0] / c3;
            }
            c1 = c2;
        }
        return t;
    }();
    return c;
}

std::vector<double> stencil_derivs(const RealFn& g, double x0, int order, double h) {
    const auto& c = stencil();
    std::array<double, kStencil> v{};
    for (int i = 0; i < kStencil; ++i) v[i] = g(x0 + (i - kStencil / 2) * h);
    std::vector<double> d(order + 1, 0.0);
    double hk = 1.0;
    for (int k = 0; k <= order; ++k) {
        double s = 0.0;
        for (int i = 0; i < kStencil; ++i) s += c[i][k] * v[i];
        d[k] = (k == 0) ? v[kStencil / 2] : s / hk;
        hk *= h;
    }
    return d;
}

using Poly = std::vector<double>;

Poly mul(const Poly& a, const Poly& b, int deg) {
    Poly r(deg + 1, 0.0);
    for (int i = 0; i < static_cast<int>(a.size()) && i <= deg; ++i) {
        if (a[i] == 0.0) continue;
        for (int j = 0; j < static_cast<int>(b.size()) && i + j <= deg; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Taylor coefficients g^{(j)}/j! for j < n.
Poly taylor(const std::vector<double>& d, int n) {
    Poly p(n, 0.0);
    double fact = 1.0;
    for (int j = 0; j < n; ++j) {
        if (j > 0) fact *= j;
        if (j < static_cast<int>(d.size())) p[j] = d[j] / fact;
    }
    return p;
}

double at(const std::vector<double>& v, int i) { return i < static_cast<int>(v.size()) ? v[i] : 0.0; }

double double_factorial(int n) {
    double r = 1.0;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// First omitted term plus twice its geometric tail, rho = |T_{K+1} / T_K|
// capped at 1/2. The first omitted term alone underestimates remainders
// whose terms share a sign.
double remainder_estimate(double tk, double tk1) {
    const double a = std::abs(tk);
    if (a == 0.0) return std::abs(tk1);
    const double rho = std::min(std::abs(tk1) / a, 0.5);
    return a * (1.0 + 2.0 * rho / (1.0 - rho));
}

}  // namespace

Jet derivative_jet(const RealFn& g, double x0, int order, double h) {
    if (order < 0 || order > kMaxOrder) throw DomainError("derivative_jet: order must be in [0, 8]");
    Jet j;
    j.d = stencil_derivs(g, x0, order, h);
    const std::vector<double> wide = stencil_derivs(g, x0, order, 2.0 * h);
    for (int k = 0; k <= order; ++k) j.noise = std::max(j.noise, std::abs(j.d[k] - wide[k]));
    return j;
}

std::vector<double> laplace_series_interior(const std::vector<double>& H, const std::vector<double>& f, int kmax) {
    const int deg = 6 * kmax;
    const double H2 = at(H, 2);
    Poly fp = taylor(f, deg + 1);
    Poly g = taylor(H, deg + 1);
    for (int j = 0; j < 3 && j < static_cast<int>(g.size()); ++j) g[j] = 0.0;
    std::vector<double> A(kmax + 1, 0.0);
    Poly E = fp;  // f g^m / m!
    for (int m = 0; m <= 2 * kmax; ++m) {
        if (m > 0) {
            E = mul(E, g, deg);
            for (double& e : E) e /= m;
        }
        const double sign = (m % 2) ? -1.0 : 1.0;
        for (int k = 0; k <= kmax; ++k) {
            const int p = 2 * (k + m);
            if (p > deg) continue;
            A[k] += sign * E[p] * double_factorial(p - 1) / std::pow(H2, p / 2);
        }
    }
    return A;
}

std::vector<double> laplace_series_boundary(const std::vector<double>& H, const std::vector<double>& f, int kmax) {
    const int deg = 2 * kmax;
    const double H1 = at(H, 1);
    Poly fp = taylor(f, deg + 1);
    Poly g = taylor(H, deg + 1);
    for (int j = 0; j < 2 && j < static_cast<int>(g.size()); ++j) g[j] = 0.0;
    std::vector<double> B(kmax + 1, 0.0);
    Poly E = fp;
    for (int m = 0; m <= kmax; ++m) {
        if (m > 0) {
            E = mul(E, g, deg);
            for (double& e : E) e /= m;
        }
        const double sign = (m % 2) ? -1.0 : 1.0;
        for (int k = m; k <= kmax; ++k) {
            const int p = k + m;
            if (p > deg) continue;
            B[k] += sign * E[p] * factorial(p) / std::pow(H1, p + 1);
        }
    }
    return B;
}

AsymptoticEval laplace_interior(const std::vector<double>& H, const std::vector<double>& f, double w) {
    const double H0 = at(H, 0), H2 = at(H, 2), H3 = at(H, 3), H4 = at(H, 4);
    const double f0 = at(f, 0), f1 = at(f, 1), f2 = at(f, 2);
    if (!(H2 > 0.0)) throw DomainError("laplace_interior: H''(u0) must be positive");
    if (!(w > 0.0)) throw DomainError("laplace_interior: w must be positive");
    if (f0 == 0.0) throw DomainError("laplace_interior: f(u0) must be nonzero");
    const double bracket = f2 / f0 - H4 / (4.0 * H2) - H3 * f1 / (H2 * f0) + 5.0 * H3 * H3 / (12.0 * H2 * H2);
    const double lead = std::exp(-w * H0) * std::sqrt(2.0 * std::numbers::pi / (w * H2));
    AsymptoticEval r;
    r.value = lead * f0 * (1.0 + bracket / (2.0 * w * H2));
    const std::vector<double> A = laplace_series_interior(H, f, 3);
    r.next_term_estimate = lead * remainder_estimate(A[2] / (w * w), A[3] / (w * w * w));
    return r;
}

AsymptoticEval laplace_boundary(const std::vector<double>& H, const std::vector<double>& f, double w) {
    const double H0 = at(H, 0), H1 = at(H, 1), H2 = at(H, 2), H3 = at(H, 3);
    const double f0 = at(f, 0), f1 = at(f, 1), f2 = at(f, 2);
    if (!(H1 > 0.0)) throw DomainError("laplace_boundary: H'(a) must be positive");
    if (!(w > 0.0)) throw DomainError("laplace_boundary: w must be positive");
    if (f0 == 0.0) throw DomainError("laplace_boundary: f(a) must be nonzero");
    const double c1 = f1 / (f0 * H1) - H2 / (H1 * H1);
    const double c2 = f2 / (f0 * H1 * H1) - H3 / (H1 * H1 * H1) - 3.0 * f1 * H2 / (f0 * H1 * H1 * H1) +
                      3.0 * H2 * H2 / (H1 * H1 * H1 * H1);
    const double lead = std::exp(-w * H0) / (w * H1);
    AsymptoticEval r;
    r.value = lead * f0 * (1.0 + c1 / w + c2 / (w * w));
    const std::vector<double> B = laplace_series_boundary(H, f, 4);
    r.next_term_estimate = std::exp(-w * H0) * remainder_estimate(B[3] / std::pow(w, 4), B[4] / std::pow(w, 5));
    return r;
}

namespace {

template <class Eval>
AsymptoticEval with_stencil(const RealFn& H, const RealFn& f, double x0, int hord, int ford, Eval eval) {
    const double h = 0.05 * std::max(1.0, std::abs(x0));
    const std::vector<double> H1 = stencil_derivs(H, x0, hord, h);
    const std::vector<double> F1 = stencil_derivs(f, x0, ford, h);
    const std::vector<double> H2 = stencil_derivs(H, x0, hord, 2.0 * h);
    const std::vector<double> F2 = stencil_derivs(f, x0, ford, 2.0 * h);
    AsymptoticEval a = eval(H1, F1);
    const AsymptoticEval b = eval(H2, F2);
    // stencil truncation (h vs 2h) plus a roundoff floor for the derivatives
    a.next_term_estimate += std::abs(a.value - b.value) + 1e3 * std::numeric_limits<double>::epsilon() * std::abs(a.value);
    return a;
}

}  // namespace

AsymptoticEval laplace_interior(const RealFn& H, const RealFn& f, double a, double b, double u0, double w) {
    if (!(a < u0 && u0 < b)) throw DomainError("laplace_interior: u0 must lie inside (a, b)");
    return with_stencil(H, f, u0, 8, 6, [w](const auto& hd, const auto& fd) { return laplace_interior(hd, fd, w); });
}

AsymptoticEval laplace_boundary(const RealFn& H, const RealFn& f, double a, double w) {
    return with_stencil(H, f, a, 5, 4, [w](const auto& hd, const auto& fd) { return laplace_boundary(hd, fd, w); });
}

}  // namespace endpoint
