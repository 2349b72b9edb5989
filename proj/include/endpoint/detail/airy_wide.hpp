#pragma once

// Airy functions and Gauss-Legendre nodes for any floating type R
// (double, long double, boost float128). Used by the quad-precision
// Nystrom kernels and as extended-precision oracles in tests.

#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/constants/constants.hpp>

namespace endpoint::detail {

template <class R>
struct WideAiry {
    R ai;
    R aip;
};

template <class R>
R airy_c1() {
    return static_cast<R>(0.355028053887817239260063186004183176398Q);
}

template <class R>
R airy_c2() {
    return static_cast<R>(0.258819403792806798405183560189203963479Q);
}

// Ai = c1 f - c2 g, Ai' = c1 f' - c2 g'. Summed until terms stop mattering.
template <class R>
WideAiry<R> airy_maclaurin(R x) {
    using std::abs;
    const R eps = std::numeric_limits<R>::epsilon();
    const R x3 = x * x * x;
    R t = 1, f = 1;          // f series
    R u = x, g = x;          // g series
    R p = x * x / 2, fp = p; // f' series
    R r = 1, gp = 1;         // g' series
    for (int k = 1; k < 400; ++k) {
        const R k3 = 3 * k;
        t *= x3 / ((k3 - 1) * k3);
        u *= x3 / (k3 * (k3 + 1));
        r *= x3 / (k3 * (k3 - 2));
        f += t;
        g += u;
        gp += r;
        if (k >= 2) {
            p *= x3 / ((k3 - 1) * (k3 - 3));
            fp += p;
        }
        const R scale = abs(f) + abs(g) + abs(fp) + abs(gp);
        if (abs(t) + abs(u) + abs(p) + abs(r) <= eps * scale * R(1e-3) && k > 2) break;
    }
    return {airy_c1<R>() * f - airy_c2<R>() * g, airy_c1<R>() * fp - airy_c2<R>() * gp};
}

// Asymptotic coefficients c_k, d_k up to the given count.
template <class R>
void airy_asym_coeffs(int count, std::vector<R>& c, std::vector<R>& d) {
    c.assign(count, R(1));
    d.assign(count, R(1));
    for (int k = 1; k < count; ++k) {
        const R rk = k;
        c[k] = c[k - 1] * (6 * rk - 5) * (6 * rk - 3) * (6 * rk - 1) / (216 * rk * (2 * rk - 1));
        d[k] = -(6 * rk + 1) / (6 * rk - 1) * c[k];
    }
}

// x > 0: returns Ai e^{zeta}, Ai' e^{zeta} (scaled) and zeta.
template <class R>
WideAiry<R> airy_asym_pos_scaled(R x, R& zeta) {
    using std::abs;
    using std::sqrt;
    const R eps = std::numeric_limits<R>::epsilon();
    const R sx = sqrt(x);
    zeta = 2 * x * sx / 3;
    const R pi = boost::math::constants::pi<R>();
    const R x14 = sqrt(sx);
    R sc = 1, sd = 1, term = 1;
    R prev = std::numeric_limits<R>::max();
    R ck = 1;
    for (int k = 1; k < 200; ++k) {
        const R rk = k;
        const R cnext = ck * (6 * rk - 5) * (6 * rk - 3) * (6 * rk - 1) / (216 * rk * (2 * rk - 1));
        term = -term * (cnext / ck) / zeta;
        if (abs(term) > prev) break;
        ck = cnext;
        prev = abs(term);
        sc += term;
        sd += -(6 * rk + 1) / (6 * rk - 1) * term;
        if (abs(term) < eps * R(1e-2)) break;
    }
    const R norm = 1 / (2 * sqrt(pi));
    return {norm * sc / x14, -norm * x14 * sd};
}

// x < 0 trigonometric form.
template <class R>
WideAiry<R> airy_asym_neg(R x) {
    using std::abs;
    using std::cos;
    using std::sin;
    using std::sqrt;
    const R eps = std::numeric_limits<R>::epsilon();
    const R y = -x;
    const R sy = sqrt(y);
    const R zeta = 2 * y * sy / 3;
    const R pi = boost::math::constants::pi<R>();
    const R y14 = sqrt(sy);
    // even/odd split of sum (-1)^k c_k zeta^{-k}
    R ce = 0, co = 0, de = 0, dof = 0;
    R ck = 1, zk = 1;
    R prev = std::numeric_limits<R>::max();
    for (int k = 0; k < 200; ++k) {
        const R rk = k;
        if (k > 0) {
            ck *= (6 * rk - 5) * (6 * rk - 3) * (6 * rk - 1) / (216 * rk * (2 * rk - 1));
            zk *= zeta;
        }
        const R tc = ck / zk;
        if (k > 1 && abs(tc) > prev) break;
        prev = abs(tc);
        const R td = (k == 0) ? R(1) : -(6 * rk + 1) / (6 * rk - 1) * tc;
        const int sgn = ((k / 2) % 2 == 0) ? 1 : -1;
        if (k % 2 == 0) {
            ce += sgn * tc;
            de += sgn * td;
        } else {
            co += sgn * tc;
            dof += sgn * td;
        }
        if (abs(tc) < eps * R(1e-2)) break;
    }
    const R ph = zeta - pi / 4;
    const R cph = cos(ph), sph = sin(ph);
    const R rpi = 1 / sqrt(pi);
    const R ai = rpi / y14 * (cph * ce + sph * co);
    const R aip = rpi * y14 * (sph * de - cph * dof);
    return {ai, aip};
}

// Unscaled Airy for a wide type: Maclaurin on [neg_switch, pos_switch],
// asymptotic series outside, zero beyond clamp.
template <class R>
WideAiry<R> airy_wide(R x, R pos_switch = R(9.4), R neg_switch = R(-14), R clamp = R(104)) {
    using std::exp;
    if (x > clamp) return {R(0), R(0)};
    if (x > pos_switch) {
        R zeta;
        WideAiry<R> s = airy_asym_pos_scaled(x, zeta);
        const R e = exp(-zeta);
        return {s.ai * e, s.aip * e};
    }
    if (x < neg_switch) return airy_asym_neg(x);
    return airy_maclaurin(x);
}

// Gauss-Legendre on [-1,1] in type R, nodes increasing.
template <class R>
void gauss_legendre_wide(int n, std::vector<R>& x, std::vector<R>& w) {
    using std::abs;
    using std::cos;
    const R pi = boost::math::constants::pi<R>();
    const R eps = std::numeric_limits<R>::epsilon();
    x.assign(n, R(0));
    w.assign(n, R(0));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        R z = cos(pi * (R(i) + R(0.75)) / (R(n) + R(0.5)));
        R dp = 0;
        for (int it = 0; it < 100; ++it) {
            R p0 = 1, p1 = z;
            for (int k = 2; k <= n; ++k) {
                const R p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1);
            const R dz = p1 / dp;
            z -= dz;
            if (abs(dz) <= 4 * eps) {
                // one more evaluation for the derivative at the converged node
                R q0 = 1, q1 = z;
                for (int k = 2; k <= n; ++k) {
                    const R q2 = ((2 * k - 1) * z * q1 - (k - 1) * q0) / k;
                    q0 = q1;
                    q1 = q2;
                }
                dp = n * (z * q1 - q0) / (z * z - 1);
                break;
            }
        }
        const R wt = 2 / ((1 - z * z) * dp * dp);
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = wt;
        w[n - 1 - i] = wt;
    }
    if (n % 2 == 1) x[n / 2] = 0;
}

}  // namespace endpoint::detail
