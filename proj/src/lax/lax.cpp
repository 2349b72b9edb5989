#include <algorithm>
#include <cmath>
#include <string>

#include "endpoint/lax.hpp"
#include "endpoint/painleve.hpp"

namespace endpoint {

Mat2 Mat2::diag(long double a, long double d) {
    Mat2 r;
    r.m = {{{a, 0.0L}, {0.0L, d}}};
    return r;
}

Mat2 Mat2::offdiag(long double b, long double c) {
    Mat2 r;
    r.m = {{{0.0L, b}, {c, 0.0L}}};
    return r;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    return r;
}

Mat2 Mat2::operator+(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
}

Mat2 Mat2::operator-(const Mat2& o) const { return *this + o * -1.0L; }

Mat2 Mat2::operator*(long double k) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] * k;
    return r;
}

long double Mat2::norm() const {
    long double r = 0.0L;
    for (const auto& row : m)
        for (long double x : row) r = std::max(r, std::abs(x));
    return r;
}

LaxCoefficients LaxCoefficients::from(double s, double q, double qp, double iq) {
    LaxCoefficients c;
    c.s = s;
    c.q = q;
    c.q_prime = qp;
    c.int_q = iq;
    c.v = s + 2.0 * q * q - 2.0 * qp;
    const long double v = c.v;
    c.A0 = Mat2::offdiag(v + 4.0L * qp, -v);
    c.A1 = Mat2::diag(4.0L * q, -4.0L * q);
    c.A2 = Mat2::offdiag(4.0L, -4.0L);
    c.B0 = Mat2::diag(q, -q);
    c.B1 = Mat2::offdiag(1.0L, -1.0L);
    return c;
}

LaxCoefficients LaxCoefficients::at(double s) {
    const PainleveSample& p = painleve_sample(s);
    return from(s, p.q, p.q_prime, p.int_q);
}

LaxSeries LaxSeries::build(const LaxCoefficients& c, int order) {
    if (order < 2 || order > kMaxOrder)
        throw DomainError("lax_series: order must be in [2, " + std::to_string(kMaxOrder) + "]");
    LaxSeries r;
    r.c_ = c;
    r.psi_.resize(order + 1);
    const long double e = std::exp(static_cast<long double>(c.int_q));
    r.psi_[0] = Mat2::diag(1.0L / e, e);
    for (int n = 0; n < order; ++n) {
        Mat2 acc = c.A0 * r.psi_[n];
        if (n >= 1) acc = acc + c.A1 * r.psi_[n - 1];
        if (n >= 2) acc = acc + c.A2 * r.psi_[n - 2];
        r.psi_[n + 1] = acc * (1.0L / (n + 1));
    }
    return r;
}

namespace {

double guarded_sum(const std::vector<Mat2>& psi, int row, int col, int first, long double zeta, long double floor,
                   const char* name) {
    const int order = static_cast<int>(psi.size()) - 1;
    long double sum = 0.0L, zn = first == 0 ? 1.0L : zeta, t_last = 0.0L, t_prev = 0.0L;
    for (int n = first; n <= order; n += 2, zn *= zeta * zeta) {
        const long double t = psi[n](row, col) * zn;
        sum += t;
        t_prev = t_last;
        t_last = t;
    }
    const long double tail = std::max(std::abs(t_last), std::abs(t_prev));
    if (!(tail < 1e-12L * std::max(std::abs(sum), floor)))
        throw RadiusExceeded(std::string(name) + ": series truncation not converged at zeta = " +
                             std::to_string(static_cast<double>(zeta)));
    return static_cast<double>(sum);
}

}  // namespace

double LaxSeries::phi1(double zeta) const {
    return guarded_sum(psi_, 0, 0, 0, zeta, psi_[0](0, 0), "phi1");
}

double LaxSeries::phi2(double zeta) const {
    return guarded_sum(psi_, 1, 0, 1, zeta, psi_[0](0, 0), "phi2");
}

Mat2 LaxSeries::psi(double zeta) const {
    Mat2 r;
    for (int n = order(); n >= 0; --n) r = r * static_cast<long double>(zeta) + psi_[n];
    return r;
}

Mat2 LaxSeries::psi_dzeta(double zeta) const {
    Mat2 r;
    for (int n = order(); n >= 1; --n) r = r * static_cast<long double>(zeta) + psi_[n] * static_cast<long double>(n);
    return r;
}

LaxSeries lax_series(double s, int order) {
    if (!(s >= -11.5)) throw DomainError("lax_series: s must be >= -11.5");
    return LaxSeries::build(LaxCoefficients::at(s), order);
}

double phi1(double zeta, double s) { return lax_series(s).phi1(zeta); }
double phi2(double zeta, double s) { return lax_series(s).phi2(zeta); }

double qn_poly(int n, const LaxSeries& series) {
    if (n < 0 || n > 25) throw DomainError("qn_poly: n must be in [0, 25]");
    if (2 * n + 1 > series.order()) throw DomainError("qn_poly: series order too low");
    // (2n+1)! / (n! 4^n) accumulated as a product
    long double f = 1.0L;
    for (int k = n + 1; k <= 2 * n + 1; ++k) f *= k;
    for (int k = 0; k < n; ++k) f /= 4.0L;
    const long double e = std::exp(static_cast<long double>(series.coefficients().int_q));
    return static_cast<double>(e * series.coeffs()[2 * n + 1](1, 0) * f);
}

double qn_poly(int n, double s) { return qn_poly(n, lax_series(s, std::max(LaxSeries::kDefaultOrder, 2 * n + 1))); }

}  // namespace endpoint
