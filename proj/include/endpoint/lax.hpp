#pragma once

#include <array>
#include <vector>

#include "endpoint/numcore.hpp"

namespace endpoint {

// 2x2 matrix in extended precision; the Taylor coefficients grow and
// cancel strongly for |zeta| near 2.
struct Mat2 {
    std::array<std::array<long double, 2>, 2> m{};

    long double& operator()(int i, int j) { return m[i][j]; }
    long double operator()(int i, int j) const { return m[i][j]; }

    static Mat2 diag(long double a, long double d);
    static Mat2 offdiag(long double b, long double c);
    Mat2 operator*(const Mat2& o) const;
    Mat2 operator+(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 operator*(long double k) const;
    long double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    long double norm() const;  // max abs entry
};

// A(zeta, s) = A0 + A1 zeta + A2 zeta^2 and B(zeta, s) = B0 + B1 zeta.
struct LaxCoefficients {
    double s = 0.0;
    double q = 0.0, q_prime = 0.0, v = 0.0, int_q = 0.0;
    Mat2 A0, A1, A2, B0, B1;

    static LaxCoefficients at(double s);
    static LaxCoefficients from(double s, double q, double q_prime, double int_q);
};

class LaxSeries {
public:
    static constexpr int kDefaultOrder = 40;
    static constexpr int kMaxOrder = 200;

    // Psi_0 = diag(e^{-int q}, e^{int q}); (n+1) Psi_{n+1} = A0 Psi_n + A1 Psi_{n-1} + A2 Psi_{n-2}.
    static LaxSeries build(const LaxCoefficients& c, int order = kDefaultOrder);

    double s() const { return c_.s; }
    int order() const { return static_cast<int>(psi_.size()) - 1; }
    const LaxCoefficients& coefficients() const { return c_; }
    const std::vector<Mat2>& coeffs() const { return psi_; }

    // Phi_1 = sum Psi_{2n}^{11} zeta^{2n}, Phi_2 = sum Psi_{2n+1}^{21} zeta^{2n+1}.
    // Throws RadiusExceeded when the last two retained terms are not below
    // 1e-12 of max(|sum|, e^{-int q}).
    double phi1(double zeta) const;
    double phi2(double zeta) const;
    // Full truncated Psi(zeta) and its term-wise zeta derivative (no guard).
    Mat2 psi(double zeta) const;
    Mat2 psi_dzeta(double zeta) const;

private:
    LaxCoefficients c_;
    std::vector<Mat2> psi_;
};

LaxSeries lax_series(double s, int order = LaxSeries::kDefaultOrder);
double phi1(double zeta, double s);
double phi2(double zeta, double s);

// Q_n = e^{int q} Psi_{2n+1}^{21} (2n+1)! / (n! 4^n), n <= 25.
double qn_poly(int n, double s);
double qn_poly(int n, const LaxSeries& series);

}  // namespace endpoint
