#pragma once

#include <memory>
#include <vector>

#include "endpoint/numcore.hpp"
#include "endpoint/panel.hpp"

namespace endpoint {

// Working precision of the factorization. automatic: long double for
// s >= kQuadBelow, binary128 below (the gap of I - M closes like e^{-|s|^{3/2}}).
enum class Precision { automatic, extended, quad };
inline constexpr double kQuadBelow = -8.5;

// Symmetrized Nystrom discretization M_ij = sqrt(w_i) Ai(x_i + x_j + s) sqrt(w_j)
// of the Hankel operator on [0, inf). Immutable; copies share state.
class NystromOperator {
public:
    static constexpr int kDefaultNodes = 120;

    // scale <= 0 selects 6 + max(0, -s).
    static NystromOperator build(double s, int n = kDefaultNodes, double scale = 0.0,
                                 Precision precision = Precision::automatic, bool parallel = true);

    double s() const;
    int size() const;
    double scale() const;
    Precision precision() const;
    const std::vector<double>& nodes() const;
    const std::vector<double>& weights() const;

    // Ai(x_i + x_j + s), row-major n x n.
    std::vector<double> kernel_matrix() const;
    // M, row-major n x n.
    std::vector<double> symmetric_matrix() const;

    double log_det() const;
    double det() const;

    // K(x_j, s) on the grid, solving (1 - B_s) K = T_s Ai.
    const std::vector<double>& resolvent_grid() const;
    // Nystrom interpolation K(x) = Ai(x+s) + sum_j w_j Ai(x + x_j + s) K_j.
    double K_at(double x) const;
    double k_zero() const;

    // q(s) = Ai(s) + b^T M (I - M^2)^{-1} b with b_i = sqrt(w_i) Ai(x_i + s),
    // via the two Cholesky factors of I -/+ M.
    double q_zero() const;
    // Same quantity through the explicit product M^2 (reference route).
    double q_zero_product() const;

    // (I - M)^{-1} rhs in symmetrized coordinates.
    std::vector<double> solve(const std::vector<double>& rhs) const;
    // S = (I - M)^{-1}, row-major; the resolvent kernel is
    // rho(x_i, x_j) = S_ij / sqrt(w_i w_j) with the identity part on the diagonal.
    std::vector<double> inverse() const;

    struct Impl;

private:
    std::shared_ptr<const Impl> impl_;
};

// F_1(s) = det(1 - B_s). Throws Underflow below 1e-300.
double f1_fredholm(double s);
double log_f1_fredholm(double s);

struct ResolventK {
    NystromOperator op;
    double operator()(double x) const { return op.K_at(x); }
    const std::vector<double>& nodes() const { return op.nodes(); }
    const std::vector<double>& values() const { return op.resolvent_grid(); }
};
ResolventK resolvent_K(double s);

// rho_s(x_i, x_j) on the grid, row-major, without the delta part.
struct RhoTable {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> rho;
};
RhoTable rho_matrix(double s);

double k_zero(double s);

// F(u) = int_{-inf}^u F_1. Series below kSpliceF, panel quadrature above.
inline constexpr double kSpliceF = -9.0;
double f_cumulative(double u);

// Left-tail series of F_1 and of F in powers of |s|^{-3/2}; nterms counts
// retained terms (1..7). next_term_estimate is the first
// omitted term, whose coefficient follows from the Painleve II expansion.
AsymptoticEval f1_left_series(double s, int nterms = 5);
AsymptoticEval f_cumulative_series(double u, int nterms = 5);
// Coefficients t_j of the F_1 left tail and f_j of F, in powers of |s|^{-3/2}, j <= 7.
double f1_left_coeff(int j);
double f_cumulative_coeff(int j);
// 1 - e^{-(2/3)s^{3/2}} / (4 sqrt(pi) s^{3/4}); the omitted term is
// -(41/48) s^{-3/2} relative, from the expansion of int_s^inf Ai.
AsymptoticEval f1_right_series(double s);

// Unit panels on [kTableLo, kTableHi], 16 Gauss-Legendre nodes each, built
// lazily and thread-safely on first touch of a panel.
struct TableNode {
    double s = 0.0;
    double log_f1 = 0.0;
    double k0 = 0.0;
    double q = 0.0;
    std::vector<double> x, w, K;  // Nystrom grid and resolvent values
};

class SampleTable {
public:
    static constexpr double kLo = -12.0;
    static constexpr double kHi = 12.0;
    static constexpr int kPanels = 24;
    static constexpr int kPerPanel = 16;

    static const SampleTable& global();

    const PanelRule& rule() const { return rule_; }
    double panel_left(int p) const { return kLo + p; }
    // Panel containing s, clamped to the table.
    int panel_of(double s) const;
    const TableNode& node(int panel, int j) const;
    // Quadrature weight of node j on a full panel.
    double weight(int j) const { return 0.5 * rule_.weights()[j]; }
    // Local coordinate of s in panel p, in [-1, 1].
    double local(int panel, double s) const { return 2.0 * (s - panel_left(panel)) - 1.0; }

    double log_f1(double s) const;
    double q(double s) const;

    // int_s^{kHi} g, with g sampled at the nodes of each panel.
    template <class G>
    double integrate_from(double s, G&& g) const;

    double int_q(double s) const;        // int_s^{kHi} q
    double int_xq2(double s) const;      // int_s^{kHi} (x - s) q^2
    double int_f1(double a, double b) const;  // int_a^b F_1, a,b in the table

private:
    SampleTable();
    void ensure(int panel) const;

    PanelRule rule_;
    struct Panel;
    std::unique_ptr<Panel[]> panels_;
};

template <class G>
double SampleTable::integrate_from(double s, G&& g) const {
    const int p0 = panel_of(s);
    double v[kPerPanel];
    for (int j = 0; j < kPerPanel; ++j) v[j] = g(node(p0, j));
    double total = 0.5 * rule_.integrate_from(v, local(p0, s));
    for (int p = p0 + 1; p < kPanels; ++p)
        for (int j = 0; j < kPerPanel; ++j) total += weight(j) * g(node(p, j));
    return total;
}

}  // namespace endpoint
