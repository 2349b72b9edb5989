#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "endpoint/asymptotics.hpp"
#include "endpoint/density.hpp"
#include "endpoint/errors.hpp"

namespace endpoint {

namespace {

constexpr int kNodes = SampleTable::kPanels * SampleTable::kPerPanel;
constexpr double kMaxW = 10.0;
constexpr double kSMin = -10.0;
const double k23 = std::cbrt(2.0) * std::cbrt(2.0);  // 2^{2/3}
const double k43 = 2.0 * std::cbrt(2.0);             // 2^{4/3}
const double k13 = std::cbrt(2.0);
const double kNorm = 4.0 / (std::numbers::pi * std::numbers::pi);

void require(bool ok, const char* name, const char* what) {
    if (!ok) throw DomainError(std::string(name) + ": " + what);
}

const TableNode& node_at(int i) {
    return SampleTable::global().node(i / SampleTable::kPerPanel, i % SampleTable::kPerPanel);
}

double node_weight(int i) { return SampleTable::global().weight(i % SampleTable::kPerPanel); }

// F at every table node, computed once.
const std::vector<double>& node_f() {
    static const std::vector<double> f = [] {
        std::vector<double> v(kNodes);
        for (int i = 0; i < kNodes; ++i) v[i] = f_cumulative(node_at(i).s);
        return v;
    }();
    return f;
}

// int_{u0}^inf a(u,w) a(u,-w) (c0 + c1 (u - u0)) du, where h = a to 1e-11 relative.
// The integrand is rescaled by its value at u0 so the quadrature tolerance is relative.
double right_tail(double u0, double w, double c0, double c1) {
    auto log_prod = [w](double u) {
        const LogAbs p = a_closed_log(u, w), m = a_closed_log(u, -w);
        return std::pair{p.log_abs + m.log_abs, p.sign * m.sign};
    };
    const double ref = log_prod(u0).first;
    if (!std::isfinite(ref)) return 0.0;
    auto g = [&](double u) {
        const auto [l, sg] = log_prod(u);
        return sg * std::exp(l - ref) * (c0 + c1 * (u - u0));
    };
    return std::exp(ref) * integrate_adaptive(g, u0, INFINITY, 1e-12);
}

struct Products {
    std::vector<double> g;
    double tail = 0.0;    // int_{kHi}^inf G
    double tail_f = 0.0;  // int_{kHi}^inf F G with F(u) = F(kHi) + (u - kHi)
};

std::mutex g_mutex;
std::map<double, std::shared_ptr<const Products>> g_products;
std::map<double, double> g_marginal;

std::shared_ptr<const Products> products(double w) {
    const double key = std::abs(w);
    {
        std::lock_guard lock(g_mutex);
        if (auto it = g_products.find(key); it != g_products.end()) return it->second;
    }
    auto p = std::make_shared<Products>();
    p->g = h_products_compute(key, true);
    p->tail = right_tail(SampleTable::kHi, key, 1.0, 0.0);
    p->tail_f = right_tail(SampleTable::kHi, key, f_cumulative(SampleTable::kHi), 1.0);
    std::lock_guard lock(g_mutex);
    return g_products.emplace(key, std::move(p)).first->second;
}

// int_s^{kHi} G with the partial panel integrated through the interpolant.
double integrate_products_from(double s, const std::vector<double>& g) {
    const SampleTable& tab = SampleTable::global();
    const int p0 = tab.panel_of(s);
    const int n = SampleTable::kPerPanel;
    double total = 0.5 * tab.rule().integrate_from(g.data() + p0 * n, tab.local(p0, s));
    for (int i = (p0 + 1) * n; i < kNodes; ++i) total += node_weight(i) * g[i];
    return total;
}

double f1_at(double s) {
    return s <= SampleTable::kHi ? std::exp(SampleTable::global().log_f1(s)) : f1_fredholm(s);
}

// Schehr marginal by the nested route: sum over s-nodes of F_1(s) int_s^inf G.
double p_marginal_nested(double w) {
    const auto p = products(w);
    double total = 0.0;
    for (int i = 0; i < kNodes; ++i) {
        const TableNode& nd = node_at(i);
        total += node_weight(i) * std::exp(nd.log_f1) * (integrate_products_from(nd.s, p->g) + p->tail);
    }
    return kNorm * total;
}

// psi evaluated on the scaled Nystrom grid; weights folded in.
std::vector<double> psi_vector(const NystromOperator& op, double t, double m) {
    const auto& x = op.nodes();
    const auto& wt = op.weights();
    std::vector<double> v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = std::sqrt(wt[i]) * psi_mfqr(k13 * x[i], t, m);
    return v;
}

double bilinear(const std::vector<double>& a, const std::vector<double>& S, const std::vector<double>& b) {
    const std::size_t n = a.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0.0) continue;
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += S[i * n + j] * b[j];
        total += a[i] * row;
    }
    return total;
}

struct MfqrNode {
    NystromOperator op;
    std::vector<double> S;
    double f1 = 0.0;
};

// Operators and inverses at the table nodes with s >= kSMin.
constexpr int kFirstMfqrPanel = static_cast<int>(kSMin - SampleTable::kLo);

const std::vector<MfqrNode>& mfqr_nodes() {
    static const std::vector<MfqrNode> nodes = [] {
        const int first = kFirstMfqrPanel * SampleTable::kPerPanel;
        std::vector<MfqrNode> v(kNodes - first);
        for (int i = first; i < kNodes; ++i) node_at(i);
        parallel_for(kNodes - first, true, [&](int k) {
            MfqrNode& n = v[k];
            n.op = NystromOperator::build(node_at(first + k).s, NystromOperator::kDefaultNodes, 0.0,
                                          Precision::automatic, false);
            n.S = n.op.inverse();
            n.f1 = std::exp(node_at(first + k).log_f1);
        });
        return v;
    }();
    return nodes;
}

double phat_marginal_mfqr(double t) {
    const auto& nodes = mfqr_nodes();
    const int first = kFirstMfqrPanel * SampleTable::kPerPanel;
    double total = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const MfqrNode& n = nodes[k];
        const double m = n.op.s() / k23;
        const double v = k13 * n.f1 * bilinear(psi_vector(n.op, -t, m), n.S, psi_vector(n.op, t, m));
        total += node_weight(first + static_cast<int>(k)) * v;
    }
    return total / k23;
}

// Composite Gauss-Legendre on [a, b] with panels of width <= 0.5.
double composite(const std::function<double(double)>& f, double a, double b, const QuadRule& rule) {
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / 0.5)));
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) total += map_interval(rule, a + p * h, a + (p + 1) * h).apply(f);
    return total;
}

}  // namespace

std::vector<double> h_products_compute(double w, bool parallel) {
    require(std::abs(w) <= kMaxW, "h_products", "|w| must be <= 10");
    std::vector<double> g(kNodes);
    for (int i = 0; i < kNodes; ++i) node_at(i);  // build the table before any parallel region
    parallel_for(kNodes, parallel, [&](int i) { g[i] = h_grid(node_at(i), w) * h_grid(node_at(i), -w); });
    return g;
}

const std::vector<double>& h_products(double w) { return products(w)->g; }

double p_joint_schehr(double s, double w) {
    require(s >= kSMin, "p_joint_schehr", "s must be >= -10");
    require(std::abs(w) <= kMaxW, "p_joint_schehr", "|w| must be <= 10");
    const auto p = products(w);
    const double inner = s < SampleTable::kHi ? integrate_products_from(s, p->g) + p->tail
                                              : right_tail(s, std::abs(w), 1.0, 0.0);
    return kNorm * f1_at(s) * inner;
}

double p_marginal(double w) {
    require(std::abs(w) <= kMaxW, "p_marginal", "|w| must be <= 10");
    const double key = std::abs(w);
    {
        std::lock_guard lock(g_mutex);
        if (auto it = g_marginal.find(key); it != g_marginal.end()) return it->second;
    }
    const auto p = products(key);
    const auto& f = node_f();
    double total = p->tail_f;
    for (int i = 0; i < kNodes; ++i) total += node_weight(i) * f[i] * p->g[i];
    const double v = kNorm * total;
    std::lock_guard lock(g_mutex);
    return g_marginal.emplace(key, v).first->second;
}

double phat_joint(double m, double t) { return 4.0 * p_joint_schehr(k23 * m, k43 * t); }

double phat_marginal(double t) { return k43 * p_marginal(k43 * t); }

double psi_mfqr(double x, double t, double m) {
    require(x >= 0.0, "psi_mfqr", "x must be nonnegative");
    const double z = t * t + m + x;
    // |t Ai + Ai'| <= (|t| + sqrt z + 1) Ai(z) e^{...}; past this point psi is below the double range
    if (z > 1.0 && x * t - 2.0 / 3.0 * z * std::sqrt(z) + std::log(std::abs(t) + std::sqrt(z) + 1.0) < -745.0) return 0.0;
    const AiryPair a = airy_pair(z);
    const double v = 2.0 * std::exp(x * t) * (t * a.ai + a.aip);
    if (!std::isfinite(v)) throw Overflow("psi_mfqr: result exceeds the double range");
    return v;
}

double phat_joint_mfqr(double m, double t, int nodes) {
    const double s = k23 * m;
    require(s >= kSMin, "phat_joint_mfqr", "2^{2/3} m must be >= -10");
    const NystromOperator op = NystromOperator::build(s, nodes);
    const double f1 = op.det();
    return k13 * f1 * bilinear(psi_vector(op, -t, m), op.inverse(), psi_vector(op, t, m));
}

TailProb tail_prob(double t) {
    require(t >= 0.0 && t <= 2.8, "tail_prob", "t must be in [0, 2.8]");
    const double cap = kMaxW / k43;
    const double floor = 1e-16 * phat_marginal(t);
    double tmax = t;
    while (tmax < cap && phat_marginal(std::min(tmax + 0.1, cap)) > floor) tmax = std::min(tmax + 0.1, cap);
    tmax = std::min(tmax + 0.1, cap);
    static const QuadRule coarse = gauss_legendre(8), fine = gauss_legendre(16);
    const double a = 2.0 * composite(phat_marginal, t, tmax, coarse);
    const double b = 2.0 * composite(phat_marginal, t, tmax, fine);
    return {b, std::abs(b - a)};
}

DensityTable density_table(const std::vector<double>& ts, DensityMethod method, bool parallel) {
    DensityTable rows(ts.size());
    for (double t : ts) {
        if (method == DensityMethod::asymptotic) require(std::abs(t) >= 1.0, "density_table", "asymptotic rows need |t| >= 1");
        else require(std::abs(t) <= kMaxW / k43, "density_table", "|t| must be <= 10 / 2^{4/3}");
    }
    if (method == DensityMethod::mfqr) mfqr_nodes();
    const int n = static_cast<int>(ts.size());
    parallel_for(n, parallel, [&](int i) {
        DensityRow& r = rows[i];
        r.t = ts[i];
        r.method = method;
        switch (method) {
        case DensityMethod::schehr:
            r.value = phat_marginal(r.t);
            r.error_estimate = std::abs(r.value - k43 * p_marginal_nested(k43 * r.t));
            break;
        case DensityMethod::mfqr:
            r.value = phat_marginal_mfqr(r.t);
            r.error_estimate = std::abs(r.value - phat_marginal(r.t));
            break;
        case DensityMethod::asymptotic: {
            const TailExpansion e = phat_asym(std::abs(r.t));
            r.value = e.value;
            r.error_estimate = e.next_order;
            break;
        }
        }
    });
    return rows;
}

}  // namespace endpoint
