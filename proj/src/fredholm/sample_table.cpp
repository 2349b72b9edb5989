#include <cmath>
#include <exception>
#include <mutex>

#include "endpoint/fredholm.hpp"

namespace endpoint {

struct SampleTable::Panel {
    std::once_flag once;
    std::vector<TableNode> nodes;
};

SampleTable::SampleTable() : rule_(kPerPanel), panels_(new Panel[kPanels]) {}

const SampleTable& SampleTable::global() {
    static const SampleTable table;
    return table;
}

int SampleTable::panel_of(double s) const {
    const int p = static_cast<int>(std::floor(s - kLo));
    return std::clamp(p, 0, kPanels - 1);
}

void SampleTable::ensure(int panel) const {
    Panel& pn = panels_[panel];
    std::call_once(pn.once, [&] {
        std::vector<TableNode> v(kPerPanel);
        parallel_for(kPerPanel, true, [&](int j) {
            TableNode& t = v[j];
            t.s = panel_left(panel) + 0.5 * (1.0 + rule_.nodes()[j]);
            const NystromOperator op =
                NystromOperator::build(t.s, NystromOperator::kDefaultNodes, 0.0, Precision::automatic, false);
            t.log_f1 = op.log_det();
            t.k0 = op.k_zero();
            t.q = op.q_zero();
            t.x = op.nodes();
            t.w = op.weights();
            t.K = op.resolvent_grid();
        });
        pn.nodes = std::move(v);
    });
}

const TableNode& SampleTable::node(int panel, int j) const {
    ensure(panel);
    return panels_[panel].nodes[j];
}

double SampleTable::log_f1(double s) const {
    const int p = panel_of(s);
    double v[kPerPanel];
    for (int j = 0; j < kPerPanel; ++j) v[j] = node(p, j).log_f1;
    return rule_.interpolate(v, local(p, s));
}

double SampleTable::q(double s) const {
    const int p = panel_of(s);
    double v[kPerPanel];
    for (int j = 0; j < kPerPanel; ++j) v[j] = node(p, j).q;
    return rule_.interpolate(v, local(p, s));
}

double SampleTable::int_q(double s) const {
    return integrate_from(s, [](const TableNode& n) { return n.q; });
}

double SampleTable::int_xq2(double s) const {
    return integrate_from(s, [s](const TableNode& n) { return (n.s - s) * n.q * n.q; });
}

double SampleTable::int_f1(double a, double b) const {
    if (b < a) return -int_f1(b, a);
    const int pa = panel_of(a), pb = panel_of(b);
    const auto& t = rule_.nodes();
    const auto& wt = rule_.weights();
    // Gauss-Legendre on [t0, t1] of exp(interpolated log F_1) within panel p.
    auto partial = [&](int p, double t0, double t1) {
        double lv[kPerPanel];
        for (int j = 0; j < kPerPanel; ++j) lv[j] = node(p, j).log_f1;
        const double half = 0.5 * (t1 - t0), mid = 0.5 * (t1 + t0);
        double acc = 0.0;
        for (int j = 0; j < kPerPanel; ++j) acc += wt[j] * std::exp(rule_.interpolate(lv, mid + half * t[j]));
        return 0.5 * half * acc;
    };
    if (pa == pb) return partial(pa, local(pa, a), local(pa, b));
    double total = partial(pa, local(pa, a), 1.0) + partial(pb, -1.0, local(pb, b));
    for (int p = pa + 1; p < pb; ++p)
        for (int j = 0; j < kPerPanel; ++j) total += weight(j) * std::exp(node(p, j).log_f1);
    return total;
}

}  // namespace endpoint
