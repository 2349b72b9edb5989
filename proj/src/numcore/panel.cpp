#include "endpoint/panel.hpp"

#include <cmath>

#include "endpoint/numcore.hpp"

namespace endpoint {

PanelRule::PanelRule(int n) {
    const QuadRule r = gauss_legendre(n);
    t_ = r.nodes;
    w_ = r.weights;
    lambda_.resize(n);
    for (int j = 0; j < n; ++j) {
        lambda_[j] = ((j % 2) ? -1.0 : 1.0) * std::sqrt((1.0 - t_[j] * t_[j]) * w_[j]);
    }
}

double PanelRule::interpolate(const double* values, double t) const {
    double num = 0.0, den = 0.0;
    for (int j = 0; j < size(); ++j) {
        const double d = t - t_[j];
        if (d == 0.0) return values[j];
        const double c = lambda_[j] / d;
        num += c * values[j];
        den += c;
    }
    return num / den;
}

double PanelRule::integrate_from(const double* values, double t0) const {
    if (t0 <= -1.0) {
        double s = 0.0;
        for (int j = 0; j < size(); ++j) s += w_[j] * values[j];
        return s;
    }
    const double half = 0.5 * (1.0 - t0), mid = 0.5 * (1.0 + t0);
    double s = 0.0;
    for (int j = 0; j < size(); ++j) s += w_[j] * interpolate(values, mid + half * t_[j]);
    return half * s;
}

double PanelRule::integrate_to(const double* values, double t1) const {
    if (t1 >= 1.0) return integrate_from(values, -1.0);
    const double half = 0.5 * (t1 + 1.0), mid = 0.5 * (t1 - 1.0);
    double s = 0.0;
    for (int j = 0; j < size(); ++j) s += w_[j] * interpolate(values, mid + half * t_[j]);
    return half * s;
}

}  // namespace endpoint
