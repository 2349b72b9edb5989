#pragma once

#include <vector>

namespace endpoint {

// Gauss-Legendre rule on [-1,1] with barycentric interpolation through
// its own nodes. Used for composite panel tables.
class PanelRule {
public:
    explicit PanelRule(int n);

    int size() const { return static_cast<int>(t_.size()); }
    const std::vector<double>& nodes() const { return t_; }
    const std::vector<double>& weights() const { return w_; }

    // Interpolant of values at the nodes, evaluated at t in [-1,1].
    double interpolate(const double* values, double t) const;

    // Integral of the interpolant over [t0, 1].
    double integrate_from(const double* values, double t0) const;

    // Integral of the interpolant over [-1, t1].
    double integrate_to(const double* values, double t1) const;

private:
    std::vector<double> t_, w_, lambda_;
};

}  // namespace endpoint
