#pragma once

#include <exception>
#include <functional>
#include <limits>
#include <vector>

#include "endpoint/errors.hpp"

namespace endpoint {

using RealFn = std::function<double(double)>;

struct QuadRule {
    enum class Domain { finite, semi_infinite };

    std::vector<double> nodes;
    std::vector<double> weights;
    Domain domain = Domain::finite;
    double lower = -1.0;
    double upper = 1.0;  // +inf for semi_infinite
    double scale = 0.0;  // mapping scale L, semi_infinite only

    std::size_t size() const { return nodes.size(); }

    template <class F>
    double apply(F&& f) const {
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
        return sum;
    }
};

// n-point Gauss-Legendre rule on [-1,1], 1 <= n <= 2048.
QuadRule gauss_legendre(int n);

// Affine transplant of a [-1,1] rule onto [a,b].
QuadRule map_interval(const QuadRule& rule, double a, double b);

// x = origin + scale (1+t)/(1-t), weights carry 2 scale/(1-t)^2.
QuadRule map_semi_infinite(const QuadRule& rule, double origin, double scale);

// Adaptive Gauss-Kronrod; b may be +inf, a may be -inf. Throws NonConvergence.
double integrate_adaptive(const RealFn& f, double a, double b, double tol,
                          double* error_estimate = nullptr);

struct AsymptoticEval {
    double value = 0.0;
    double next_term_estimate = 0.0;
};

struct AiryAsymCoeffs {
    std::vector<double> c;
    std::vector<double> d;

    static const AiryAsymCoeffs& get();
};

double airy_ai(double x);
double airy_ai_prime(double x);

struct AiryPair {
    double ai;
    double aip;
};
AiryPair airy_pair(double x);

// For x > 0: ai = Ai(x) e^{zeta}, aip = Ai'(x) e^{zeta}, zeta = (2/3) x^{3/2}.
// For x <= 0: plain values and zeta = 0.
struct ScaledAiry {
    double ai;
    double aip;
    double zeta;
};
ScaledAiry airy_scaled(double x);

// Ai and Ai' return exactly 0 beyond this argument.
inline constexpr double kAiryClamp = 104.0;

struct Constants {
    double zeta_prime_m1;  // zeta'(-1)
    double tau1;
    double tau;
    double kappa;
    double C;
};
const Constants& constants();

// Worker count for OpenMP regions; ENDPOINT_TAILS_THREADS overrides.
int thread_count();

// body(i) for i in [0, n), dynamically scheduled over thread_count() workers
// when parallel is set. The first exception thrown by any body is rethrown.
template <class F>
void parallel_for(int n, bool parallel, F&& body) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count()) if (parallel)
    for (int i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical(endpoint_parallel_for)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace endpoint
