// Serial reference vs OpenMP timings for the parallel kernels. Results of the
// two variants are compared so a speedup never hides a changed answer.
// Pass --dotsenko to include W(x) (tens of seconds per variant).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <vector>

#include "endpoint/density.hpp"
#include "endpoint/dotsenko.hpp"
#include "endpoint/fredholm.hpp"

using namespace endpoint;

namespace {

struct Timed {
    double ms = 0.0;
    std::vector<double> out;
};

Timed best_of(int reps, const std::function<std::vector<double>()>& f) {
    Timed t{1e300, {}};
    for (int r = 0; r < reps; ++r) {
        const auto a = std::chrono::steady_clock::now();
        t.out = f();
        const auto b = std::chrono::steady_clock::now();
        t.ms = std::min(t.ms, std::chrono::duration<double, std::milli>(b - a).count());
    }
    return t;
}

void row(const char* name, int reps, const std::function<std::vector<double>(bool)>& f) {
    const Timed s = best_of(reps, [&] { return f(false); });
    const Timed p = best_of(reps, [&] { return f(true); });
    double diff = 0.0;
    for (std::size_t i = 0; i < s.out.size(); ++i) diff = std::max(diff, std::abs(s.out[i] - p.out[i]));
    std::printf("%-34s %12.2f %12.2f %8.2f %12.3g\n", name, s.ms, p.ms, s.ms / p.ms, diff);
}

}  // namespace

int main(int argc, char** argv) {
    const bool dots = argc > 1 && std::strcmp(argv[1], "--dotsenko") == 0;
    std::printf("threads %d\n", thread_count());
    std::printf("%-34s %12s %12s %8s %12s\n", "kernel", "serial_ms", "omp_ms", "speedup", "max_diff");

    row("nystrom build s=-2 n=240 (ld)", 3, [](bool par) {
        const auto op = NystromOperator::build(-2.0, 240, 0.0, Precision::automatic, par);
        return std::vector<double>{op.log_det(), op.q_zero()};
    });
    row("nystrom build s=-9.5 n=120 (f128)", 2, [](bool par) {
        const auto op = NystromOperator::build(-9.5, 120, 0.0, Precision::automatic, par);
        return std::vector<double>{op.log_det(), op.q_zero()};
    });
    for (int p = 0; p < SampleTable::kPanels; ++p) SampleTable::global().node(p, 0);
    row("h products w=5 (384 nodes)", 3, [](bool par) { return h_products_compute(5.0, par); });
    if (dots) row("W(0.5), 60 nodes", 1, [](bool par) { return std::vector<double>{w_dist(0.5, 60, par).W}; });
    return 0;
}
