#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "endpoint/fredholm.hpp"
#include "endpoint/painleve.hpp"

namespace endpoint {

namespace {

// q - Ai = O(Ai^3) beyond the table, far below double resolution at 12
constexpr double kAiryCut = 40.0;

struct Tail {
    double i0, i1, i2;  // int_{kHi}^inf Ai, Ai^2, x Ai^2
};

const Tail& tail() {
    static const Tail t = [] {
        const double hi = SampleTable::kHi;
        return Tail{integrate_adaptive(airy_ai, hi, kAiryCut, 1e-13),
                    integrate_adaptive([](double x) { return airy_ai(x) * airy_ai(x); }, hi, kAiryCut, 1e-13),
                    integrate_adaptive([](double x) { return x * airy_ai(x) * airy_ai(x); }, hi, kAiryCut, 1e-13)};
    }();
    return t;
}

void require_table(const char* name, double s) {
    if (!(s >= SampleTable::kLo)) throw DomainError(std::string(name) + ": s must be >= -12");
}

double central(double s, double h) { return (q_hm(s + h) - q_hm(s - h)) / (2.0 * h); }

}  // namespace

double q_hm(double s) {
    require_table("q_hm", s);
    return NystromOperator::build(s).q_zero();
}

double q_prime(double s) {
    if (!(s >= -11.5)) throw DomainError("q_prime: s must be >= -11.5");
    const double h = 1e-3 * std::max(1.0, std::abs(s));
    return (4.0 * central(s, 0.5 * h) - central(s, h)) / 3.0;
}

double v_of_s(double s) {
    const double q = q_hm(s);
    return s + 2.0 * q * q - 2.0 * q_prime(s);
}

double int_q(double s) {
    require_table("int_q", s);
    if (s >= SampleTable::kHi) return integrate_adaptive(airy_ai, s, std::max(s, kAiryCut), 1e-13);
    return SampleTable::global().int_q(s) + tail().i0;
}

double int_int_q2(double s) {
    require_table("int_int_q2", s);
    if (s >= SampleTable::kHi)
        return integrate_adaptive([s](double x) { return (x - s) * airy_ai(x) * airy_ai(x); }, s,
                                  std::max(s, kAiryCut), 1e-13);
    return SampleTable::global().int_xq2(s) + tail().i2 - s * tail().i1;
}

double f1_painleve(double s) { return std::exp(-0.5 * int_q(s) - 0.5 * int_int_q2(s)); }

const PainleveSample& painleve_sample(double s) {
    static std::mutex mu;
    static std::map<double, std::unique_ptr<const PainleveSample>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(s);
        if (it != cache.end()) return *it->second;
    }
    auto p = std::make_unique<PainleveSample>();
    p->s = s;
    p->q = q_hm(s);
    p->q_prime = q_prime(s);
    p->int_q = int_q(s);
    p->int_int_q2 = int_int_q2(s);
    p->v = s + 2.0 * p->q * p->q - 2.0 * p->q_prime;
    const double h = 0.05;
    const double d2 = (-q_hm(s + 2 * h) + 16.0 * q_hm(s + h) - 30.0 * p->q + 16.0 * q_hm(s - h) - q_hm(s - 2 * h)) /
                      (12.0 * h * h);
    p->ode_residual = std::abs(d2 - s * p->q - 2.0 * p->q * p->q * p->q);
    std::lock_guard<std::mutex> lock(mu);
    // a concurrent caller may have inserted first; keep its entry
    return *cache.emplace(s, std::move(p)).first->second;
}

}  // namespace endpoint
