#include <cmath>

#include "endpoint/numcore.hpp"

namespace endpoint {

const Constants& constants() {
    static const Constants c = [] {
        // zeta'(-1) = 1/12 - log(Glaisher)
        const long double zp = -0.165421143700450929213919660243L;
        const long double pi = 3.141592653589793238462643383279503L;
        const long double half = std::exp(zp / 2);
        const long double e54 = std::exp(1.25L);
        const long double pi32 = pi * std::sqrt(pi);
        Constants k{};
        k.zeta_prime_m1 = static_cast<double>(zp);
        k.tau1 = static_cast<double>(half / std::pow(2.0L, 11.0L / 48.0L));
        const long double tau = std::pow(2.0L, -29.0L / 6.0L) * e54 * half * pi32;
        k.tau = static_cast<double>(tau);
        k.kappa = static_cast<double>(std::pow(2.0L, -91.0L / 24.0L) * pi32 * half * e54);
        k.C = static_cast<double>(tau / 2);
        return k;
    }();
    return c;
}

}  // namespace endpoint
