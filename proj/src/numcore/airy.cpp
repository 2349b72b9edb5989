#include <cmath>

#include <boost/math/special_functions/airy.hpp>

#include "endpoint/detail/airy_wide.hpp"
#include "endpoint/numcore.hpp"

namespace endpoint {

namespace {

// boost covers |x| < kSwitch; the asymptotic series takes over beyond,
// where its optimal truncation error is below 1e-17 relative.
constexpr double kSwitch = 10.0;

AiryPair asym_neg(double x) {
    auto r = detail::airy_asym_neg<long double>(x);
    return {static_cast<double>(r.ai), static_cast<double>(r.aip)};
}

}  // namespace

const AiryAsymCoeffs& AiryAsymCoeffs::get() {
    static const AiryAsymCoeffs coeffs = [] {
        AiryAsymCoeffs k;
        detail::airy_asym_coeffs<double>(80, k.c, k.d);
        return k;
    }();
    return coeffs;
}

AiryPair airy_pair(double x) {
    if (x > kAiryClamp) return {0.0, 0.0};
    if (x >= kSwitch) {
        long double zeta;
        auto s = detail::airy_asym_pos_scaled<long double>(x, zeta);
        const long double e = std::exp(-zeta);
        return {static_cast<double>(s.ai * e), static_cast<double>(s.aip * e)};
    }
    if (x <= -kSwitch) return asym_neg(x);
    return {boost::math::airy_ai(x), boost::math::airy_ai_prime(x)};
}

double airy_ai(double x) { return airy_pair(x).ai; }

double airy_ai_prime(double x) { return airy_pair(x).aip; }

ScaledAiry airy_scaled(double x) {
    if (x <= 0.0) {
        const AiryPair p = airy_pair(x);
        return {p.ai, p.aip, 0.0};
    }
    if (x >= kSwitch) {
        long double zeta;
        auto s = detail::airy_asym_pos_scaled<long double>(x, zeta);
        return {static_cast<double>(s.ai), static_cast<double>(s.aip), static_cast<double>(zeta)};
    }
    const double zeta = 2.0 * x * std::sqrt(x) / 3.0;
    const double e = std::exp(zeta);
    return {boost::math::airy_ai(x) * e, boost::math::airy_ai_prime(x) * e, zeta};
}

}  // namespace endpoint
