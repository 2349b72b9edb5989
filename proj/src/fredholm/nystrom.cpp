#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include <boost/math/special_functions/airy.hpp>
#include <boost/multiprecision/float128.hpp>

#include "endpoint/detail/airy_wide.hpp"
#include "endpoint/detail/dense.hpp"
#include "endpoint/fredholm.hpp"

namespace endpoint {

using boost::multiprecision::float128;

struct NystromOperator::Impl {
    double s = 0.0;
    double scale = 0.0;
    int n = 0;
    Precision precision = Precision::extended;
    std::vector<double> x, w;
    double log_det = 0.0;
    double k0 = 0.0;
    double q = 0.0;
    std::vector<double> K;

    virtual ~Impl() = default;
    virtual std::vector<double> kernel_matrix() const = 0;
    virtual std::vector<double> symmetric_matrix() const = 0;
    virtual std::vector<double> solve(const std::vector<double>& rhs) const = 0;
    virtual std::vector<double> inverse() const = 0;
    virtual double q_product() const = 0;
};

namespace {

template <class R>
R kernel_airy(R x);

template <>
long double kernel_airy(long double x) {
    if (x > 100.0L) return 0.0L;
    return boost::math::airy_ai(x);
}

template <>
float128 kernel_airy(float128 x) {
    return detail::airy_wide<float128>(x).ai;
}

template <class R>
const std::pair<std::vector<R>, std::vector<R>>& cached_rule(int n) {
    static std::mutex mu;
    static std::map<int, std::pair<std::vector<R>, std::vector<R>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::pair<std::vector<R>, std::vector<R>> r;
        detail::gauss_legendre_wide<R>(n, r.first, r.second);
        it = cache.emplace(n, std::move(r)).first;
    }
    return it->second;
}

template <class R>
std::vector<double> to_double(const std::vector<R>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<double>(v[i]);
    return out;
}

template <class R>
R dot(const std::vector<R>& a, const std::vector<R>& b) {
    R s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <class R>
struct ImplT final : NystromOperator::Impl {
    std::vector<R> xr, sw, b, M, Lm, Lp;
    R ai_s = 0;

    void build(double s_in, int n_in, double scale_in, bool parallel) {
        using std::sqrt;
        s = s_in;
        n = n_in;
        scale = scale_in;
        const int threads = thread_count();
        const auto& rule = cached_rule<R>(n);
        const R L = scale, sr = s;
        xr.resize(n);
        sw.resize(n);
        x.resize(n);
        w.resize(n);
        for (int i = 0; i < n; ++i) {
            const R t = rule.first[i], d = 1 - t;
            xr[i] = L * (1 + t) / d;
            const R wi = rule.second[i] * 2 * L / (d * d);
            sw[i] = sqrt(wi);
            x[i] = static_cast<double>(xr[i]);
            w[i] = static_cast<double>(wi);
        }
        M.assign(std::size_t(n) * n, R(0));
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads) if (parallel)
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                const R v = sw[i] * kernel_airy<R>(xr[i] + xr[j] + sr) * sw[j];
                M[std::size_t(i) * n + j] = v;
                M[std::size_t(j) * n + i] = v;
            }
        }
        b.resize(n);
        for (int i = 0; i < n; ++i) b[i] = sw[i] * kernel_airy<R>(xr[i] + sr);
        ai_s = kernel_airy<R>(sr);

        Lm.resize(M.size());
        Lp.resize(M.size());
        for (std::size_t k = 0; k < M.size(); ++k) {
            Lm[k] = -M[k];
            Lp[k] = M[k];
        }
        for (int i = 0; i < n; ++i) {
            Lm[std::size_t(i) * n + i] += 1;
            Lp[std::size_t(i) * n + i] += 1;
        }
        if (!detail::cholesky(Lm, n, parallel, threads) || !detail::cholesky(Lp, n, parallel, threads))
            throw NumericalError("nystrom_build: I -/+ M not positive definite at s = " + std::to_string(s));
        log_det = static_cast<double>(detail::log_det_from_cholesky(Lm, n));

        std::vector<R> y = b;
        detail::cholesky_solve(Lm, n, y);
        std::vector<R> z = b;
        detail::cholesky_solve(Lp, n, z);
        const R by = dot(b, y), bz = dot(b, z);
        k0 = static_cast<double>(ai_s + by);
        q = static_cast<double>(ai_s + (by - bz) / 2);
        K.resize(n);
        for (int i = 0; i < n; ++i) K[i] = static_cast<double>(y[i] / sw[i]);
    }

    std::vector<double> kernel_matrix() const override {
        std::vector<double> out(M.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out[std::size_t(i) * n + j] = static_cast<double>(M[std::size_t(i) * n + j] / (sw[i] * sw[j]));
        return out;
    }

    std::vector<double> symmetric_matrix() const override { return to_double(M); }

    std::vector<double> solve(const std::vector<double>& rhs) const override {
        if (static_cast<int>(rhs.size()) != n) throw DomainError("NystromOperator::solve: size mismatch");
        std::vector<R> v(rhs.begin(), rhs.end());
        detail::cholesky_solve(Lm, n, v);
        return to_double(v);
    }

    std::vector<double> inverse() const override {
        std::vector<double> out(std::size_t(n) * n);
        std::vector<R> col(n);
        for (int k = 0; k < n; ++k) {
            std::fill(col.begin(), col.end(), R(0));
            col[k] = 1;
            detail::cholesky_solve(Lm, n, col);
            for (int i = 0; i < n; ++i) out[std::size_t(i) * n + k] = static_cast<double>(col[i]);
        }
        // exact symmetry
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double a = 0.5 * (out[std::size_t(i) * n + j] + out[std::size_t(j) * n + i]);
                out[std::size_t(i) * n + j] = a;
                out[std::size_t(j) * n + i] = a;
            }
        return out;
    }

    double q_product() const override {
        std::vector<R> A(M.size(), R(0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const R mik = M[std::size_t(i) * n + k];
                for (int j = 0; j < n; ++j) A[std::size_t(i) * n + j] -= mik * M[std::size_t(k) * n + j];
            }
        for (int i = 0; i < n; ++i) A[std::size_t(i) * n + i] += 1;
        if (!detail::cholesky(A, n, false, 1)) throw NumericalError("q_zero_product: I - M^2 not positive definite");
        std::vector<R> u = b;
        detail::cholesky_solve(A, n, u);
        R acc = 0;
        for (int i = 0; i < n; ++i) {
            R mu = 0;
            for (int j = 0; j < n; ++j) mu += M[std::size_t(i) * n + j] * u[j];
            acc += b[i] * mu;
        }
        return static_cast<double>(ai_s + acc);
    }
};

}  // namespace

NystromOperator NystromOperator::build(double s, int n, double scale, Precision precision, bool parallel) {
    if (n < 1 || n > 512) throw DomainError("nystrom_build: n must be in [1, 512]");
    if (!std::isfinite(s)) throw DomainError("nystrom_build: s must be finite");
    if (!(scale > 0.0)) scale = 6.0 + std::max(0.0, -s);
    if (precision == Precision::automatic) precision = (s >= kQuadBelow) ? Precision::extended : Precision::quad;
    NystromOperator op;
    if (precision == Precision::extended) {
        auto impl = std::make_shared<ImplT<long double>>();
        impl->precision = precision;
        impl->build(s, n, scale, parallel);
        op.impl_ = std::move(impl);
    } else {
        auto impl = std::make_shared<ImplT<float128>>();
        impl->precision = precision;
        impl->build(s, n, scale, parallel);
        op.impl_ = std::move(impl);
    }
    return op;
}

double NystromOperator::s() const { return impl_->s; }
int NystromOperator::size() const { return impl_->n; }
double NystromOperator::scale() const { return impl_->scale; }
Precision NystromOperator::precision() const { return impl_->precision; }
const std::vector<double>& NystromOperator::nodes() const { return impl_->x; }
const std::vector<double>& NystromOperator::weights() const { return impl_->w; }
std::vector<double> NystromOperator::kernel_matrix() const { return impl_->kernel_matrix(); }
std::vector<double> NystromOperator::symmetric_matrix() const { return impl_->symmetric_matrix(); }
double NystromOperator::log_det() const { return impl_->log_det; }
double NystromOperator::det() const { return std::exp(impl_->log_det); }
const std::vector<double>& NystromOperator::resolvent_grid() const { return impl_->K; }
double NystromOperator::k_zero() const { return impl_->k0; }
double NystromOperator::q_zero() const { return impl_->q; }
double NystromOperator::q_zero_product() const { return impl_->q_product(); }
std::vector<double> NystromOperator::solve(const std::vector<double>& rhs) const { return impl_->solve(rhs); }
std::vector<double> NystromOperator::inverse() const { return impl_->inverse(); }

double NystromOperator::K_at(double x) const {
    const Impl& d = *impl_;
    double sum = airy_ai(x + d.s);
    for (int j = 0; j < d.n; ++j) sum += d.w[j] * airy_ai(x + d.x[j] + d.s) * d.K[j];
    return sum;
}

double log_f1_fredholm(double s) { return NystromOperator::build(s).log_det(); }

double f1_fredholm(double s) {
    if (s < -12.0) throw DomainError("f1_fredholm: s must be >= -12");
    const double ld = log_f1_fredholm(s);
    if (ld < std::log(1e-300)) throw Underflow("f1_fredholm: determinant below 1e-300 at s = " + std::to_string(s));
    return std::exp(ld);
}

ResolventK resolvent_K(double s) { return ResolventK{NystromOperator::build(s)}; }

RhoTable rho_matrix(double s) {
    const NystromOperator op = NystromOperator::build(s);
    const int n = op.size();
    RhoTable t;
    t.nodes = op.nodes();
    t.weights = op.weights();
    t.rho = op.inverse();
    for (int i = 0; i < n; ++i) {
        t.rho[std::size_t(i) * n + i] -= 1.0;
        for (int j = 0; j < n; ++j) t.rho[std::size_t(i) * n + j] /= std::sqrt(t.weights[i] * t.weights[j]);
    }
    return t;
}

double k_zero(double s) { return NystromOperator::build(s).k_zero(); }

}  // namespace endpoint
