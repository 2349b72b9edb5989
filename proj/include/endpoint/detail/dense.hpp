#pragma once

// Row-major dense kernels with an OpenMP variant and a serial reference.
// Every output element is accumulated in the same order in both variants,
// so results are bitwise identical.

#include <cmath>
#include <cstddef>
#include <vector>

namespace endpoint::detail {

// Lower Cholesky factor of an SPD matrix, in place (upper part left as is).
// Returns false if a pivot is not positive.
template <class R>
bool cholesky(std::vector<R>& a, int n, bool parallel, int threads) {
    using std::sqrt;
    for (int j = 0; j < n; ++j) {
        R d = a[std::size_t(j) * n + j];
        const R* lj = &a[std::size_t(j) * n];
        for (int k = 0; k < j; ++k) d -= lj[k] * lj[k];
        if (!(d > 0)) return false;
        const R ljj = sqrt(d);
        a[std::size_t(j) * n + j] = ljj;
#pragma omp parallel for schedule(static) num_threads(threads) if (parallel && n - j > 64)
        for (int i = j + 1; i < n; ++i) {
            R* li = &a[std::size_t(i) * n];
            R v = li[j];
            for (int k = 0; k < j; ++k) v -= li[k] * lj[k];
            li[j] = v / ljj;
        }
    }
    return true;
}

// Solve L L^T y = b with the factor from cholesky().
template <class R>
void cholesky_solve(const std::vector<R>& l, int n, std::vector<R>& b) {
    for (int i = 0; i < n; ++i) {
        R v = b[i];
        const R* li = &l[std::size_t(i) * n];
        for (int k = 0; k < i; ++k) v -= li[k] * b[k];
        b[i] = v / li[i];
    }
    for (int i = n - 1; i >= 0; --i) {
        R v = b[i];
        for (int k = i + 1; k < n; ++k) v -= l[std::size_t(k) * n + i] * b[k];
        b[i] = v / l[std::size_t(i) * n + i];
    }
}

template <class R>
R log_det_from_cholesky(const std::vector<R>& l, int n) {
    using std::log;
    R s = 0;
    for (int i = 0; i < n; ++i) s += log(l[std::size_t(i) * n + i]);
    return 2 * s;
}

}  // namespace endpoint::detail
