#include <cstdlib>

#include <omp.h>

#include "endpoint/numcore.hpp"

namespace endpoint {

int thread_count() {
    static const int n = [] {
        if (const char* env = std::getenv("ENDPOINT_TAILS_THREADS")) {
            const int v = std::atoi(env);
            if (v > 0) return v;
        }
        return omp_get_num_procs();
    }();
    return n;
}

}  // namespace endpoint
