#include "gp/threads.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gp {

int worker_count() {
    if (const char* env = std::getenv("GP_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return v;
        } catch (...) {
            // unparsable: fall through to the OpenMP default
        }
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace gp
