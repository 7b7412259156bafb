// threads.hpp -- worker-count policy shared by the parallel kernels.
#pragma once

namespace gp {

// GP_THREADS > 0 wins; otherwise the OpenMP default (1 without OpenMP).
int worker_count();

}  // namespace gp
