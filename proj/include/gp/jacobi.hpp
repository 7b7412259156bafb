// jacobi.hpp -- cyclic Jacobi eigensolver for dense symmetric matrices.
// Kept deliberately independent of the closed form: this is the oracle the
// formula is tested against.
#pragma once

#include <cstddef>
#include <vector>

#include "gp/graph.hpp"
#include "gp/spectrum.hpp"

namespace gp {

// Eigenvalues of the dim x dim symmetric matrix `a` (row-major), sorted
// descending.  Converged when the off-diagonal Frobenius norm drops below
// 1e-10; throws NoConvergence after 100 sweeps.  Works on its own copy.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t dim);

// Full spectrum of g via the dense adjacency matrix and Jacobi.
Spectrum oracle_spectrum(const Graph& g);

}  // namespace gp
