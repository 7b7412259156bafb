// expansion.hpp -- exact edge expansion (isoperimetric constant) of small
// P(n,k) by subset enumeration, plus the spectral sandwich around it.
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gp/graph.hpp"

namespace gp {

// |boundary(F)| for a nonempty F: edges with exactly one endpoint in F.
// Duplicate indices collapse (set semantics).  Throws EmptySet and
// InvalidVertex.
std::int64_t boundary_size(const Graph& g, std::span<const std::int64_t> subset);

struct ExpansionResult {
    double h = 0.0;
    std::vector<std::int64_t> witness_set;  // ascending; lexicographically
                                            // smallest among the minimisers
    double lower = 0.0;            // (3 - lambda_2) / 2
    double upper = 0.0;            // sqrt(6 * (3 - lambda_2))
    double corollary_bound = 0.0;  // sqrt(24*pi / (floor(sqrt(n)) - 1)); NaN for n = 3
};

// h(G) = min over subsets F with 1 <= |F| <= n of |boundary(F)| / |F|,
// exactly, with the witness.  Kernel: Gray-code walk with incremental cut
// updates, split into contiguous index blocks for OpenMP; ties broken toward
// the lexicographically smallest subset; ratio comparisons in exact integer
// arithmetic.  Throws TooLarge when 2n > 26.
ExpansionResult expanding_constant_exact(const Graph& g);

// Reference: recompute |F| and the cut from scratch for every mask.
// Capped harder (2n <= 20).
ExpansionResult expanding_constant_brute(const Graph& g);

// ((3 - lambda2)/2, sqrt(6*(3 - lambda2))).  Throws OutOfRange when lambda2
// exceeds 3 by more than 1e-9; tiny excesses clamp to 3.
std::pair<double, double> cheeger_bounds(double lambda2);

// sqrt(24*pi / (floor(sqrt(n)) - 1)), n >= 4.
double corollary_bound(std::int64_t n);

}  // namespace gp
