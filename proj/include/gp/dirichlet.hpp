// dirichlet.hpp -- simultaneous-approximation witnesses by exhaustive search
// over the pigeonhole range, and the "good index" constructions they feed.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gp/graph.hpp"

namespace gp {

// Distance from y to the nearest integer, in [0, 1/2].
double nearest_int_dist(double y);

// Nearest integer to y, halves rounded toward zero.
std::int64_t nearest_int_half_to_zero(double y);

struct DirichletWitness {
    std::int64_t t = 0;
    std::vector<std::int64_t> x;  // x[i] = nearest integer to t * a[i]
    std::int64_t q = 0;
    std::int64_t t0 = 0;
};

// Smallest integer t in [t0, t0 * q^N], N = a.size(), with
// nearest_int_dist(t * a[i]) <= 1/q for every i.  The pigeonhole argument
// guarantees one exists.  Throws RangeOverflow if t0 * q^N overflows int64.
DirichletWitness dirichlet_witness(std::span<const double> a, std::int64_t q,
                                   std::int64_t t0);

// The m smallest distinct witnesses in [t0, m * t0 * q^N], ascending.
std::vector<DirichletWitness> dirichlet_witnesses(std::span<const double> a,
                                                  std::int64_t q, std::int64_t t0,
                                                  std::int64_t m);

struct GoodIndexSet {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::optional<double> eps;  // set by the clustering construction only
    std::int64_t q = 0;
    std::vector<std::int64_t> indices;  // ascending, in [1, n-1]
};

// Single good index for the gap argument: the witness t for a = {1/n, k/n}
// with q = floor(sqrt(n)) - 1 and t0 = 1.  Requires n >= 5.
GoodIndexSet good_index_gap(const GpParams& p);

// All good indices for the eigenvalue-clustering argument with
// q = floor(4*pi/eps) + 1: every j in [1, n-1] with both j/n and j*k/n within
// 1/q of an integer.  At least floor(n/q^2) of them exist.  Throws
// NonpositiveEpsilon for eps <= 0 and TooSmallN when n <= q^2.
GoodIndexSet good_index_cluster(const GpParams& p, double eps);

}  // namespace gp
