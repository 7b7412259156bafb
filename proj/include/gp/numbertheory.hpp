// numbertheory.hpp -- arithmetic helpers behind the isomorphism-class census:
// Euler phi, prime-divisor count, square roots of +-1, Cayley recognition,
// and the census itself.
#pragma once

#include <cstdint>
#include <vector>

namespace gp {

// Euler's totient by trial division.  n >= 1.
std::int64_t euler_phi(std::int64_t n);

// Number of distinct prime divisors.  n >= 1 (omega(1) = 0).
int omega(std::int64_t n);

// kappa(m) = #{x mod m : x^2 = 1} + #{x mod m : x^2 = -1}, by direct scan.
// m >= 3.
std::int64_t kappa(std::int64_t m);

// P(n,k) is a Cayley graph iff k^2 = 1 (mod n).
bool is_cayley(std::int64_t n, std::int64_t k);

// Number of isomorphism classes of P(m,k) with gcd(k,m) = 1, m >= 5:
// (phi(m) + kappa(m)) / 4.  Throws NonIntegral if the sum is not divisible
// by 4 (it always is; the check guards against arithmetic bugs).
std::int64_t iso_class_count_coprime(std::int64_t m);

// Same count by brute force: orbits of the coprime residues under
// k -> m - k and k -> k^{-1} (mod m).  Independent of the formula above.
std::int64_t brute_iso_classes_coprime(std::int64_t m);

struct CensusRecord {
    std::int64_t N = 0;        // checkpoint
    std::int64_t a_lower = 0;  // sum over 5 <= n <= N of (phi(n)+kappa(n))/4
    std::int64_t b_count = 0;  // #{(n,k) : 3 <= n <= N, 2k < n, k^2 = 1 mod n}
    double ratio = 0.0;        // b_count / a_lower
};

// Census up to N (N >= 5) at checkpoints
// {10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000} clipped to [5, N],
// plus N itself.  Kernel is OpenMP across n with per-n slots, then a serial
// prefix pass; output independent of thread count.
std::vector<CensusRecord> census(std::int64_t N);

// Reference census: one serial accumulation pass, no intermediate arrays.
std::vector<CensusRecord> census_serial(std::int64_t N);

}  // namespace gp
