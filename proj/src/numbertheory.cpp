#include "gp/numbertheory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "gp/errors.hpp"
#include "gp/threads.hpp"

namespace gp {

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw OutOfRange("phi needs n >= 1");
    std::int64_t result = n, m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

int omega(std::int64_t n) {
    if (n < 1) throw OutOfRange("omega needs n >= 1");
    int count = 0;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            ++count;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) ++count;
    return count;
}

std::int64_t kappa(std::int64_t m) {
    if (m < 3) throw OutOfRange("kappa needs m >= 3");
    std::int64_t count = 0;
    for (std::int64_t x = 0; x < m; ++x) {
        const std::int64_t sq = (x * x) % m;
        if (sq == 1 || sq == m - 1) ++count;
    }
    return count;
}

bool is_cayley(std::int64_t n, std::int64_t k) {
    return (k * k) % n == 1;
}

std::int64_t iso_class_count_coprime(std::int64_t m) {
    if (m < 5) throw OutOfRange("class count needs m >= 5");
    const std::int64_t s = euler_phi(m) + kappa(m);
    if (s % 4 != 0) {
        std::ostringstream msg;
        msg << "phi(" << m << ") + kappa(" << m << ") = " << s << " not divisible by 4";
        throw NonIntegral(msg.str());
    }
    return s / 4;
}

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    // extended Euclid; caller guarantees gcd(a, m) = 1
    std::int64_t old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        std::int64_t tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    return ((old_s % m) + m) % m;
}

}  // namespace

std::int64_t brute_iso_classes_coprime(std::int64_t m) {
    if (m < 5) throw OutOfRange("class count needs m >= 5");
    // orbits of the units mod m under k -> m-k and k -> k^{-1}
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    std::int64_t orbits = 0;
    for (std::int64_t k = 1; k < m; ++k) {
        if (seen[k] || std::gcd(k, m) != 1) continue;
        ++orbits;
        std::vector<std::int64_t> stack = {k};
        seen[k] = 1;
        while (!stack.empty()) {
            const std::int64_t v = stack.back();
            stack.pop_back();
            for (std::int64_t w : {m - v, mod_inverse(v, m)}) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return orbits;
}

namespace {

// number of k with 1 <= k, 2k < n, k^2 = 1 (mod n)
std::int64_t cayley_k_count(std::int64_t n) {
    std::int64_t count = 0;
    for (std::int64_t k = 1; 2 * k < n; ++k)
        if ((k * k) % n == 1) ++count;
    return count;
}

std::vector<std::int64_t> checkpoints_up_to(std::int64_t N) {
    std::vector<std::int64_t> cps;
    for (std::int64_t c : {10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000})
        if (c >= 5 && c <= N) cps.push_back(c);
    cps.push_back(N);
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
    return cps;
}

std::vector<CensusRecord> assemble(std::int64_t N, const std::vector<std::int64_t>& a_term,
                                   const std::vector<std::int64_t>& b_term) {
    std::vector<CensusRecord> recs;
    const auto cps = checkpoints_up_to(N);
    std::size_t next = 0;
    std::int64_t a = 0, b = 0;
    for (std::int64_t n = 3; n <= N && next < cps.size(); ++n) {
        a += a_term[n];
        b += b_term[n];
        if (n == cps[next]) {
            recs.push_back(
                CensusRecord{n, a, b, static_cast<double>(b) / static_cast<double>(a)});
            ++next;
        }
    }
    return recs;
}

}  // namespace

std::vector<CensusRecord> census(std::int64_t N) {
    if (N < 5) throw OutOfRange("census needs N >= 5");
    std::vector<std::int64_t> a_term(static_cast<std::size_t>(N) + 1, 0);
    std::vector<std::int64_t> b_term(static_cast<std::size_t>(N) + 1, 0);
#pragma omp parallel for schedule(dynamic, 64) num_threads(worker_count())
    for (std::int64_t n = 3; n <= N; ++n) {
        if (n >= 5) a_term[n] = (euler_phi(n) + kappa(n)) / 4;
        b_term[n] = cayley_k_count(n);
    }
    return assemble(N, a_term, b_term);
}

std::vector<CensusRecord> census_serial(std::int64_t N) {
    if (N < 5) throw OutOfRange("census needs N >= 5");
    std::vector<CensusRecord> recs;
    const auto cps = checkpoints_up_to(N);
    std::size_t next = 0;
    std::int64_t a = 0, b = 0;
    for (std::int64_t n = 3; n <= N && next < cps.size(); ++n) {
        if (n >= 5) a += (euler_phi(n) + kappa(n)) / 4;
        b += cayley_k_count(n);
        if (n == cps[next]) {
            recs.push_back(
                CensusRecord{n, a, b, static_cast<double>(b) / static_cast<double>(a)});
            ++next;
        }
    }
    return recs;
}

}  // namespace gp
