#include "gp/expansion.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>
#include <tuple>

#include "gp/errors.hpp"
#include "gp/spectrum.hpp"
#include "gp/threads.hpp"

namespace gp {

std::int64_t boundary_size(const Graph& g, std::span<const std::int64_t> subset) {
    if (subset.empty()) throw EmptySet("subset must be nonempty");
    std::vector<char> in_f(static_cast<std::size_t>(g.vertex_count), 0);
    for (std::int64_t v : subset) {
        if (v < 0 || v >= g.vertex_count) {
            std::ostringstream msg;
            msg << "vertex " << v << " outside [0, " << g.vertex_count - 1 << "]";
            throw InvalidVertex(msg.str());
        }
        in_f[static_cast<std::size_t>(v)] = 1;
    }
    std::int64_t cut = 0;
    for (std::int64_t v = 0; v < g.vertex_count; ++v) {
        if (!in_f[static_cast<std::size_t>(v)]) continue;
        for (auto w : g.adjacency[static_cast<std::size_t>(v)])
            if (!in_f[static_cast<std::size_t>(w)]) ++cut;
    }
    return cut;
}

namespace {

// candidate minimiser: cut/size with the witness mask
struct Cand {
    std::int64_t cut = 0;
    std::int64_t size = 0;  // 0 = empty sentinel
    std::uint32_t mask = 0;
};

// ascending-index subset lists compared lexicographically, straight off the
// bit masks: below the lowest differing bit the lists agree
bool subset_lex_less(std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    const int low = std::countr_zero(a ^ b);
    if ((a >> low) & 1u) return (b >> low) != 0;  // a owns `low`; smaller unless b ended
    return (a >> low) == 0;                       // b owns `low`; a smaller only if a ended
}

// strictly better ratio, or equal ratio with lexicographically smaller witness
bool better(const Cand& c, const Cand& best) {
    if (best.size == 0) return true;
    const std::int64_t lhs = c.cut * best.size;   // exact integer comparison of
    const std::int64_t rhs = best.cut * c.size;   // c.cut/c.size vs best.cut/best.size
    if (lhs != rhs) return lhs < rhs;
    return subset_lex_less(c.mask, best.mask);
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count), 0);
    for (std::int64_t v = 0; v < g.vertex_count; ++v)
        for (auto w : g.adjacency[static_cast<std::size_t>(v)])
            adj[static_cast<std::size_t>(v)] |= 1u << w;
    return adj;
}

std::int64_t cut_of_mask(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
    std::int64_t cut = 0;
    for (std::uint32_t rem = mask; rem != 0; rem &= rem - 1) {
        const int v = std::countr_zero(rem);
        cut += 3 - std::popcount(adj[static_cast<std::size_t>(v)] & mask);
    }
    return cut;
}

ExpansionResult finish(const Graph& g, const Cand& best) {
    ExpansionResult r;
    r.h = static_cast<double>(best.cut) / static_cast<double>(best.size);
    for (int v = 0; v < static_cast<int>(g.vertex_count); ++v)
        if (best.mask >> v & 1u) r.witness_set.push_back(v);
    const double lambda2 = second_largest_eigenvalue(g.params);
    std::tie(r.lower, r.upper) = cheeger_bounds(lambda2);
    r.corollary_bound = g.params.n >= 4 ? corollary_bound(g.params.n)
                                        : std::numeric_limits<double>::quiet_NaN();
    return r;
}

}  // namespace

ExpansionResult expanding_constant_exact(const Graph& g) {
    const std::int64_t nv = g.vertex_count;
    if (nv > 26) {
        std::ostringstream msg;
        msg << "exact enumeration capped at 26 vertices (got " << nv << ")";
        throw TooLarge(msg.str());
    }
    const auto adj = adjacency_masks(g);
    const int bits = static_cast<int>(nv);
    const std::int64_t half = g.params.n;
    const std::uint64_t total = std::uint64_t{1} << bits;

    // Gray-code walk: after step i the current subset is i ^ (i >> 1), and the
    // vertex toggled at step i is countr_zero(i).  Split the step range into
    // contiguous blocks; each block seeds its own state, so the partition is
    // deterministic whatever the thread count.
    const int block_bits = bits > 14 ? bits - 14 : 0;
    const std::int64_t blocks = std::int64_t{1} << block_bits;
    const std::uint64_t block_len = total >> block_bits;
    std::vector<Cand> block_best(static_cast<std::size_t>(blocks));

#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (std::int64_t b = 0; b < blocks; ++b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * block_len;
        const std::uint64_t hi = lo + block_len;
        std::uint32_t f = 0;
        std::int64_t size = 0, cut = 0;
        if (lo > 0) {
            f = static_cast<std::uint32_t>((lo - 1) ^ ((lo - 1) >> 1));
            size = std::popcount(f);
            cut = cut_of_mask(adj, f);
        }
        Cand best;
        for (std::uint64_t i = lo > 0 ? lo : 1; i < hi; ++i) {
            const int v = std::countr_zero(i);
            const std::uint32_t bit = std::uint32_t{1} << v;
            const std::uint32_t rest = f & ~bit;
            const auto d = std::popcount(adj[static_cast<std::size_t>(v)] & rest);
            if (f & bit) {
                f = rest;
                --size;
                cut -= 3 - 2 * d;
            } else {
                f |= bit;
                ++size;
                cut += 3 - 2 * d;
            }
            if (size >= 1 && size <= half) {
                const Cand c{cut, size, f};
                if (better(c, best)) best = c;
            }
        }
        block_best[static_cast<std::size_t>(b)] = best;
    }

    Cand best;
    for (const Cand& c : block_best)
        if (c.size != 0 && better(c, best)) best = c;
    return finish(g, best);
}

ExpansionResult expanding_constant_brute(const Graph& g) {
    const std::int64_t nv = g.vertex_count;
    if (nv > 20) {
        std::ostringstream msg;
        msg << "reference enumeration capped at 20 vertices (got " << nv << ")";
        throw TooLarge(msg.str());
    }
    const auto adj = adjacency_masks(g);
    const std::int64_t half = g.params.n;
    const std::uint32_t total = std::uint32_t{1} << nv;

    Cand best;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        const std::int64_t size = std::popcount(mask);
        if (size > half) continue;
        const Cand c{cut_of_mask(adj, mask), size, mask};
        if (better(c, best)) best = c;
    }
    return finish(g, best);
}

std::pair<double, double> cheeger_bounds(double lambda2) {
    if (lambda2 > 3.0 + 1e-9) {
        std::ostringstream msg;
        msg << "lambda2 = " << lambda2 << " exceeds the valency";
        throw OutOfRange(msg.str());
    }
    const double d = std::max(0.0, 3.0 - lambda2);
    return {d / 2.0, std::sqrt(6.0 * d)};
}

double corollary_bound(std::int64_t n) {
    const std::int64_t r = isqrt(n);
    if (r <= 1) {
        std::ostringstream msg;
        msg << "bound needs n >= 4 (got n=" << n << ")";
        throw OutOfRange(msg.str());
    }
    return std::sqrt(24.0 * std::numbers::pi_v<double> / static_cast<double>(r - 1));
}

}  // namespace gp
