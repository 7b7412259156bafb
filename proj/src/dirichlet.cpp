#include "gp/dirichlet.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gp/errors.hpp"

namespace gp {

double nearest_int_dist(double y) {
    const double f = y - std::floor(y);
    return std::min(f, 1.0 - f);
}

std::int64_t nearest_int_half_to_zero(double y) {
    const double r = std::floor(y);
    const double f = y - r;
    double nearest;
    if (f < 0.5) {
        nearest = r;
    } else if (f > 0.5) {
        nearest = r + 1.0;
    } else {
        // exact half: toward zero
        nearest = (y >= 0.0) ? r : r + 1.0;
    }
    return static_cast<std::int64_t>(nearest);
}

namespace {

// t0 * q^N with overflow detection
std::int64_t range_end(std::int64_t t0, std::int64_t q, std::size_t N) {
    std::int64_t r = t0;
    for (std::size_t i = 0; i < N; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / q)
            throw RangeOverflow("t0 * q^N exceeds 64-bit range");
        r *= q;
    }
    return r;
}

void check_witness_args(std::span<const double> a, std::int64_t q, std::int64_t t0) {
    if (a.empty()) throw OutOfRange("need at least one target value");
    if (q < 1) throw OutOfRange("q must be >= 1");
    if (t0 < 1) throw OutOfRange("t0 must be >= 1");
}

bool admits(std::span<const double> a, std::int64_t t, double inv_q) {
    for (double v : a)
        if (nearest_int_dist(static_cast<double>(t) * v) > inv_q) return false;
    return true;
}

DirichletWitness make_witness(std::span<const double> a, std::int64_t t, std::int64_t q,
                              std::int64_t t0) {
    DirichletWitness w;
    w.t = t;
    w.q = q;
    w.t0 = t0;
    w.x.reserve(a.size());
    for (double v : a) w.x.push_back(nearest_int_half_to_zero(static_cast<double>(t) * v));
    return w;
}

}  // namespace

DirichletWitness dirichlet_witness(std::span<const double> a, std::int64_t q,
                                   std::int64_t t0) {
    check_witness_args(a, q, t0);
    const std::int64_t hi = range_end(t0, q, a.size());
    const double inv_q = 1.0 / static_cast<double>(q);
    for (std::int64_t t = t0; t <= hi; ++t)
        if (admits(a, t, inv_q)) return make_witness(a, t, q, t0);
    // the pigeonhole argument rules this out
    std::ostringstream msg;
    msg << "no witness in [" << t0 << ", " << hi << "]";
    throw ClaimViolated(msg.str());
}

std::vector<DirichletWitness> dirichlet_witnesses(std::span<const double> a, std::int64_t q,
                                                  std::int64_t t0, std::int64_t m) {
    check_witness_args(a, q, t0);
    if (m < 1) throw OutOfRange("m must be >= 1");
    const std::int64_t base = range_end(t0, q, a.size());
    if (base > std::numeric_limits<std::int64_t>::max() / m)
        throw RangeOverflow("m * t0 * q^N exceeds 64-bit range");
    const std::int64_t hi = m * base;
    const double inv_q = 1.0 / static_cast<double>(q);

    std::vector<DirichletWitness> ws;
    for (std::int64_t t = t0; t <= hi && std::ssize(ws) < m; ++t)
        if (admits(a, t, inv_q)) ws.push_back(make_witness(a, t, q, t0));
    if (std::ssize(ws) < m) {
        std::ostringstream msg;
        msg << "only " << ws.size() << " of " << m << " witnesses in [" << t0 << ", " << hi
            << "]";
        throw ClaimViolated(msg.str());
    }
    return ws;
}

GoodIndexSet good_index_gap(const GpParams& p) {
    if (p.n < 5) {
        std::ostringstream msg;
        msg << "good index needs n >= 5 (got n=" << p.n << ")";
        throw OutOfRange(msg.str());
    }
    std::int64_t q = 1;
    while ((q + 2) * (q + 2) <= p.n) ++q;  // q = floor(sqrt(n)) - 1

    const double a[2] = {1.0 / static_cast<double>(p.n),
                         static_cast<double>(p.k) / static_cast<double>(p.n)};
    const DirichletWitness w = dirichlet_witness(a, q, 1);

    GoodIndexSet s;
    s.n = p.n;
    s.k = p.k;
    s.q = q;
    s.indices = {w.t};  // t <= q^2 < n, so t is a valid index
    return s;
}

GoodIndexSet good_index_cluster(const GpParams& p, double eps) {
    if (eps <= 0.0) throw NonpositiveEpsilon("eps must be positive");
    const std::int64_t q =
        static_cast<std::int64_t>(std::floor(4.0 * std::numbers::pi_v<double> / eps)) + 1;
    if (p.n <= q * q) {
        std::ostringstream msg;
        msg << "need n > q^2 = " << q * q << " (got n=" << p.n << ", eps=" << eps << ")";
        throw TooSmallN(msg.str());
    }
    const std::int64_t m = p.n / (q * q);
    const double inv_q = 1.0 / static_cast<double>(q);
    const double n = static_cast<double>(p.n);

    GoodIndexSet s;
    s.n = p.n;
    s.k = p.k;
    s.eps = eps;
    s.q = q;
    for (std::int64_t j = 1; j < p.n; ++j) {
        if (nearest_int_dist(static_cast<double>(j) / n) <= inv_q &&
            nearest_int_dist(static_cast<double>(j) * static_cast<double>(p.k) / n) <= inv_q)
            s.indices.push_back(j);
    }
    if (std::ssize(s.indices) < m) {
        std::ostringstream msg;
        msg << "found " << s.indices.size() << " good indices, guaranteed " << m << " (n="
            << p.n << ", k=" << p.k << ", eps=" << eps << ")";
        throw ClaimViolated(msg.str());
    }
    return s;
}

}  // namespace gp
