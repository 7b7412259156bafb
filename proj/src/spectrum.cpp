#include "gp/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gp/errors.hpp"
#include "gp/threads.hpp"

namespace gp {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

double plus_branch(double c1, double c2) {
    const double d = c1 - c2;
    return c1 + c2 + std::sqrt(d * d + 1.0);
}
}  // namespace

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw OutOfRange("isqrt of negative value");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

EigPair eig_pair(const GpParams& p, std::int64_t j) {
    if (j < 0 || j >= p.n) {
        std::ostringstream msg;
        msg << "index j=" << j << " outside [0, " << p.n - 1 << "]";
        throw IndexOutOfRange(msg.str());
    }
    const double c1 = std::cos(kTwoPi * static_cast<double>(j) / static_cast<double>(p.n));
    const double c2 = std::cos(kTwoPi * static_cast<double>(j) * static_cast<double>(p.k) /
                               static_cast<double>(p.n));
    const double d = c1 - c2;
    const double root = std::sqrt(d * d + 1.0);
    return EigPair{j, c1 + c2 + root, c1 + c2 - root};
}

Spectrum closed_form_spectrum(const GpParams& p) {
    Spectrum s;
    s.n = p.n;
    s.k = p.k;
    s.source = SpectrumSource::ClosedForm;
    s.values.reserve(static_cast<std::size_t>(2 * p.n));
    for (std::int64_t j = 0; j < p.n; ++j) {
        const EigPair e = eig_pair(p, j);
        s.values.push_back(e.plus_value);
        s.values.push_back(e.minus_value);
    }
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    return s;
}

double spectral_gap(const Spectrum& s) {
    if (s.values.size() < 2) throw TooFewValues("need at least two eigenvalues");
    return s.values[0] - s.values[1];
}

double gap_bound(std::int64_t n) {
    const std::int64_t r = isqrt(n);
    if (r <= 1) {
        std::ostringstream msg;
        msg << "gap bound needs n >= 4 (got n=" << n << ")";
        throw OutOfRange(msg.str());
    }
    return 4.0 * std::numbers::pi_v<double> / static_cast<double>(r - 1);
}

std::int64_t count_near_valency(const Spectrum& s, double eps) {
    if (eps <= 0.0) throw NonpositiveEpsilon("eps must be positive");
    const double threshold = 3.0 - eps;
    // values are descending: the qualifying entries are a prefix
    auto it = std::partition_point(s.values.begin(), s.values.end(),
                                   [threshold](double v) { return v >= threshold; });
    return static_cast<std::int64_t>(it - s.values.begin());
}

double second_largest_eigenvalue(const GpParams& p) {
    // the +branch at j = 0 gives the valency 3 itself; lambda_2 is the best of
    // the -branch at 0 (always 1) and the +branch over 1 <= j <= n/2
    // (j and n-j coincide)
    double best = 1.0;
    const auto n = static_cast<double>(p.n);
    for (std::int64_t j = 1; 2 * j <= p.n; ++j) {
        const double c1 = std::cos(kTwoPi * static_cast<double>(j) / n);
        const double c2 = std::cos(kTwoPi * static_cast<double>(j) * static_cast<double>(p.k) / n);
        best = std::max(best, plus_branch(c1, c2));
    }
    return best;
}

std::vector<std::int64_t> select_k_values(std::int64_t n, const KSelection& sel) {
    const std::int64_t kmax = (n - 1) / 2;  // largest k with 2k < n
    std::vector<std::int64_t> ks;
    switch (sel.mode) {
        case KSelection::Mode::All:
            ks.reserve(static_cast<std::size_t>(kmax));
            for (std::int64_t k = 1; k <= kmax; ++k) ks.push_back(k);
            break;
        case KSelection::Mode::Sample: {
            if (sel.value < 1) throw OutOfRange("sample count must be >= 1");
            const std::int64_t stride = std::max<std::int64_t>(1, kmax / sel.value);
            for (std::int64_t k = 1; k <= kmax && std::ssize(ks) < sel.value; k += stride)
                ks.push_back(k);
            break;
        }
        case KSelection::Mode::Fixed:
            if (sel.value < 1 || sel.value > kmax) {
                std::ostringstream msg;
                msg << "fixed k=" << sel.value << " invalid for n=" << n;
                throw OutOfRange(msg.str());
            }
            ks.push_back(sel.value);
            break;
    }
    return ks;
}

namespace {

void check_sweep_range(std::int64_t n_lo, std::int64_t n_hi) {
    if (n_lo < 4 || n_hi < n_lo || n_hi > 1000000) {
        std::ostringstream msg;
        msg << "sweep range [" << n_lo << ", " << n_hi << "] outside [4, 1e6]";
        throw OutOfRange(msg.str());
    }
}

}  // namespace

std::vector<GapRow> sweep_spectral_gap(std::int64_t n_lo, std::int64_t n_hi,
                                       const KSelection& sel) {
    check_sweep_range(n_lo, n_hi);
    const std::int64_t count_n = n_hi - n_lo + 1;

    // per-n k lists and row offsets up front, so threads write disjoint slices
    std::vector<std::vector<std::int64_t>> k_lists(static_cast<std::size_t>(count_n));
    std::vector<std::size_t> offset(static_cast<std::size_t>(count_n) + 1, 0);
    for (std::int64_t i = 0; i < count_n; ++i) {
        k_lists[i] = select_k_values(n_lo + i, sel);
        offset[i + 1] = offset[i] + k_lists[i].size();
    }
    std::vector<GapRow> rows(offset.back());

#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (std::int64_t i = 0; i < count_n; ++i) {
        const std::int64_t n = n_lo + i;
        const double bound = gap_bound(n);
        std::vector<double> cosv(static_cast<std::size_t>(n));
        for (std::int64_t j = 0; j < n; ++j)
            cosv[j] = std::cos(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
        GapRow* out = rows.data() + offset[i];
        for (std::int64_t k : k_lists[i]) {
            double best = 1.0;
            for (std::int64_t j = 1; 2 * j <= n; ++j) {
                // exact integer reduction of the angle index j*k mod n
                const double v = plus_branch(cosv[j], cosv[(j * k) % n]);
                if (v > best) best = v;
            }
            const double gap = 3.0 - best;
            *out++ = GapRow{n, k, gap, bound, gap < bound};
        }
    }
    return rows;
}

std::vector<GapRow> sweep_spectral_gap_serial(std::int64_t n_lo, std::int64_t n_hi,
                                              const KSelection& sel) {
    check_sweep_range(n_lo, n_hi);
    std::vector<GapRow> rows;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        const double bound = gap_bound(n);
        for (std::int64_t k : select_k_values(n, sel)) {
            double best = 1.0;
            for (std::int64_t j = 1; j < n; ++j) {
                const double c1 =
                    std::cos(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
                const double c2 = std::cos(kTwoPi * static_cast<double>(j) *
                                           static_cast<double>(k) / static_cast<double>(n));
                const double v = plus_branch(c1, c2);
                if (v > best) best = v;
            }
            const double gap = 3.0 - best;
            rows.push_back(GapRow{n, k, gap, bound, gap < bound});
        }
    }
    return rows;
}

}  // namespace gp
