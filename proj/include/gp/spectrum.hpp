// spectrum.hpp -- closed-form adjacency spectrum of P(n,k) and gap statistics.
//
// For j = 0..n-1 the two eigenvalues of the j-th 2x2 block are
//
//   c1 + c2 +- sqrt((c1 - c2)^2 + 1),  c1 = cos(2*pi*j/n), c2 = cos(2*pi*j*k/n),
//
// giving all 2n adjacency eigenvalues.  Angles are evaluated directly in
// double precision (no manual argument reduction); exact for n <= 1e7.
#pragma once

#include <cstdint>
#include <vector>

#include "gp/graph.hpp"

namespace gp {

enum class SpectrumSource { ClosedForm, Oracle };

struct Spectrum {
    std::vector<double> values;  // sorted descending, 2n entries
    std::int64_t n = 0;
    std::int64_t k = 0;
    SpectrumSource source = SpectrumSource::ClosedForm;
};

struct EigPair {
    std::int64_t j = 0;
    double plus_value = 0.0;
    double minus_value = 0.0;
};

// The eigenvalue pair at index j, 0 <= j <= n-1.  Throws IndexOutOfRange.
EigPair eig_pair(const GpParams& p, std::int64_t j);

Spectrum closed_form_spectrum(const GpParams& p);

// values[0] - values[1]; throws TooFewValues if fewer than two entries.
double spectral_gap(const Spectrum& s);

// Proven gap bound 4*pi / (floor(sqrt(n)) - 1).  Throws OutOfRange for n < 4,
// where the denominator would vanish.
double gap_bound(std::int64_t n);

// Count of eigenvalues >= 3 - eps.  Throws NonpositiveEpsilon.
std::int64_t count_near_valency(const Spectrum& s, double eps);

// Second-largest eigenvalue straight from the closed form: the +branch
// maximum over 1 <= j <= n/2, floored at 1 (the -branch value at j = 0).
// No sort, O(n).
double second_largest_eigenvalue(const GpParams& p);

// floor(sqrt(n)) with integer correction, immune to FP edge cases.
std::int64_t isqrt(std::int64_t n);

// Which k to visit for a given n in a sweep.  All: every 1 <= k < n/2.
// Sample: `value` evenly strided k's.  Fixed: the single k = `value`.
struct KSelection {
    enum class Mode { All, Sample, Fixed };
    Mode mode = Mode::All;
    std::int64_t value = 0;
};

std::vector<std::int64_t> select_k_values(std::int64_t n, const KSelection& sel);

struct GapRow {
    std::int64_t n = 0;
    std::int64_t k = 0;
    double gap = 0.0;
    double bound = 0.0;
    bool ok = false;  // gap < bound
};

// Gap sweep over n in [n_lo, n_hi], k per selection; rows ordered by (n, k).
// Kernel: one cosine table per n shared across its k's, j range halved by the
// j <-> n-j symmetry, OpenMP across n, deterministic merge (output does not
// depend on thread count).  Requires 4 <= n_lo <= n_hi <= 1e6.
std::vector<GapRow> sweep_spectral_gap(std::int64_t n_lo, std::int64_t n_hi,
                                       const KSelection& sel);

// Reference sweep: plain loops, direct cosine per (n,k,j), full j range.
std::vector<GapRow> sweep_spectral_gap_serial(std::int64_t n_lo, std::int64_t n_hi,
                                              const KSelection& sel);

}  // namespace gp
